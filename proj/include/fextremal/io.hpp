#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fextremal/graph.hpp"
#include "fextremal/ilp.hpp"

namespace fextremal {

// Exit codes shared by the CLI and the cmd_* entry points.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;           // anything not covered below
inline constexpr int exit_parse_error = 2;     // unreadable or malformed input
inline constexpr int exit_invalid_tree = 3;    // input parsed but is not a tree
inline constexpr int exit_route_mismatch = 4;  // cross-check routes disagree
inline constexpr int exit_unwritable = 5;      // output path cannot be written

// Tree file formats: edge-list text (first line n, then "u v" per line)
// and JSON {"n": int, "edges": [[u,v], ...]}, detected by content. Parse
// failures throw ParseError; structural failures throw the validate_tree
// errors.
Tree parse_tree_text(const std::string& text);
Tree read_tree_file(const std::string& path);

std::string tree_to_edge_list(const Tree& t);
std::string tree_to_json(const Tree& t);  // single line
std::string tree_to_dot(const Tree& t, const std::string& name);

// {"n":..,"delta":..,"ni":{"1":c,..},"mij":{"1,4":c,..},"objective":..}
std::string solution_to_json(const IlpSolution& sol);

// One row of the reproduction table: extremal spec, number of isomorphism
// classes realizing it, the solver's nonzero variables, and the F value.
// When a published reference value exists and differs from the computed
// one, the row carries an erratum flag with the divergent published
// value(s); -1 marks "no divergence" for that field.
struct TableRow {
  long long n = 0;
  DegreeSpec spec;
  long long tree_count = 0;
  std::vector<std::pair<std::string, long long>> nonzero_ilp_vars;
  long long f_value = 0;
  bool erratum = false;
  long long published_f = -1;
  long long published_count = -1;
};

// Published reference values to diff against, available for delta in
// {4, 5} and 4 <= n <= 20: the F value and the tree count per row.
std::optional<long long> published_f_value(long long delta, long long n);
std::optional<long long> published_tree_count(long long delta, long long n);

// Rows are independent and computed in parallel; FEXTREMAL_THREADS caps
// the worker count (default: hardware concurrency). Assembly order is
// fixed by n, so output is deterministic regardless of thread count.
std::vector<TableRow> build_table_rows(long long delta, long long n_min,
                                       long long n_max, int enum_ceiling);

// format is one of csv, json, md
std::string format_table(const std::vector<TableRow>& rows,
                         const std::string& format);

int cmd_compute(const std::string& input_path, const std::string& index,
                std::optional<double> alpha, std::ostream& out,
                std::ostream& err);

// route is one of closed, ilp, enum, all; "all" additionally asserts
// agreement and exits with exit_route_mismatch on any difference.
int cmd_extremal(long long n, long long delta, const std::string& route,
                 int enum_ceiling, std::ostream& out, std::ostream& err);

// Writes the formatted table to out_path, or to out when out_path is
// empty.
int cmd_table(long long delta, long long n_min, long long n_max,
              const std::string& format, int enum_ceiling,
              const std::string& out_path, std::ostream& out,
              std::ostream& err);

// Writes one file per extremal representative into out_dir
// (extremal_n{n}_d{delta}_{k}.{dot|json}) and prints each path written.
int cmd_export(long long n, long long delta, const std::string& format,
               const std::string& out_dir, int enum_ceiling,
               std::ostream& out, std::ostream& err);

// Streams every tree on n vertices (one JSON line each), optionally
// restricted by a maximum degree (0 = unbounded) and/or an exact degree
// spec such as "4^2,1^6".
int cmd_generate(int n, int max_degree, const std::string& spec_text,
                 int enum_ceiling, const std::string& out_path,
                 std::ostream& out, std::ostream& err);

// Runs the shift iteration on the input tree under the given degree
// bound; prints the resulting tree (JSON line) followed by a summary
// line, and optionally appends one JSON line per shift to trace_path.
int cmd_extremalize(const std::string& input_path, long long delta,
                    const std::string& trace_path,
                    const std::string& out_path, std::ostream& out,
                    std::ostream& err);

}  // namespace fextremal
