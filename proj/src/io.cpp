#include "fextremal/io.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "fextremal/enumerate.hpp"
#include "fextremal/errors.hpp"
#include "fextremal/extremal.hpp"
#include "fextremal/invariants.hpp"
#include "fextremal/transform.hpp"

namespace fextremal {

namespace {

using ordered_json = nlohmann::ordered_json;

int report_error(std::ostream& err, const char* what, int code) {
  err << "error: " << what << "\n";
  return code;
}

// Shared exception-to-exit-code mapping for the cmd_* entry points. A
// DomainError means "input is not a tree" only when the command's input
// was a tree file; elsewhere it is an ordinary usage error.
template <typename Fn>
int guarded(std::ostream& err, bool tree_input, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return report_error(err, e.what(), exit_parse_error);
  } catch (const RouteMismatch& e) {
    return report_error(err, e.what(), exit_route_mismatch);
  } catch (const WriteError& e) {
    return report_error(err, e.what(), exit_unwritable);
  } catch (const NotConnected& e) {
    return report_error(err, e.what(), exit_invalid_tree);
  } catch (const HasCycle& e) {
    return report_error(err, e.what(), exit_invalid_tree);
  } catch (const SelfLoop& e) {
    return report_error(err, e.what(), exit_invalid_tree);
  } catch (const DuplicateEdge& e) {
    return report_error(err, e.what(), exit_invalid_tree);
  } catch (const WrongEdgeCount& e) {
    return report_error(err, e.what(), exit_invalid_tree);
  } catch (const DomainError& e) {
    return report_error(err, e.what(),
                        tree_input ? exit_invalid_tree : exit_error);
  } catch (const std::exception& e) {
    return report_error(err, e.what(), exit_error);
  }
}

Tree parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n)) throw ParseError("expected vertex count on the first line");
  if (n < 1 || n > std::numeric_limits<int>::max())
    throw ParseError("vertex count out of range");
  std::vector<std::pair<int, int>> edges;
  long long u = 0;
  long long v = 0;
  while (in >> u) {
    if (!(in >> v)) {
      if (in.eof()) throw ParseError("edge line is missing its second endpoint");
      in.clear();
      std::string tok;
      in >> tok;
      throw ParseError("unexpected token '" + tok + "' in edge list");
    }
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge endpoint out of range");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (!in.eof()) {
    in.clear();
    std::string tok;
    in >> tok;
    throw ParseError("unexpected token '" + tok + "' in edge list");
  }
  return validate_tree(static_cast<int>(n), std::move(edges));
}

Tree parse_json_tree(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("tree JSON needs an object with \"n\" and \"edges\"");
  long long n = 0;
  std::vector<std::pair<int, int>> edges;
  try {
    n = j.at("n").get<long long>();
    if (n < 1 || n > std::numeric_limits<int>::max())
      throw ParseError("vertex count out of range");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("each edge must be a two-element array");
      long long u = e.at(0).get<long long>();
      long long v = e.at(1).get<long long>();
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("edge endpoint out of range");
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed tree JSON: ") + e.what());
  }
  return validate_tree(static_cast<int>(n), std::move(edges));
}

std::vector<std::pair<int, int>> sorted_edges(const Tree& t) {
  std::vector<std::pair<int, int>> edges = t.edges;
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string vars_cell(const TableRow& row) {
  std::string cell;
  for (const auto& [name, value] : row.nonzero_ilp_vars) {
    if (!cell.empty()) cell += ';';
    cell += name + "=" + std::to_string(value);
  }
  return cell;
}

}  // namespace

Tree parse_tree_text(const std::string& text) {
  size_t k = text.find_first_not_of(" \t\r\n");
  if (k == std::string::npos) throw ParseError("empty tree file");
  if (text[k] == '{') return parse_json_tree(text);
  return parse_edge_list_text(text);
}

Tree read_tree_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_tree_text(ss.str());
}

std::string tree_to_edge_list(const Tree& t) {
  std::string text = std::to_string(t.n) + "\n";
  for (const auto& [u, v] : sorted_edges(t))
    text += std::to_string(u) + " " + std::to_string(v) + "\n";
  return text;
}

std::string tree_to_json(const Tree& t) {
  ordered_json j;
  j["n"] = t.n;
  j["edges"] = ordered_json::array();
  for (const auto& [u, v] : sorted_edges(t)) j["edges"].push_back({u, v});
  return j.dump();
}

std::string tree_to_dot(const Tree& t, const std::string& name) {
  std::string text = "graph " + name + " {\n";
  text += "  node [shape=circle, label=\"\"];\n";
  if (t.n == 1) text += "  0;\n";
  for (const auto& [u, v] : sorted_edges(t))
    text += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  text += "}\n";
  return text;
}

std::string solution_to_json(const IlpSolution& sol) {
  ordered_json j;
  long long n = 0;
  for (int i = 1; i <= sol.delta; ++i) n += sol.n_i[i];
  j["n"] = n;
  j["delta"] = sol.delta;
  ordered_json ni = ordered_json::object();
  for (int i = 1; i <= sol.delta; ++i)
    if (sol.n_i[i] > 0) ni[std::to_string(i)] = sol.n_i[i];
  j["ni"] = ni;
  ordered_json mij = ordered_json::object();
  for (const auto& [key, count] : sol.m_ij)
    mij[std::to_string(key.first) + "," + std::to_string(key.second)] = count;
  j["mij"] = mij;
  j["objective"] = sol.objective;
  return j.dump();
}

std::optional<long long> published_f_value(long long delta, long long n) {
  static const long long delta4[] = {30,  68,  76,  96,  134, 142,
                                     162, 200, 208, 228, 266, 274,
                                     294, 332, 340, 360, 398};
  static const long long delta5[] = {30,  68,  130, 138, 158, 196,
                                     258, 266, 286, 324, 326, 394,
                                     414, 452, 514, 522, 542};
  if (n < 4 || n > 20) return std::nullopt;
  if (delta == 4) return delta4[n - 4];
  if (delta == 5) return delta5[n - 4];
  return std::nullopt;
}

std::optional<long long> published_tree_count(long long delta, long long n) {
  static const long long delta4[] = {1, 1, 1, 1, 1, 2, 2, 1, 3,
                                     4, 2, 6, 8, 3, 14, 17, 5};
  static const long long delta5[] = {1, 1, 1, 1, 1, 1, 1, 1, 2,
                                     2, 1, 3, 4, 4, 2, 7, 8};
  if (n < 4 || n > 20) return std::nullopt;
  if (delta == 4) return delta4[n - 4];
  if (delta == 5) return delta5[n - 4];
  return std::nullopt;
}

namespace {

TableRow build_row(long long n, long long delta, int enum_ceiling) {
  TableRow row;
  row.n = n;
  if (n == 2) {
    // the optimizer's model needs n >= 3; the one-edge tree is immediate
    row.spec.entries.push_back({1, 2});
    row.f_value = 2;
    row.tree_count = 1;
    row.nonzero_ilp_vars = {{"n1", 2}, {"m1_1", 1}};
  } else {
    int d_eff = static_cast<int>(std::min(delta, n - 1));
    IlpSolution sol = solve(build_instance(n, d_eff));
    for (int i = d_eff; i >= 1; --i)
      if (sol.n_i[i] > 0) row.spec.entries.push_back({i, sol.n_i[i]});
    row.f_value = sol.objective;
    for (int i = 1; i <= d_eff; ++i)
      if (sol.n_i[i] > 0)
        row.nonzero_ilp_vars.push_back({"n" + std::to_string(i), sol.n_i[i]});
    for (const auto& [key, count] : sol.m_ij)
      row.nonzero_ilp_vars.push_back(
          {"m" + std::to_string(key.first) + "_" + std::to_string(key.second),
           count});
    // counting needs exhaustive enumeration; out of reach means "unknown"
    row.tree_count = n <= enum_ceiling
                         ? count_with_spec(static_cast<int>(n), row.spec,
                                           enum_ceiling)
                         : -1;
  }
  if (auto pub = published_f_value(delta, n); pub && *pub != row.f_value) {
    row.erratum = true;
    row.published_f = *pub;
  }
  if (auto pub = published_tree_count(delta, n);
      pub && row.tree_count >= 0 && *pub != row.tree_count) {
    row.erratum = true;
    row.published_count = *pub;
  }
  return row;
}

// "published_f=326;published_count=6" style summary of the divergences.
std::string erratum_note(const TableRow& row) {
  std::string note;
  if (row.published_f >= 0)
    note += "published_f=" + std::to_string(row.published_f);
  if (row.published_count >= 0) {
    if (!note.empty()) note += ";";
    note += "published_count=" + std::to_string(row.published_count);
  }
  return note;
}

int worker_count(long long rows) {
  long long workers = std::thread::hardware_concurrency();
  if (workers <= 0) workers = 1;
  if (const char* env = std::getenv("FEXTREMAL_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && parsed > 0) workers = parsed;
  }
  return static_cast<int>(std::max(1LL, std::min(workers, rows)));
}

}  // namespace

std::vector<TableRow> build_table_rows(long long delta, long long n_min,
                                       long long n_max, int enum_ceiling) {
  if (delta < 2) throw DomainError("table needs delta >= 2");
  if (n_min < 2 || n_max < n_min)
    throw DomainError("table needs 2 <= n_min <= n_max");
  long long count = n_max - n_min + 1;
  std::vector<TableRow> rows(static_cast<size_t>(count));
  std::atomic<long long> next{0};
  std::atomic<bool> stop{false};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto work = [&]() {
    while (!stop.load()) {
      long long k = next.fetch_add(1);
      if (k >= count) return;
      try {
        rows[static_cast<size_t>(k)] = build_row(n_min + k, delta, enum_ceiling);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop.store(true);
        return;
      }
    }
  };
  int threads = worker_count(count);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows,
                         const std::string& format) {
  if (format == "csv") {
    std::string text = "n,spec,tree_count,ilp_vars,f_value,erratum\n";
    for (const TableRow& row : rows) {
      text += std::to_string(row.n);
      text += ",\"" + format_degree_spec(row.spec) + "\",";
      if (row.tree_count >= 0) text += std::to_string(row.tree_count);
      text += "," + vars_cell(row) + ",";
      text += std::to_string(row.f_value) + ",";
      if (row.erratum) text += erratum_note(row);
      text += "\n";
    }
    return text;
  }
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const TableRow& row : rows) {
      ordered_json j;
      j["n"] = row.n;
      j["spec"] = format_degree_spec(row.spec);
      if (row.tree_count >= 0)
        j["tree_count"] = row.tree_count;
      else
        j["tree_count"] = nullptr;
      ordered_json vars = ordered_json::object();
      for (const auto& [name, value] : row.nonzero_ilp_vars)
        vars[name] = value;
      j["ilp_vars"] = vars;
      j["f_value"] = row.f_value;
      j["erratum"] = row.erratum;
      if (row.published_f >= 0) j["published_f"] = row.published_f;
      if (row.published_count >= 0) j["published_count"] = row.published_count;
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  if (format == "md") {
    std::string text = "| n | spec | tree_count | ilp_vars | f_value | note |\n";
    text += "|---:|---|---:|---|---:|---|\n";
    for (const TableRow& row : rows) {
      text += "| " + std::to_string(row.n);
      text += " | " + format_degree_spec(row.spec);
      text += " | " + (row.tree_count >= 0 ? std::to_string(row.tree_count)
                                           : std::string());
      text += " | " + vars_cell(row);
      text += " | " + std::to_string(row.f_value);
      text += " | ";
      if (row.erratum) text += erratum_note(row);
      text += " |\n";
    }
    return text;
  }
  throw DomainError("unknown table format '" + format + "'");
}

int cmd_compute(const std::string& input_path, const std::string& index,
                std::optional<double> alpha, std::ostream& out,
                std::ostream& err) {
  return guarded(err, true, [&]() {
    Tree t = read_tree_file(input_path);
    IndexValue value;
    if (index == "f") {
      value = f_index(t);
    } else if (index == "m1") {
      value = first_zagreb(t);
    } else if (index == "m2") {
      value = second_zagreb(t);
    } else if (index == "m1alpha" || index == "r0alpha") {
      if (!alpha) {
        err << "error: index '" << index << "' needs --alpha\n";
        return exit_error;
      }
      value = general_first_zagreb(t, *alpha);
    } else if (index == "randic") {
      value = randic_index(t);
    } else {
      err << "error: unknown index '" << index << "'\n";
      return exit_error;
    }
    out << value.str() << "\n";
    return exit_ok;
  });
}

int cmd_extremal(long long n, long long delta, const std::string& route,
                 int enum_ceiling, std::ostream& out, std::ostream& err) {
  return guarded(err, false, [&]() {
    bool do_closed = route == "closed" || route == "all";
    bool do_ilp = route == "ilp" || route == "all";
    bool do_enum = route == "enum" || route == "all";
    if (!do_closed && !do_ilp && !do_enum) {
      err << "error: unknown route '" << route << "'\n";
      return exit_error;
    }
    if (route == "enum" && n > enum_ceiling) {
      err << "error: route enum needs n <= " << enum_ceiling << "\n";
      return exit_error;
    }

    std::optional<long long> f_closed, f_ilp, f_enum;
    std::string s_closed, s_ilp, s_enum;
    long long enum_count = 0;

    if (do_closed) {
      ExtremalSpec es = extremal_spec(n, delta);
      f_closed = es.f_value;
      s_closed = format_degree_spec(es.spec);
      out << "route closed: F=" << *f_closed << " spec=" << s_closed << "\n";
    }
    if (do_ilp) {
      if (n == 2) {
        // below the optimizer's model; the one-edge tree is the answer
        f_ilp = 2;
        s_ilp = "1^2";
      } else {
        int d_eff = static_cast<int>(std::min(delta, n - 1));
        IlpSolution sol = solve(build_instance(n, d_eff));
        DegreeSpec spec;
        for (int i = d_eff; i >= 1; --i)
          if (sol.n_i[i] > 0) spec.entries.push_back({i, sol.n_i[i]});
        f_ilp = sol.objective;
        s_ilp = format_degree_spec(spec);
      }
      out << "route ilp: F=" << *f_ilp << " spec=" << s_ilp << "\n";
    }
    if (do_enum) {
      if (n <= enum_ceiling) {
        MaxFReport report = max_f_search(static_cast<int>(n),
                                         static_cast<int>(std::min<long long>(
                                             delta, enum_ceiling)),
                                         enum_ceiling);
        f_enum = report.f_max;
        for (size_t i = 0; i < report.winning_specs.size(); ++i) {
          if (i > 0) s_enum += "|";
          s_enum += format_degree_spec(report.winning_specs[i]);
          enum_count += report.counts[i];
        }
        out << "route enum: F=" << *f_enum << " spec=" << s_enum
            << " count=" << enum_count << "\n";
      } else {
        out << "route enum: skipped (n exceeds enumeration ceiling "
            << enum_ceiling << ")\n";
      }
    }

    if (route == "all") {
      bool ok = *f_closed == *f_ilp && s_closed == s_ilp;
      if (f_enum) ok = ok && *f_enum == *f_closed && s_enum == s_closed;
      if (!ok) {
        std::string detail = "routes disagree at n=" + std::to_string(n) +
                             " delta=" + std::to_string(delta) +
                             ": closed F=" + std::to_string(*f_closed) +
                             " spec=" + s_closed +
                             "; ilp F=" + std::to_string(*f_ilp) +
                             " spec=" + s_ilp;
        if (f_enum)
          detail += "; enum F=" + std::to_string(*f_enum) + " spec=" + s_enum;
        throw RouteMismatch(detail);
      }
      out << "agreement: ok\n";
    }

    long long computed = f_closed ? *f_closed : (f_ilp ? *f_ilp : *f_enum);
    if (auto pub = published_f_value(delta, n); pub && *pub != computed)
      out << "erratum: published value " << *pub << " differs from computed "
          << computed << "\n";
    if (f_enum) {
      if (auto pub = published_tree_count(delta, n); pub && *pub != enum_count)
        out << "erratum: published tree count " << *pub
            << " differs from computed " << enum_count << "\n";
    }
    return exit_ok;
  });
}

int cmd_table(long long delta, long long n_min, long long n_max,
              const std::string& format, int enum_ceiling,
              const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  return guarded(err, false, [&]() {
    std::vector<TableRow> rows =
        build_table_rows(delta, n_min, n_max, enum_ceiling);
    std::string text = format_table(rows, format);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw WriteError("cannot open '" + out_path + "' for writing");
      f << text;
      f.flush();
      if (!f) throw WriteError("failed while writing '" + out_path + "'");
    }
    return exit_ok;
  });
}

int cmd_export(long long n, long long delta, const std::string& format,
               const std::string& out_dir, int enum_ceiling, std::ostream& out,
               std::ostream& err) {
  return guarded(err, false, [&]() {
    if (format != "dot" && format != "json") {
      err << "error: unknown export format '" << format << "'\n";
      return exit_error;
    }
    if (n > enum_ceiling) {
      err << "error: export enumerates trees and needs n <= " << enum_ceiling
          << "\n";
      return exit_error;
    }
    if (!out_dir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      if (ec)
        throw WriteError("cannot create directory '" + out_dir +
                         "': " + ec.message());
    }
    MaxFReport report =
        max_f_search(static_cast<int>(n),
                     static_cast<int>(std::min<long long>(delta, enum_ceiling)),
                     enum_ceiling, /*representative_cap=*/1000000);
    long long k = 0;
    for (size_t s = 0; s < report.winning_specs.size(); ++s) {
      for (const Tree& t : report.representatives[s]) {
        std::string stem = "extremal_n" + std::to_string(n) + "_d" +
                           std::to_string(delta) + "_" + std::to_string(k);
        std::string name = stem + (format == "dot" ? ".dot" : ".json");
        std::string path = out_dir.empty() ? name : out_dir + "/" + name;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw WriteError("cannot open '" + path + "' for writing");
        if (format == "dot")
          f << tree_to_dot(t, stem);
        else
          f << tree_to_json(t) << "\n";
        f.flush();
        if (!f) throw WriteError("failed while writing '" + path + "'");
        out << path << "\n";
        ++k;
      }
    }
    return exit_ok;
  });
}

int cmd_generate(int n, int max_degree, const std::string& spec_text,
                 int enum_ceiling, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, false, [&]() {
    EnumFilter filter;
    filter.max_degree = max_degree;
    if (!spec_text.empty()) {
      DegreeSpec spec = parse_degree_spec(spec_text);
      if (filter.max_degree == 0)
        for (const DegreeSpecEntry& entry : spec.entries)
          filter.max_degree = std::max(filter.max_degree, entry.degree);
      filter.degree_spec = std::move(spec);
    }
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::binary);
      if (!file) throw WriteError("cannot open '" + out_path + "' for writing");
    }
    std::ostream& sink = out_path.empty() ? out : file;
    generate_free_trees(n, filter, [&](const Tree& t) {
      sink << tree_to_json(t) << "\n";
      return true;
    }, enum_ceiling);
    if (!out_path.empty()) {
      file.flush();
      if (!file) throw WriteError("failed while writing '" + out_path + "'");
    }
    return exit_ok;
  });
}

int cmd_extremalize(const std::string& input_path, long long delta,
                    const std::string& trace_path,
                    const std::string& out_path, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, true, [&]() {
    Tree t = read_tree_file(input_path);
    std::ofstream trace_file;
    ShiftTraceSink sink;
    if (!trace_path.empty()) {
      trace_file.open(trace_path, std::ios::binary);
      if (!trace_file)
        throw WriteError("cannot open '" + trace_path + "' for writing");
      sink = [&trace_file](const ShiftRecord& rec) {
        ordered_json j;
        j["step"] = rec.step;
        j["u"] = rec.u;
        j["v"] = rec.v;
        j["w"] = rec.w;
        j["f_before"] = rec.f_before;
        j["f_after"] = rec.f_after;
        trace_file << j.dump() << "\n";
      };
    }
    int delta_int = static_cast<int>(
        std::min<long long>(delta, std::numeric_limits<int>::max()));
    Tree result = extremalize(t, delta_int, sink);
    if (!trace_path.empty()) {
      trace_file.flush();
      if (!trace_file)
        throw WriteError("failed while writing '" + trace_path + "'");
    }
    std::string result_json = tree_to_json(result);
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw WriteError("cannot open '" + out_path + "' for writing");
      f << result_json << "\n";
      f.flush();
      if (!f) throw WriteError("failed while writing '" + out_path + "'");
    } else {
      out << result_json << "\n";
    }
    out << "F=" << f_index(result).exact
        << " spec=" << format_degree_spec(degree_spec(degrees(result))) << "\n";
    return exit_ok;
  });
}

}  // namespace fextremal
