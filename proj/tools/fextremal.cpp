#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fextremal/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "degree-based topological indices of trees and extremal trees under a "
      "maximum-degree bound"};
  app.require_subcommand(1);

  auto* compute_cmd =
      app.add_subcommand("compute", "evaluate an index on a tree file");
  std::string compute_input;
  std::string compute_index = "f";
  double alpha_value = 0.0;
  compute_cmd->add_option("input", compute_input,
                          "tree file (edge list or JSON)")
      ->required();
  compute_cmd->add_option("--index", compute_index,
                          "f, m1, m2, m1alpha, r0alpha, or randic");
  CLI::Option* alpha_opt = compute_cmd->add_option(
      "--alpha", alpha_value, "exponent for m1alpha / r0alpha");

  auto* extremal_cmd = app.add_subcommand(
      "extremal", "extremal tree data for given n and delta");
  long long ext_n = 0;
  long long ext_delta = 0;
  std::string ext_route = "all";
  int ext_ceiling = 24;
  extremal_cmd->add_option("--n", ext_n, "number of vertices")->required();
  extremal_cmd->add_option("--delta", ext_delta, "maximum degree bound")
      ->required();
  extremal_cmd->add_option("--route", ext_route, "closed, ilp, enum, or all");
  extremal_cmd->add_option("--enum-ceiling", ext_ceiling,
                           "largest n the enumeration route accepts");

  auto* table_cmd =
      app.add_subcommand("table", "tabulate extremal data over a range of n");
  long long tab_delta = 0;
  long long tab_min = 0;
  long long tab_max = 0;
  std::string tab_format = "csv";
  std::string tab_out;
  int tab_ceiling = 24;
  table_cmd->add_option("--delta", tab_delta, "maximum degree bound")
      ->required();
  table_cmd->add_option("--n-min", tab_min, "first row")->required();
  table_cmd->add_option("--n-max", tab_max, "last row")->required();
  table_cmd->add_option("--format", tab_format, "csv, json, or md");
  table_cmd->add_option("--out", tab_out, "output file (default: stdout)");
  table_cmd->add_option("--enum-ceiling", tab_ceiling,
                        "largest n whose tree count is enumerated");

  auto* export_cmd =
      app.add_subcommand("export", "write extremal tree files");
  long long exp_n = 0;
  long long exp_delta = 0;
  std::string exp_format = "dot";
  std::string exp_out;
  int exp_ceiling = 24;
  export_cmd->add_option("--n", exp_n, "number of vertices")->required();
  export_cmd->add_option("--delta", exp_delta, "maximum degree bound")
      ->required();
  export_cmd->add_option("--format", exp_format, "dot or json");
  export_cmd->add_option("--out", exp_out,
                         "output directory (default: current directory)");
  export_cmd->add_option("--enum-ceiling", exp_ceiling,
                         "largest n the enumeration accepts");

  auto* generate_cmd = app.add_subcommand(
      "generate", "stream all trees on n vertices, one JSON line each");
  int gen_n = 0;
  int gen_delta = 0;
  int gen_ceiling = 24;
  std::string gen_spec;
  std::string gen_out;
  generate_cmd->add_option("--n", gen_n, "number of vertices")->required();
  generate_cmd->add_option("--delta", gen_delta,
                           "maximum degree (0 = unbounded)");
  generate_cmd->add_option("--spec", gen_spec,
                           "exact degree spec filter, e.g. 4^2,1^6");
  generate_cmd->add_option("--out", gen_out, "output file (default: stdout)");
  generate_cmd->add_option("--enum-ceiling", gen_ceiling,
                           "largest n the enumeration accepts");

  auto* extremalize_cmd = app.add_subcommand(
      "extremalize", "apply the shift iteration to a tree file");
  std::string extz_input;
  std::string extz_trace;
  std::string extz_out;
  long long extz_delta = 0;
  extremalize_cmd->add_option("input", extz_input,
                              "tree file (edge list or JSON)")
      ->required();
  extremalize_cmd->add_option("--delta", extz_delta, "maximum degree bound")
      ->required();
  extremalize_cmd->add_option("--trace", extz_trace,
                              "write one JSON line per shift to this file");
  extremalize_cmd->add_option(
      "--out", extz_out, "write the resulting tree here (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? fextremal::exit_ok : fextremal::exit_error;
  }

  if (compute_cmd->parsed()) {
    std::optional<double> alpha;
    if (alpha_opt->count() > 0) alpha = alpha_value;
    return fextremal::cmd_compute(compute_input, compute_index, alpha,
                                  std::cout, std::cerr);
  }
  if (extremal_cmd->parsed())
    return fextremal::cmd_extremal(ext_n, ext_delta, ext_route, ext_ceiling,
                                   std::cout, std::cerr);
  if (table_cmd->parsed())
    return fextremal::cmd_table(tab_delta, tab_min, tab_max, tab_format,
                                tab_ceiling, tab_out, std::cout, std::cerr);
  if (export_cmd->parsed())
    return fextremal::cmd_export(exp_n, exp_delta, exp_format, exp_out,
                                 exp_ceiling, std::cout, std::cerr);
  if (generate_cmd->parsed())
    return fextremal::cmd_generate(gen_n, gen_delta, gen_spec, gen_ceiling,
                                   gen_out, std::cout, std::cerr);
  if (extremalize_cmd->parsed())
    return fextremal::cmd_extremalize(extz_input, extz_delta, extz_trace,
                                      extz_out, std::cout, std::cerr);
  return fextremal::exit_error;
}
