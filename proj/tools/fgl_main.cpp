#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fgl/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fgl: random functional-digraph generation, exact cycle-probability oracles,\n"
               "tree counting via the forest<->tree correspondence, and uniform tree sampling"};
  app.require_subcommand(1);

  fgl::RunConfig config;
  std::string output;

  auto add_report_options = [&](CLI::App* cmd) {
    cmd->add_option("--output", output, "write the report to this file instead of stdout");
    cmd->add_option("--format", config.format, "report format: json or csv")
        ->capture_default_str();
    cmd->add_flag("--timing", config.timing,
                  "measure elapsed_ms (off by default so identical runs give identical bytes)");
  };
  auto add_spec_options = [&](CLI::App* cmd) {
    cmd->add_option("--n", config.n, "vertex count");
    cmd->add_option("--p", config.p, "good probability, e.g. 1/2 (requires --n)");
    cmd->add_option("--p-list", config.p_list, "per-vertex good probabilities, e.g. 1/3,2/3");
    cmd->add_option("--pi", config.pi, "target distribution, e.g. 3/4,1/4 (default uniform)");
  };

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo estimate of the cycle probability with a Wilson 95% interval");
  add_spec_options(simulate);
  simulate->add_option("--p-sweep", config.p_sweep,
                       "comma-separated p values; one estimate per value");
  simulate->add_option("--trials", config.trials, "number of trials")->capture_default_str();
  simulate->add_option("--seed", config.seed, "master seed (default: env FGL_SEED, then 0)");
  simulate->add_option("--workers", config.workers, "parallel workers; the result is the same for any count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_report_options(simulate);

  CLI::App* exact = app.add_subcommand(
      "exact", "exact cycle probability by full enumeration, checked against the predicted value");
  add_spec_options(exact);
  exact->add_option("--workers", config.workers, "parallel workers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  exact->add_option("--limit-override", config.limit_override,
                    "raise the enumeration size limit (hard caps still apply)")
      ->check(CLI::PositiveNumber);
  add_report_options(exact);

  CLI::App* conditional = app.add_subcommand(
      "conditional", "exact cycle probability given that the first k vertices are good");
  conditional->add_option("--n", config.n, "vertex count")->required();
  conditional->add_option("--k", config.k, "number of good vertices")->required();
  conditional->add_option("--pi", config.pi, "target distribution (default uniform)");
  conditional->add_option("--limit-override", config.limit_override,
                          "raise the enumeration size limit")
      ->check(CLI::PositiveNumber);
  add_report_options(conditional);

  CLI::App* count = app.add_subcommand(
      "count-trees", "count acyclic configurations on n-1 vertices against n^(n-2)");
  count->add_option("--n", config.n, "labeled tree size")->required();
  count->add_option("--workers", config.workers, "parallel workers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  count->add_option("--limit-override", config.limit_override, "raise the counting size limit")
      ->check(CLI::PositiveNumber);
  add_report_options(count);

  CLI::App* sample = app.add_subcommand(
      "sample-tree", "draw a uniformly random labeled tree by rejection sampling");
  sample->add_option("--n", config.n, "tree size")->required();
  sample->add_option("--seed", config.seed, "master seed (default: env FGL_SEED, then 0)");
  add_report_options(sample);

  CLI::App* bijection = app.add_subcommand(
      "bijection", "map an acyclic configuration to its labeled tree, or back");
  bijection->add_option("--forest-out", config.forest_out,
                        "1-based out-edge targets, 0 for none, e.g. 2,0,0");
  bijection->add_option("--tree-parent", config.tree_parent,
                        "1-based parents of vertices 1..n-1 (root is n), e.g. 2,4,4");
  add_report_options(bijection);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  fgl::CliResult result = fgl::run_cli(config);

  if (!result.report.empty()) {
    if (output.empty()) {
      std::cout << result.report;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) {
        std::cerr << "cannot open output file '" << output << "'\n";
        return 2;
      }
      file << result.report;
    }
  }
  if (!result.error.empty()) std::cerr << result.error << "\n";
  return result.exit_code;
}
