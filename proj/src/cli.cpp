#include "fgl/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "fgl/bijection.hpp"
#include "fgl/errors.hpp"
#include "fgl/exact_oracle.hpp"
#include "fgl/gen_spec.hpp"
#include "fgl/monte_carlo.hpp"

namespace fgl {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Rational parse_rational_field(const std::string& text, const std::string& field) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(field + ": " + e.what());
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& field) {
  std::vector<std::int64_t> out;
  for (const std::string& part : split(text, ',')) {
    if (part.empty() || part.size() > 18 ||
        part.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError(field + ": '" + part + "' is not a valid vertex id");
    }
    out.push_back(std::stoll(part));
  }
  return out;
}

std::uint64_t resolve_seed(const RunConfig& config) {
  if (config.seed) return *config.seed;
  if (const char* env = std::getenv("FGL_SEED")) {
    std::string text = env;
    if (text.empty() || text.size() > 20 ||
        text.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("FGL_SEED: '" + text + "' is not a 64-bit seed");
    }
    try {
      return std::stoull(text);
    } catch (const std::out_of_range&) {
      throw ValidationError("FGL_SEED: '" + text + "' is not a 64-bit seed");
    }
  }
  return 0;
}

int require_n(const RunConfig& config) {
  if (!config.n) throw ValidationError("n: required for subcommand '" + config.subcommand + "'");
  if (*config.n < 1) throw ValidationError("n: must be >= 1");
  return *config.n;
}

// Builds the GenSpec for simulate/exact from (n, p | p-list, pi).
GenSpec resolve_spec(const RunConfig& config) {
  if (config.p && config.p_list) {
    throw ValidationError("p, p-list: exactly one of the two may be set");
  }
  if (!config.p && !config.p_list) {
    throw ValidationError("p, p-list: one of the two is required");
  }
  std::vector<Rational> good_prob;
  int n;
  if (config.p) {
    n = require_n(config);
    good_prob.assign(static_cast<std::size_t>(n), parse_rational_field(*config.p, "p"));
  } else {
    good_prob = parse_rational_list(*config.p_list, "p-list");
    n = static_cast<int>(good_prob.size());
    if (config.n && *config.n != n) {
      throw ValidationError("n: " + std::to_string(*config.n) + " disagrees with p-list length " +
                            std::to_string(n));
    }
  }
  std::vector<Rational> target;
  if (config.pi) {
    target = parse_rational_list(*config.pi, "pi");
    if (static_cast<int>(target.size()) != n) {
      throw ValidationError("pi: has " + std::to_string(target.size()) + " entries, expected " +
                            std::to_string(n));
    }
  } else {
    target.assign(static_cast<std::size_t>(n), Rational(1, static_cast<std::uint64_t>(n)));
  }
  GenSpec spec{n, std::move(good_prob), std::move(target)};
  validate_spec(spec);
  return spec;
}

// The generation process behind the tree subcommands: n-1 vertices, each
// equally likely to point at any of them or at nothing.
GenSpec tree_construction_spec(int tree_n) {
  int m = tree_n - 1;
  return make_spec_uniform(m, Rational(static_cast<std::uint64_t>(m),
                                       static_cast<std::uint64_t>(tree_n)));
}

ordered_json spec_json(const GenSpec& spec) {
  ordered_json j;
  j["n"] = spec.n;
  ordered_json good = ordered_json::array();
  for (const Rational& p : spec.good_prob) good.push_back(p.str());
  j["good_prob"] = std::move(good);
  ordered_json target = ordered_json::array();
  for (const Rational& w : spec.target_dist) target.push_back(w.str());
  j["target_dist"] = std::move(target);
  return j;
}

std::string rationals_csv(const std::vector<Rational>& values) {
  std::vector<std::string> parts;
  parts.reserve(values.size());
  for (const Rational& v : values) parts.push_back(v.str());
  return join(parts, ";");
}

ordered_json tree_json(const LabeledTree& tree) {
  ordered_json j;
  j["n"] = tree.n;
  ordered_json parent = ordered_json::array();
  for (std::int32_t p : tree.parent) parent.push_back(p + 1);
  j["parent"] = std::move(parent);
  ordered_json edges = ordered_json::array();
  for (int v = 0; v + 1 < tree.n; ++v) {
    edges.push_back(ordered_json::array({v + 1, tree.parent[v] + 1}));
  }
  j["edges"] = std::move(edges);
  return j;
}

ordered_json forest_json(const FunctionalGraph& g) {
  ordered_json j;
  j["m"] = g.n;
  ordered_json out = ordered_json::array();
  for (std::int32_t t : g.out) out.push_back(t == kNoEdge ? 0 : t + 1);
  j["out"] = std::move(out);
  return j;
}

ordered_json estimate_json(const EstimateResult& r) {
  ordered_json j;
  j["trials"] = r.trials;
  j["cycle_count"] = r.cycle_count;
  j["estimate"] = r.estimate;
  j["ci_low"] = r.ci_low;
  j["ci_high"] = r.ci_high;
  return j;
}

struct ModeOutput {
  ordered_json spec;         // null when per-entry specs apply (sweep)
  ordered_json result;
  bool claim_failed = false;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

ModeOutput run_simulate(const RunConfig& config, std::uint64_t seed) {
  ModeOutput out;
  if (config.trials == 0) throw ValidationError("trials: must be >= 1");
  if (config.workers < 1) throw ValidationError("workers: must be >= 1");
  out.csv_header = {"n",        "good_prob", "target_dist", "trials",  "cycle_count",
                    "estimate", "ci_low",    "ci_high",     "seed"};
  auto csv_row = [&](const EstimateResult& r) {
    return std::vector<std::string>{
        std::to_string(r.spec.n),    rationals_csv(r.spec.good_prob),
        rationals_csv(r.spec.target_dist), std::to_string(r.trials),
        std::to_string(r.cycle_count),     format_double(r.estimate),
        format_double(r.ci_low),           format_double(r.ci_high),
        std::to_string(seed)};
  };

  if (config.p_sweep) {
    if (config.p || config.p_list) {
      throw ValidationError("p-sweep: cannot be combined with p or p-list");
    }
    int n = require_n(config);
    std::vector<GenSpec> specs;
    for (const Rational& p : parse_rational_list(*config.p_sweep, "p-sweep")) {
      if (config.pi) {
        specs.push_back(make_spec_weighted(n, p, parse_rational_list(*config.pi, "pi")));
      } else {
        specs.push_back(make_spec_uniform(n, p));
      }
    }
    std::vector<EstimateResult> results = sweep(specs, config.trials, seed, config.workers);
    ordered_json entries = ordered_json::array();
    for (const EstimateResult& r : results) {
      ordered_json e;
      e["spec"] = spec_json(r.spec);
      e.update(estimate_json(r));
      entries.push_back(std::move(e));
      out.csv_rows.push_back(csv_row(r));
    }
    out.result["results"] = std::move(entries);
    return out;
  }

  GenSpec spec = resolve_spec(config);
  EstimateResult r = estimate_cycle_probability(spec, config.trials, seed, config.workers);
  out.spec = spec_json(spec);
  out.result = estimate_json(r);
  out.csv_rows.push_back(csv_row(r));
  return out;
}

ModeOutput run_exact(const RunConfig& config, std::uint64_t seed) {
  ModeOutput out;
  if (config.workers < 1) throw ValidationError("workers: must be >= 1");
  GenSpec spec = resolve_spec(config);
  int limit = config.limit_override.value_or(kDefaultEnumLimit);
  ExactReport report = exact_cycle_probability(spec, config.workers, limit);
  out.spec = spec_json(spec);
  out.result["total_outcomes"] = report.total_outcomes;
  out.result["cycle_probability"] = report.cycle_probability.str();
  out.result["claimed_value"] =
      report.claimed_value ? ordered_json(report.claimed_value->str()) : ordered_json(nullptr);
  out.result["matches_claim"] =
      report.matches_claim ? ordered_json(*report.matches_claim) : ordered_json(nullptr);
  out.claim_failed = report.matches_claim && !*report.matches_claim;
  out.csv_header = {"n",           "good_prob",     "target_dist", "total_outcomes",
                    "cycle_probability", "claimed_value", "matches_claim", "seed"};
  out.csv_rows.push_back({std::to_string(spec.n), rationals_csv(spec.good_prob),
                          rationals_csv(spec.target_dist), std::to_string(report.total_outcomes),
                          report.cycle_probability.str(),
                          report.claimed_value ? report.claimed_value->str() : "",
                          report.matches_claim ? (*report.matches_claim ? "true" : "false") : "",
                          std::to_string(seed)});
  return out;
}

ModeOutput run_conditional(const RunConfig& config, std::uint64_t seed) {
  ModeOutput out;
  int n = require_n(config);
  if (!config.k) throw ValidationError("k: required for subcommand 'conditional'");
  int k = *config.k;
  std::vector<Rational> pi;
  if (config.pi) {
    pi = parse_rational_list(*config.pi, "pi");
  } else {
    pi.assign(static_cast<std::size_t>(n), Rational(1, static_cast<std::uint64_t>(n)));
  }
  int limit = config.limit_override.value_or(kDefaultEnumLimit);
  Rational probability = exact_conditional_cycle_probability(n, k, pi, limit);

  // Conditioning on the good set is the same process with good_prob pinned
  // to 1 on the first k vertices and 0 elsewhere.
  std::vector<Rational> good(static_cast<std::size_t>(n), Rational(0));
  for (int v = 0; v < k; ++v) good[v] = Rational(1);
  GenSpec spec{n, std::move(good), pi};
  out.spec = spec_json(spec);

  bool uniform_pi = spec.uniform_target();
  std::optional<Rational> claimed;
  if (uniform_pi) {
    claimed = Rational(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n));
  }
  out.result["n"] = n;
  out.result["k"] = k;
  out.result["cycle_probability"] = probability.str();
  out.result["claimed_value"] = claimed ? ordered_json(claimed->str()) : ordered_json(nullptr);
  out.result["matches_claim"] =
      claimed ? ordered_json(probability == *claimed) : ordered_json(nullptr);
  out.claim_failed = claimed && probability != *claimed;
  out.csv_header = {"n", "k", "pi", "cycle_probability", "claimed_value", "matches_claim", "seed"};
  out.csv_rows.push_back({std::to_string(n), std::to_string(k), rationals_csv(spec.target_dist),
                          probability.str(), claimed ? claimed->str() : "",
                          claimed ? (probability == *claimed ? "true" : "false") : "",
                          std::to_string(seed)});
  return out;
}

ModeOutput run_count_trees(const RunConfig& config, std::uint64_t seed) {
  ModeOutput out;
  if (config.workers < 1) throw ValidationError("workers: must be >= 1");
  int n = require_n(config);
  if (n < 2) throw ValidationError("n: must be >= 2 for count-trees");
  int limit = config.limit_override.value_or(kDefaultCountLimit);
  CayleyCountReport report = count_special_graphs(n, config.workers, limit);
  out.spec = spec_json(tree_construction_spec(n));
  out.result["n"] = n;
  out.result["total_graphs"] = report.total_graphs;
  out.result["special_count"] = report.special_count;
  out.result["formula_value"] = report.formula_value;
  out.result["matches"] = report.matches;
  out.claim_failed = !report.matches;
  out.csv_header = {"n", "total_graphs", "special_count", "formula_value", "matches", "seed"};
  out.csv_rows.push_back({std::to_string(n), std::to_string(report.total_graphs),
                          std::to_string(report.special_count),
                          std::to_string(report.formula_value),
                          report.matches ? "true" : "false", std::to_string(seed)});
  return out;
}

ModeOutput run_sample_tree(const RunConfig& config, std::uint64_t seed) {
  ModeOutput out;
  int n = require_n(config);
  if (n < 2) throw ValidationError("n: must be >= 2 for sample-tree");
  SplitMix64 rng = substream(seed, 0, 0);
  TreeSample sample = sample_uniform_tree(n, rng);
  out.spec = spec_json(tree_construction_spec(n));
  out.result = tree_json(sample.tree);
  out.result["attempts"] = sample.attempts;
  std::vector<std::string> parent, edges;
  for (std::int32_t p : sample.tree.parent) parent.push_back(std::to_string(p + 1));
  for (int v = 0; v + 1 < sample.tree.n; ++v) {
    edges.push_back(std::to_string(v + 1) + "-" + std::to_string(sample.tree.parent[v] + 1));
  }
  out.csv_header = {"n", "parent", "edges", "attempts", "seed"};
  out.csv_rows.push_back({std::to_string(n), join(parent, ";"), join(edges, ";"),
                          std::to_string(sample.attempts), std::to_string(seed)});
  return out;
}

ModeOutput run_bijection(const RunConfig& config, std::uint64_t seed) {
  ModeOutput out;
  if (config.tree_parent.has_value() == config.forest_out.has_value()) {
    throw ValidationError("tree-parent, forest-out: exactly one of the two is required");
  }
  LabeledTree tree;
  FunctionalGraph forest;
  std::string direction;
  if (config.forest_out) {
    direction = "forest_to_tree";
    std::vector<std::int64_t> targets = parse_int_list(*config.forest_out, "forest-out");
    forest.n = static_cast<int>(targets.size());
    for (std::int64_t t : targets) {
      if (t > forest.n) {
        throw ValidationError("forest-out: target " + std::to_string(t) + " out of range 0.." +
                              std::to_string(forest.n));
      }
      forest.out.push_back(t == 0 ? kNoEdge : static_cast<std::int32_t>(t - 1));
    }
    tree = forest_to_tree(forest);
  } else {
    direction = "tree_to_forest";
    std::vector<std::int64_t> parents = parse_int_list(*config.tree_parent, "tree-parent");
    tree.n = static_cast<int>(parents.size()) + 1;
    for (std::int64_t p : parents) {
      if (p < 1 || p > tree.n) {
        throw ValidationError("tree-parent: parent " + std::to_string(p) + " out of range 1.." +
                              std::to_string(tree.n));
      }
      tree.parent.push_back(static_cast<std::int32_t>(p - 1));
    }
    forest = tree_to_forest(tree);
  }
  out.spec = spec_json(tree_construction_spec(tree.n));
  out.result["direction"] = direction;
  out.result["forest"] = forest_json(forest);
  out.result["tree"] = tree_json(tree);

  std::vector<std::string> forest_csv, parent_csv;
  for (std::int32_t t : forest.out) forest_csv.push_back(std::to_string(t == kNoEdge ? 0 : t + 1));
  for (std::int32_t p : tree.parent) parent_csv.push_back(std::to_string(p + 1));
  out.csv_header = {"direction", "forest_out", "tree_parent", "seed"};
  out.csv_rows.push_back(
      {direction, join(forest_csv, ";"), join(parent_csv, ";"), std::to_string(seed)});
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const std::string& mode, const ModeOutput& out, long long elapsed_ms) {
  std::vector<std::string> header{"mode"};
  header.insert(header.end(), out.csv_header.begin(), out.csv_header.end());
  header.push_back("elapsed_ms");
  std::string text = join(header, ",") + "\n";
  for (const std::vector<std::string>& row : out.csv_rows) {
    std::vector<std::string> cells{mode};
    for (const std::string& cell : row) cells.push_back(csv_escape(cell));
    cells.push_back(std::to_string(elapsed_ms));
    text += join(cells, ",") + "\n";
  }
  return text;
}

}  // namespace

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& field) {
  if (text.empty()) throw ValidationError(field + ": empty list");
  std::vector<Rational> out;
  for (const std::string& part : split(text, ',')) {
    out.push_back(parse_rational_field(part, field));
  }
  return out;
}

CliResult run_cli(const RunConfig& config) {
  CliResult result;
  try {
    std::uint64_t seed = resolve_seed(config);
    auto start = std::chrono::steady_clock::now();

    ModeOutput out;
    std::string mode = config.subcommand;
    if (config.subcommand == "simulate") {
      out = run_simulate(config, seed);
      if (config.p_sweep) mode = "sweep";
    } else if (config.subcommand == "exact") {
      out = run_exact(config, seed);
    } else if (config.subcommand == "conditional") {
      out = run_conditional(config, seed);
    } else if (config.subcommand == "count-trees") {
      out = run_count_trees(config, seed);
    } else if (config.subcommand == "sample-tree") {
      out = run_sample_tree(config, seed);
    } else if (config.subcommand == "bijection") {
      out = run_bijection(config, seed);
    } else {
      throw ValidationError("subcommand: unknown '" + config.subcommand + "'");
    }

    // elapsed_ms is 0 unless --timing is given: reports are byte-identical
    // across reruns by default, and wall time is opt-in.
    long long elapsed_ms = 0;
    if (config.timing) {
      elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    }

    if (config.format == "json") {
      ordered_json report;
      report["schema_version"] = 1;
      report["mode"] = mode;
      report["spec"] = out.spec;
      report["result"] = out.result;
      report["seed"] = seed;
      report["elapsed_ms"] = elapsed_ms;
      result.report = report.dump(2) + "\n";
    } else if (config.format == "csv") {
      result.report = render_csv(mode, out, elapsed_ms);
    } else {
      throw ValidationError("format: '" + config.format + "' is not json or csv");
    }

    if (out.claim_failed) {
      result.exit_code = 4;
      result.error = "claim check failed: computed value disagrees with the predicted one";
    }
  } catch (const SizeLimitError& e) {
    result.exit_code = 3;
    result.error = e.what();
  } catch (const std::invalid_argument& e) {
    result.exit_code = 2;
    result.error = e.what();
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.error = e.what();
  }
  return result;
}

}  // namespace fgl
