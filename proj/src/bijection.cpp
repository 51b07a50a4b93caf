#include "fgl/bijection.hpp"

#include <algorithm>
#include <string>

#include "enum_detail.hpp"
#include "fgl/errors.hpp"

namespace fgl {

bool is_special(const FunctionalGraph& g) { return !has_cycle(g); }

LabeledTree forest_to_tree(const FunctionalGraph& g) {
  validate_graph(g);
  CycleWitness witness = find_cycle(g);
  if (witness.present) {
    std::string ids;
    for (VertexId v : witness.cycle) {
      if (!ids.empty()) ids += " -> ";
      ids += std::to_string(v + 1);
    }
    throw ValidationError("forest_to_tree: input contains the cycle " + ids);
  }
  const int m = g.n;
  LabeledTree tree;
  tree.n = m + 1;
  tree.parent.resize(m);
  for (int v = 0; v < m; ++v) {
    tree.parent[v] = g.out[v] == kNoEdge ? m : g.out[v];
  }
  return tree;
}

FunctionalGraph tree_to_forest(const LabeledTree& t) {
  if (t.n < 2) throw ValidationError("tree_to_forest: tree must have >= 2 vertices");
  if (!validate_tree(t)) {
    throw ValidationError("tree_to_forest: parent array does not encode a tree rooted at vertex " +
                          std::to_string(t.n));
  }
  FunctionalGraph g = FunctionalGraph::empty(t.n - 1);
  for (int v = 0; v + 1 < t.n; ++v) {
    if (t.parent[v] != t.n - 1) g.out[v] = t.parent[v];
  }
  return g;
}

bool validate_tree(const LabeledTree& t) {
  if (t.n < 1) return false;
  if (static_cast<int>(t.parent.size()) != t.n - 1) return false;
  for (int v = 0; v + 1 < t.n; ++v) {
    if (t.parent[v] < 0 || t.parent[v] >= t.n || t.parent[v] == v) return false;
  }
  // Every vertex must reach the root; walk children outward from the root.
  std::vector<std::vector<VertexId>> children(t.n);
  for (int v = 0; v + 1 < t.n; ++v) children[t.parent[v]].push_back(v);
  std::vector<VertexId> stack{static_cast<VertexId>(t.n - 1)};
  int visited = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    ++visited;
    for (VertexId c : children[v]) stack.push_back(c);
  }
  return visited == t.n;
}

namespace {

std::uint64_t u64_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  while (exp--) out *= base;
  return out;
}

void check_count_limit(int n, int limit) {
  int effective = std::min(limit, kHardCountLimit);
  if (n <= effective) return;
  std::string cost = BigUint::pow(BigUint(static_cast<std::uint64_t>(n)),
                                  static_cast<unsigned>(n - 1))
                         .to_decimal();
  std::string msg = "counting for n = " + std::to_string(n) + " enumerates n^(n-1) = " + cost +
                    " configurations; the limit allows n <= " + std::to_string(effective);
  if (limit < kHardCountLimit) msg += " (raise with --limit-override, hard cap " +
                                      std::to_string(kHardCountLimit) + ")";
  throw SizeLimitError(msg);
}

// Counts acyclic configurations with index in [begin, end); m vertices, each
// digit in base m+1 (0 = no edge).
std::uint64_t count_acyclic_range(int m, std::uint64_t begin, std::uint64_t end) {
  if (begin >= end) return 0;
  detail::DigitCounter counter(m, static_cast<unsigned>(m) + 1);
  counter.seek(begin);
  detail::CycleScratch scratch(m);
  std::uint64_t count = 0;
  for (std::uint64_t idx = begin;; ++idx) {
    count += scratch.has_cycle(counter.out.data(), m) ? 0 : 1;
    if (idx + 1 == end) break;
    counter.advance();
  }
  return count;
}

CayleyCountReport make_count_report(int n, std::uint64_t special) {
  CayleyCountReport report;
  report.n = n;
  report.total_graphs = u64_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n - 1));
  report.special_count = special;
  report.formula_value = u64_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n - 2));
  report.matches = report.special_count == report.formula_value;
  return report;
}

}  // namespace

CayleyCountReport count_special_graphs(int n, int workers, int limit) {
  if (n < 2) throw ValidationError("count_special_graphs: n must be >= 2");
  if (workers < 1) throw ValidationError("count_special_graphs: workers must be >= 1");
  check_count_limit(n, limit);

  const int m = n - 1;
  const std::uint64_t total = u64_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(m));
  const int chunks = static_cast<int>(std::min<std::uint64_t>(total, 4 * workers));

  std::uint64_t special = 0;
#pragma omp parallel for num_threads(workers) schedule(dynamic) reduction(+ : special)
  for (int c = 0; c < chunks; ++c) {
    std::uint64_t lo = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
    std::uint64_t hi = lo + total / chunks + (static_cast<std::uint64_t>(c) < total % chunks);
    special += count_acyclic_range(m, lo, hi);
  }
  return make_count_report(n, special);
}

CayleyCountReport count_special_graphs_serial(int n, int limit) {
  if (n < 2) throw ValidationError("count_special_graphs: n must be >= 2");
  check_count_limit(n, limit);
  const int m = n - 1;
  const std::uint64_t total = u64_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(m));
  return make_count_report(n, count_acyclic_range(m, 0, total));
}

TreeSample sample_uniform_tree(int n, SplitMix64& rng) {
  if (n < 2) throw ValidationError("sample_uniform_tree: n must be >= 2");
  const int m = n - 1;
  const std::uint64_t cap = 1000ULL * static_cast<std::uint64_t>(n);
  FunctionalGraph g = FunctionalGraph::empty(m);
  for (std::uint64_t attempt = 1; attempt <= cap; ++attempt) {
    for (int v = 0; v < m; ++v) {
      std::uint64_t d = uniform_below_u64(rng, static_cast<std::uint64_t>(n));
      g.out[v] = d == 0 ? kNoEdge : static_cast<VertexId>(d - 1);
    }
    if (is_special(g)) return {forest_to_tree(g), attempt};
  }
  throw std::runtime_error("sample_uniform_tree: no acyclic draw in " + std::to_string(cap) +
                           " attempts; the random stream looks broken");
}

}  // namespace fgl
