#ifndef FGL_BIJECTION_HPP
#define FGL_BIJECTION_HPP

#include <cstdint>
#include <vector>

#include "fgl/graph.hpp"
#include "fgl/rng.hpp"

namespace fgl {

// Tree on n labeled vertices stored as a parent array rooted at vertex n-1
// (0-based; vertex n in display form). parent[v] is defined for the n-1
// non-root vertices.
struct LabeledTree {
  int n = 0;
  std::vector<VertexId> parent;
  bool operator==(const LabeledTree&) const = default;
};

// An acyclic out-degree <= 1 digraph is a forest of rooted trees with edges
// pointing at the roots.
bool is_special(const FunctionalGraph& g);

// Attach a fresh root: every vertex without an out-edge gets the new vertex
// as its parent, every edge becomes a parent link. Throws ValidationError
// (with the offending cycle) if the input is not acyclic.
LabeledTree forest_to_tree(const FunctionalGraph& g);

// Inverse map: drop the root, keep the remaining parent links as out-edges.
// Throws ValidationError if the input is not a valid tree.
FunctionalGraph tree_to_forest(const LabeledTree& t);

// True iff parent encodes a connected acyclic graph rooted at vertex n-1.
bool validate_tree(const LabeledTree& t);

struct CayleyCountReport {
  int n = 0;
  std::uint64_t total_graphs = 0;   // n^(n-1)
  std::uint64_t special_count = 0;  // acyclic configurations found
  std::uint64_t formula_value = 0;  // n^(n-2)
  bool matches = false;
};

inline constexpr int kDefaultCountLimit = 9;
inline constexpr int kHardCountLimit = 11;

// Enumerates all n^(n-1) out-edge configurations on n-1 vertices (each vertex
// picks one of the n-1 targets or nothing, n equally likely choices) and
// counts the acyclic ones. Plain integer counting; partial counts from index
// sub-ranges sum exactly, so the result is worker-count independent.
CayleyCountReport count_special_graphs(int n, int workers = 1, int limit = kDefaultCountLimit);
CayleyCountReport count_special_graphs_serial(int n, int limit = kDefaultCountLimit);

struct TreeSample {
  LabeledTree tree;
  std::uint64_t attempts = 0;
};

// Rejection sampler: uniform configurations on n-1 vertices until acyclic,
// then forest_to_tree. Output is uniform over the n^(n-2) labeled trees;
// attempts is geometric with mean n. A cap of 1000*n attempts guards against
// a broken stream.
TreeSample sample_uniform_tree(int n, SplitMix64& rng);

}  // namespace fgl

#endif
