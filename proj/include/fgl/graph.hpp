#ifndef FGL_GRAPH_HPP
#define FGL_GRAPH_HPP

#include <cstdint>
#include <vector>

namespace fgl {

// 0-based internally; all CLI input and output is 1-based.
using VertexId = std::int32_t;

inline constexpr VertexId kNoEdge = -1;

// Digraph in which every vertex has out-degree at most one: out[v] is the
// target of v's out-edge or kNoEdge. Self-loops are allowed.
struct FunctionalGraph {
  int n = 0;
  std::vector<VertexId> out;

  static FunctionalGraph empty(int n) { return {n, std::vector<VertexId>(n, kNoEdge)}; }
  bool operator==(const FunctionalGraph&) const = default;
};

// Throws ValidationError if n < 1, out.size() != n, or a target is out of range.
void validate_graph(const FunctionalGraph& g);

struct CycleWitness {
  bool present = false;
  std::vector<VertexId> cycle;  // walk order; empty iff !present
};

// True iff some directed walk along out-edges revisits a vertex. Iterative
// three-state marking, O(n) time, no recursion.
bool has_cycle(const FunctionalGraph& g);

// Like has_cycle, but returns the cycle itself. When several cycles exist,
// picks the one containing the smallest vertex id and starts the walk there.
CycleWitness find_cycle(const FunctionalGraph& g);

// Number of vertices with an out-edge.
int good_count(const FunctionalGraph& g);

}  // namespace fgl

#endif
