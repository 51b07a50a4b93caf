#include "fgl/graph.hpp"

#include <algorithm>
#include <string>

#include "fgl/errors.hpp"

namespace fgl {

void validate_graph(const FunctionalGraph& g) {
  if (g.n < 1) throw ValidationError("graph: vertex count must be >= 1");
  if (static_cast<int>(g.out.size()) != g.n) {
    throw ValidationError("graph: out list has " + std::to_string(g.out.size()) +
                          " entries, expected " + std::to_string(g.n));
  }
  for (int v = 0; v < g.n; ++v) {
    if (g.out[v] != kNoEdge && (g.out[v] < 0 || g.out[v] >= g.n)) {
      throw ValidationError("graph: out[" + std::to_string(v + 1) + "] = " +
                            std::to_string(g.out[v] + 1) + " out of range");
    }
  }
}

namespace {
enum : std::uint8_t { kWhite = 0, kOnPath = 1, kDone = 2 };
}

bool has_cycle(const FunctionalGraph& g) {
  std::vector<std::uint8_t> state(g.n, kWhite);
  for (int start = 0; start < g.n; ++start) {
    if (state[start] != kWhite) continue;
    VertexId v = start;
    while (v != kNoEdge && state[v] == kWhite) {
      state[v] = kOnPath;
      v = g.out[v];
    }
    if (v != kNoEdge && state[v] == kOnPath) return true;
    // Finalize the walked chain.
    v = start;
    while (v != kNoEdge && state[v] == kOnPath) {
      state[v] = kDone;
      v = g.out[v];
    }
  }
  return false;
}

CycleWitness find_cycle(const FunctionalGraph& g) {
  std::vector<std::uint8_t> state(g.n, kWhite);
  std::vector<VertexId> best;
  VertexId best_min = -1;
  for (int start = 0; start < g.n; ++start) {
    if (state[start] != kWhite) continue;
    VertexId v = start;
    while (v != kNoEdge && state[v] == kWhite) {
      state[v] = kOnPath;
      v = g.out[v];
    }
    if (v != kNoEdge && state[v] == kOnPath) {
      // v is on the current chain, so the cycle is v -> out[v] -> ... -> v.
      std::vector<VertexId> cycle;
      VertexId w = v;
      do {
        cycle.push_back(w);
        w = g.out[w];
      } while (w != v);
      VertexId min_id = *std::min_element(cycle.begin(), cycle.end());
      if (best.empty() || min_id < best_min) {
        auto at_min = std::find(cycle.begin(), cycle.end(), min_id);
        std::rotate(cycle.begin(), at_min, cycle.end());
        best = std::move(cycle);
        best_min = min_id;
      }
    }
    v = start;
    while (v != kNoEdge && state[v] == kOnPath) {
      state[v] = kDone;
      v = g.out[v];
    }
  }
  if (best.empty()) return {};
  return {true, std::move(best)};
}

int good_count(const FunctionalGraph& g) {
  int count = 0;
  for (VertexId t : g.out) count += t != kNoEdge;
  return count;
}

}  // namespace fgl
