#ifndef FGL_SRC_ENUM_DETAIL_HPP
#define FGL_SRC_ENUM_DETAIL_HPP

#include <cstdint>
#include <vector>

namespace fgl::detail {

// Cycle test for a raw out-edge array (entries -1 or [0, n)), reusable across
// millions of configurations without clearing: visit marks are stamped with a
// per-call counter instead.
class CycleScratch {
 public:
  explicit CycleScratch(int n) : seen_(n, 0), done_(n, 0) {}

  bool has_cycle(const std::int8_t* out, int n) {
    ++stamp_;
    for (int s = 0; s < n; ++s) {
      if (done_[s] == stamp_) continue;
      int v = s;
      while (v >= 0 && seen_[v] != stamp_) {
        seen_[v] = stamp_;
        v = out[v];
      }
      if (v >= 0 && done_[v] != stamp_) return true;  // rejoined the live chain
      v = s;
      while (v >= 0 && done_[v] != stamp_) {
        done_[v] = stamp_;
        v = out[v];
      }
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> seen_, done_;
  std::uint64_t stamp_ = 0;
};

// Mixed-radix odometer over `digits` positions in base `base`, lexicographic
// with position 0 most significant. Also maintains the matching out-edge
// array under the convention digit 0 = no edge, digit w = edge to w-1.
struct DigitCounter {
  int positions;
  unsigned base;
  std::vector<std::uint8_t> digit;
  std::vector<std::int8_t> out;

  DigitCounter(int positions, unsigned base)
      : positions(positions), base(base), digit(positions, 0), out(positions, -1) {}

  void seek(std::uint64_t index) {
    std::uint64_t radix = 1;
    for (int v = 0; v < positions; ++v) radix *= base;
    for (int v = 0; v < positions; ++v) {
      radix /= base;
      digit[v] = static_cast<std::uint8_t>((index / radix) % base);
      out[v] = static_cast<std::int8_t>(digit[v]) - 1;
    }
  }

  // Advances to the next configuration; returns the most significant position
  // that changed. Must not be called past the last configuration.
  int advance() {
    int v = positions - 1;
    while (digit[v] == base - 1) {
      digit[v] = 0;
      out[v] = -1;
      --v;
    }
    ++digit[v];
    out[v] = static_cast<std::int8_t>(digit[v]) - 1;
    return v;
  }
};

}  // namespace fgl::detail

#endif
