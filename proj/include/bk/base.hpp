#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bk {

// Subsets of universes with at most 63 elements, one bit per element.
using Mask = std::uint64_t;

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed files, CLI arguments, or out-of-contract calls.
struct input_error : error {
  explicit input_error(const std::string& what) : error(what) {}
};

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask bit(int i) { return Mask(1) << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1; }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask(0) : (Mask(1) << n) - 1; }

inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for (Mask t = m; t; t &= t - 1) out.push_back(__builtin_ctzll(t));
  return out;
}

inline std::string join_strings(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace bk
