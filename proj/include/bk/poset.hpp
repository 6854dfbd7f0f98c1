#pragma once

#include <utility>

#include "bk/base.hpp"

namespace bk {

/** Finite partially ordered set over labeled elements.
 *
 *  leq stores the full reflexive transitive relation as a dense matrix;
 *  covers is its transitive reduction, sorted by (lower, upper) index.
 *  Labels are unique. */
struct Poset {
  std::vector<std::string> labels;
  std::vector<std::vector<char>> leq;
  std::vector<std::pair<int, int>> covers;

  int size() const { return static_cast<int>(labels.size()); }
  bool le(int a, int b) const { return leq[a][b] != 0; }
  bool lt(int a, int b) const { return a != b && leq[a][b] != 0; }
  int index_of(const std::string& label) const;
  std::vector<int> lower_covers(int x) const;
  std::vector<int> upper_covers(int x) const;
};

// Builds the reflexive transitive closure of the given <=-pairs.
// Throws input_error naming a witness cycle when two distinct elements end up
// related in both directions, and on duplicate or unknown labels.
Poset make_poset(std::vector<std::string> labels,
                 const std::vector<std::pair<int, int>>& le_pairs);
Poset make_poset(std::vector<std::string> labels,
                 const std::vector<std::pair<std::string, std::string>>& le_pairs);

Poset dual(const Poset& p);

// Induced subposet on elems (indices into p), carrying p's labels over.
Poset subposet(const Poset& p, const std::vector<int>& elems);

// All down-closed subsets as masks over p's indices, sorted by (size, mask).
// Requires p.size() <= 63; throws error when the family exceeds limit.
std::vector<Mask> ideal_masks(const Poset& p, std::size_t limit = std::size_t(1) << 22);
// All up-closed subsets, same order and guard.
std::vector<Mask> filter_masks(const Poset& p, std::size_t limit = std::size_t(1) << 22);

}  // namespace bk
