#pragma once

#include <array>
#include <optional>

#include "bk/poset.hpp"

namespace bk {

/** Finite lattice: a poset in which every pair of elements has a unique
 *  infimum and supremum, materialized as n x n operation tables. */
struct Lattice {
  Poset poset;
  std::vector<int> meet_table, join_table;  // row-major n*n
  int bottom = 0, top = 0;

  int size() const { return poset.size(); }
  bool le(int a, int b) const { return poset.le(a, b); }
  int meet(int a, int b) const { return meet_table[std::size_t(a) * size() + b]; }
  int join(int a, int b) const { return join_table[std::size_t(a) * size() + b]; }
  const std::string& label(int a) const { return poset.labels[a]; }
};

// Throws input_error naming the first pair (in index order) without a unique
// greatest lower or least upper bound. Empty posets are rejected; a single
// element is its own top and bottom.
Lattice as_lattice(const Poset& p);

Lattice dual(const Lattice& l);

// J(L): elements with exactly one lower cover. The bottom has none and is
// never included (the empty join is the bottom).
std::vector<int> join_irreducibles(const Lattice& l);
// M(L): elements with exactly one upper cover; the top is never included.
std::vector<int> meet_irreducibles(const Lattice& l);

// x ∧ (y ∨ z) == (x ∧ y) ∨ (x ∧ z) over all triples.
bool is_distributive_law(const Lattice& l);

/** A five-element sublattice witnessing non-distributivity.
 *  elems is in role order: for N5 {bottom, low chain, high chain, side, top},
 *  for M3 {bottom, atom, atom, atom, top} with atoms in index order. */
struct ForbiddenSublattice {
  std::string kind;  // "N5" or "M3"
  std::array<int, 5> elems;
};

// None iff the lattice is distributive. Searches N5 before M3 and returns the
// witness on the lexicographically first element subset under index order.
std::optional<ForbiddenSublattice> find_forbidden_sublattice(const Lattice& l);

// Order-isomorphism (hence lattice isomorphism) if one exists.
// mapping[a in l1] = corresponding element of l2.
std::optional<std::vector<int>> is_isomorphic(const Lattice& l1, const Lattice& l2);

/** Lattice whose elements are subsets of a labeled universe, ordered by
 *  inclusion, or by reverse inclusion when by_superset is set (then the full
 *  set is the bottom and the empty set the top).
 *
 *  For order_ideals/order_filters output the family is closed under union and
 *  intersection (a ring of sets); closed_sets_lattice only guarantees closure
 *  under intersection. */
struct SetLattice {
  std::vector<std::string> universe;
  std::vector<Mask> sets;  // one per lattice element, in lattice element order
  bool by_superset = false;
  Lattice lattice;

  int index_of_set(Mask m) const;
  std::vector<std::string> member_labels(int elem) const;  // sorted
};

// Ring-of-sets lattices (order ideals and order filters) use the same shape.
using SetFamilyLattice = SetLattice;

// Canonical element order: sorted by the member-label arrays. Element labels
// are "{a, b}" strings over sorted members.
SetLattice make_set_lattice(std::vector<std::string> universe, std::vector<Mask> sets,
                            bool by_superset);

// All order ideals of p, ordered by inclusion; contains {} and the full set.
SetFamilyLattice order_ideals(const Poset& p);
// All order filters of p ordered by containment reversed: {} is the top.
SetFamilyLattice order_filters(const Poset& p);

std::string set_label(const std::vector<std::string>& members);

}  // namespace bk
