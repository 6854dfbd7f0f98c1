#pragma once

#include "bk/context.hpp"

namespace bk {

/** Attribute implication with label-based sides. Members are kept sorted
 *  lexicographically; basis implications have disjoint premise/conclusion. */
struct Implication {
  std::vector<std::string> premise;
  std::vector<std::string> conclusion;

  bool operator==(const Implication&) const = default;
};

Implication make_implication(std::vector<std::string> premise,
                             std::vector<std::string> conclusion);

/** Implication list over a fixed attribute universe. Premises are unique and
 *  listed by size then lectic order over universe indices. */
struct ImplicationBasis {
  std::vector<std::string> attributes;
  std::vector<Implication> implications;
};

// Least superset of s closed under every implication in b.
Mask closure(const ImplicationBasis& b, Mask s);
std::vector<std::string> closure_labels(const ImplicationBasis& b,
                                        const std::vector<std::string>& s);

// True iff premise' is a subset of conclusion' in k. Attributes of the
// implication must exist in k (matched by label).
bool holds(const Implication& imp, const FormalContext& k);

// All proper premises A with their A* = A'' minus A and minus the closures of
// the one-element-removed subsets, as (premise, A*) mask pairs over k's
// attributes, enumerated by size then lectic order. Requires an
// attribute-clarified context.
std::vector<std::pair<Mask, Mask>> proper_premises(const FormalContext& k);

// The canonical direct basis: one implication per proper premise A, with the
// saturated conclusion A'' minus A (equivalent to the A* form, still
// premise-disjoint, and closures complete in one pass). Requires a reduced
// context; errors direct the caller to reduce first.
ImplicationBasis canonical_direct_basis(const FormalContext& k);

// Sub-basis of the singleton-premise implications.
ImplicationBasis distributive_part(const ImplicationBasis& b);

// Lattice of all closure fixpoints ordered by inclusion, elements labeled by
// their attribute sets. Throws error above the fixpoint limit.
SetLattice closed_sets_lattice(const ImplicationBasis& b, std::size_t limit = 4096);

}  // namespace bk
