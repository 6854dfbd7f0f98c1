#pragma once

#include "bk/implications.hpp"

namespace bk {

struct not_distributive_error : input_error {
  ForbiddenSublattice witness;
  not_distributive_error(const std::string& what, ForbiddenSublattice w)
      : input_error(what), witness(std::move(w)) {}
};

/** Result bundle of a Birkhoff completion.
 *
 *  completed is the new distributive lattice; its element i is the set
 *  element_sets[i] over universe (order-filter/ideal members for lattice-level
 *  completions, concept intents for context-level up, concept extents for
 *  context-level down). embedding[x] is the completed element the original
 *  element x maps to; for up completions it preserves joins, for down
 *  completions meets. */
struct CompletionReport {
  bool up = true;
  bool context_level = false;
  std::vector<std::string> universe;
  std::vector<Mask> element_sets;
  Lattice completed;
  std::vector<std::string> original_labels;
  std::vector<int> embedding;
  // Synthetic generators of context completions: (~not: label, completed element).
  std::vector<std::pair<std::string, int>> added_generators;
  // Added generators whose concept equals that of an original object/attribute.
  std::vector<std::pair<std::string, std::string>> coincidences;
  // Implications of the original reduced context's basis failing in the
  // completed context.
  ImplicationBasis invalidated;
  // Labels merged away by attribute clarification of non-clarified input.
  std::vector<std::pair<std::string, std::string>> attribute_merges;

  std::vector<std::string> element_members(int elem) const;  // sorted
};

// (F(M(L)), reverse inclusion) with the embedding x -> up-set of x within M(L).
CompletionReport birkhoff_up(const Lattice& l);
// (I(J(L)), inclusion) with the embedding x -> down-set of x within J(L).
CompletionReport birkhoff_down(const Lattice& l);

/** The Birkhoff isomorphism of a distributive lattice onto its up-set
 *  completion; map equals the completion's embedding and is validated
 *  bijective and order-preserving in both directions. */
struct EtaResult {
  CompletionReport completion;
  std::vector<int> map;
};

// Throws not_distributive_error carrying the forbidden-sublattice witness.
EtaResult eta(const Lattice& l);

/** The factorization of a join-semilattice embedding phi: L -> Lhat through
 *  the up-set completion: epsilon[A] is the Lhat element of completed element
 *  A, with phi = epsilon o embedding. */
struct FactorResult {
  CompletionReport completion;
  std::vector<int> epsilon;
};

// Validates Lhat distributive and phi an injective bottom-preserving
// join-homomorphism (input_error names the first violating pair in lectic
// order), then builds epsilon per kappa(A) = {x | iota(x) within A},
// epsilon(A) = meet of phi over kappa(A), and validates phi = epsilon o iota,
// epsilon injective and join-preserving.
FactorResult factor_embedding(const Lattice& l, const Lattice& lhat,
                              const std::vector<int>& phi);

/** A context completion: the extended context together with its report. */
struct ContextCompletion {
  FormalContext completed_context;
  CompletionReport report;
};

// Adds one object ~not:m per meet-irreducible attribute m, incident to n iff
// m is not >=_K n. Non-clarified attribute sets are clarified first and the
// merges reported.
ContextCompletion birkhoff_completion_context(const FormalContext& k);

// Adds one attribute ~not:g per object g whose object concept is
// join-irreducible, incident for h iff the row of g does not contain the row
// of h.
ContextCompletion birkhoff_completion_context_downset(const FormalContext& k);

struct CommutationCheck {
  bool ok = false;
  int context_route_size = 0;  // |B(BC(K))|
  int lattice_route_size = 0;  // |BC(B(K))|
};

// Concept lattice of the completed context vs completion of the concept
// lattice; expected isomorphic for every context.
CommutationCheck verify_commutation(const FormalContext& k);

// Down completion of L vs the dual of the up completion of the dual of L.
bool verify_duality(const Lattice& l);

struct Fig6Report {
  bool ok = false;
  bool right_distributive = false;
  bool inclusion_embedding = false;
  int left_size = 0, right_size = 0;
  int left_up_size = 0, left_down_size = 0;
};

// Checks the bundled 14-element lattice against its 16-element distributive
// extension: the extension is distributive, the label-wise inclusion is an
// order embedding, and both completions of the 14-element lattice are larger
// than the extension.
Fig6Report fig6_check();

}  // namespace bk
