#pragma once

#include "bk/lattice.hpp"

namespace bk {

/** Formal context (G, M, I). Incidence is stored per object as an attribute
 *  mask. At most 63 objects and 63 attributes. Labels are unique per side. */
struct FormalContext {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<Mask> rows;  // rows[g] = attributes of object g

  int nobj() const { return static_cast<int>(objects.size()); }
  int nattr() const { return static_cast<int>(attributes.size()); }
  bool incident(int g, int m) const { return has(rows[g], m); }
  Mask col(int m) const;
  int object_index(const std::string& label) const;
  int attribute_index(const std::string& label) const;
};

FormalContext make_context(std::vector<std::string> objects,
                           std::vector<std::string> attributes, std::vector<Mask> rows);

// A' for A a set of objects: the attributes common to all of them.
Mask derive_attributes(const FormalContext& k, Mask object_set);
// B' for B a set of attributes: the objects having all of them.
Mask derive_objects(const FormalContext& k, Mask attr_set);
// B -> B'' on attribute sets.
Mask attr_closure(const FormalContext& k, Mask attr_set);
// A -> A'' on object sets.
Mask obj_closure(const FormalContext& k, Mask object_set);

/** A formal concept: extent' = intent and intent' = extent. */
struct Concept {
  Mask extent;
  Mask intent;
};

/** All concepts of a context in lectic order of their intents, together with
 *  the concept lattice (ordered by extent inclusion; lattice element i is
 *  concepts[i], labeled by its extent) and the object/attribute concept
 *  positions gamma and mu. */
struct ConceptLattice {
  FormalContext context;
  std::vector<Concept> concepts;
  Lattice lattice;
  std::vector<int> gamma;  // per object g: index of ({g}'', {g}')
  std::vector<int> mu;     // per attribute m: index of ({m}', {m}'')

  int find_extent(Mask extent) const;
  int find_intent(Mask intent) const;
};

ConceptLattice concept_lattice(const FormalContext& k);

// m >=_K n iff {m}' contains {n}'.
bool attribute_geq(const FormalContext& k, int m, int n);

// Attributes whose attribute concept is meet-irreducible in the concept
// lattice. Among duplicate columns only the lexicographically first label
// qualifies; full columns give the top concept and never qualify.
std::vector<int> meet_irreducible_attributes(const FormalContext& k);

/** Clarification result. merges lists (removed label, surviving label) pairs;
 *  the surviving label is the lexicographically least of its duplicate group. */
struct Clarified {
  FormalContext context;
  std::vector<std::pair<std::string, std::string>> object_merges;
  std::vector<std::pair<std::string, std::string>> attribute_merges;
};

Clarified clarify_traced(const FormalContext& k);
FormalContext clarify(const FormalContext& k);

// Clarifies, then drops reducible objects and attributes. A full column is
// reducible (it is the meet of the empty set), as is a full row dually.
FormalContext reduce(const FormalContext& k);

bool is_clarified(const FormalContext& k);
bool is_reduced(const FormalContext& k);

// The context (P, P, not-geq); objects are relabeled with the ~not: prefix.
// Its extents are exactly the order ideals of p.
FormalContext contraordinal_scale(const Poset& p);

// (J(L), M(L), <=). Reduced, and its concept lattice is isomorphic to L.
FormalContext standard_context(const Lattice& l);

}  // namespace bk
