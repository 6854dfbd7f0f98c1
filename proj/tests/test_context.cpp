#include "doctest.h"

#include "bk/datasets.hpp"
#include "oracles.hpp"

using namespace bk;

TEST_CASE("make_context validates its input") {
  CHECK_THROWS_AS(make_context({"g"}, {"m"}, {}), input_error);
  CHECK_THROWS_AS(make_context({"g", "g"}, {"m"}, {0, 0}), input_error);
  CHECK_THROWS_AS(make_context({"g"}, {"m"}, {2}), input_error);
}

TEST_CASE("derivations agree with raw incidence loops") {
  FormalContext uk = dataset_uk();
  for (Mask a = 0; a < (Mask(1) << uk.nobj()); a += 7) {
    Mask common = full_mask(uk.nattr());
    for (int g : mask_elements(a)) common &= uk.rows[g];
    CHECK(derive_attributes(uk, a) == common);
  }
  for (Mask b = 0; b < (Mask(1) << uk.nattr()); ++b) {
    Mask objs = 0;
    for (int g = 0; g < uk.nobj(); ++g)
      if ((uk.rows[g] & b) == b) objs |= bit(g);
    CHECK(derive_objects(uk, b) == objs);
    CHECK(attr_closure(uk, b) == derive_attributes(uk, objs));
  }
}

TEST_CASE("concept lattice enumerates every concept in lectic intent order") {
  oracle::ContextPool pool;
  for (int trial = 0; trial < 60; ++trial) {
    FormalContext k = pool.next(5);
    ConceptLattice cl = concept_lattice(k);
    auto brute = oracle::brute_concepts(k);
    CHECK(cl.concepts.size() == brute.size());
    std::set<std::pair<Mask, Mask>> got;
    for (auto& c : cl.concepts) got.insert({c.extent, c.intent});
    CHECK(std::vector<std::pair<Mask, Mask>>(got.begin(), got.end()) == brute);
    for (auto& c : cl.concepts) {
      CHECK(derive_attributes(k, c.extent) == c.intent);
      CHECK(derive_objects(k, c.intent) == c.extent);
    }
    // The lattice order is extent inclusion.
    for (std::size_t i = 0; i < cl.concepts.size(); ++i)
      for (std::size_t j = 0; j < cl.concepts.size(); ++j)
        CHECK(cl.lattice.le(static_cast<int>(i), static_cast<int>(j)) ==
              subset_of(cl.concepts[i].extent, cl.concepts[j].extent));
  }
}

TEST_CASE("gamma and mu point at the object and attribute concepts") {
  FormalContext uk = dataset_uk();
  ConceptLattice cl = concept_lattice(uk);
  CHECK(cl.concepts.size() == 8);
  for (int g = 0; g < uk.nobj(); ++g) {
    const Concept& c = cl.concepts[cl.gamma[g]];
    CHECK(has(c.extent, g));
    CHECK(c.intent == uk.rows[g]);
  }
  for (int m = 0; m < uk.nattr(); ++m) {
    const Concept& c = cl.concepts[cl.mu[m]];
    CHECK(has(c.intent, m));
    CHECK(c.extent == uk.col(m));
  }
}

TEST_CASE("clarify merges duplicate rows and columns onto the least label") {
  FormalContext uk = dataset_uk();
  Clarified c = clarify_traced(uk);
  CHECK(c.context.nobj() == 5);
  CHECK(c.context.nattr() == 6);
  std::vector<std::pair<std::string, std::string>> object_merges{
      {"Scotland", "England"}, {"Wales", "England"}, {"Jersey", "Guernsey"}};
  CHECK(c.object_merges == object_merges);
  CHECK(c.attribute_merges.empty());
  CHECK(is_clarified(c.context));
  CHECK_FALSE(is_clarified(uk));
}

TEST_CASE("reduce drops full columns and meet-reducible columns") {
  FormalContext uk = dataset_uk();
  FormalContext red = reduce(uk);
  CHECK(red.nattr() == 5);
  CHECK(red.attribute_index("British Isles") == -1);
  CHECK(red.object_index("Isle of Man") == -1);
  CHECK(red.nobj() == 4);
  CHECK(is_reduced(red));
  CHECK_FALSE(is_reduced(uk));
  // Reduction preserves the concept lattice.
  CHECK(is_isomorphic(concept_lattice(uk).lattice, concept_lattice(red).lattice).has_value());
}

TEST_CASE("reduction preserves the concept lattice on random contexts") {
  oracle::ContextPool pool;
  for (int trial = 0; trial < 40; ++trial) {
    FormalContext k = pool.next(5);
    FormalContext red = reduce(k);
    CHECK(is_reduced(red));
    CHECK(is_isomorphic(concept_lattice(k).lattice, concept_lattice(red).lattice).has_value());
  }
}

TEST_CASE("attribute_geq is extent containment") {
  FormalContext uk = dataset_uk();
  int bisles = uk.attribute_index("British Isles");
  int bislands = uk.attribute_index("British Islands");
  int units = uk.attribute_index("UK");
  CHECK(attribute_geq(uk, bisles, bislands));
  CHECK(attribute_geq(uk, bislands, units));
  CHECK_FALSE(attribute_geq(uk, units, bislands));
  for (int m = 0; m < uk.nattr(); ++m)
    for (int n = 0; n < uk.nattr(); ++n)
      CHECK(attribute_geq(uk, m, n) == subset_of(uk.col(n), uk.col(m)));
}

TEST_CASE("meet-irreducible attributes of the uk context") {
  FormalContext uk = dataset_uk();
  std::vector<int> mm = meet_irreducible_attributes(uk);
  std::vector<std::string> names;
  for (int m : mm) names.push_back(uk.attributes[m]);
  std::vector<std::string> want{"Ireland (Island)", "GB", "British Islands", "UK",
                                "Channel Islands"};
  CHECK(names == want);
}

TEST_CASE("meet-irreducible attributes match the lattice-side irreducibles") {
  oracle::ContextPool pool;
  for (int trial = 0; trial < 40; ++trial) {
    FormalContext k = clarify(pool.next(5));
    ConceptLattice cl = concept_lattice(k);
    std::vector<int> mm = meet_irreducible_attributes(k);
    std::vector<int> want_elems = oracle::brute_meet_irreducibles(cl.lattice);
    // Every meet-irreducible element of B(K) is some attribute concept, so the
    // qualifying attributes must map exactly onto them.
    std::set<int> got;
    for (int m : mm) got.insert(cl.mu[m]);
    CHECK(got.size() == mm.size());
    CHECK(std::vector<int>(got.begin(), got.end()) == want_elems);
  }
}

TEST_CASE("contraordinal scale extents are the order ideals") {
  oracle::ContextPool pool;
  for (int trial = 0; trial < 25; ++trial) {
    Poset p = pool.next_lattice(10).poset;
    FormalContext scale = contraordinal_scale(p);
    CHECK(scale.nobj() == p.size());
    CHECK(scale.nattr() == p.size());
    for (int g = 0; g < p.size(); ++g)
      CHECK(scale.objects[g] == "~not:" + p.labels[g]);
    std::set<Mask> extents;
    for (auto& [extent, intent] : oracle::brute_concepts(scale)) extents.insert(extent);
    std::vector<Mask> ideals = ideal_masks(p);
    CHECK(extents.size() == ideals.size());
    for (Mask ideal : ideals) CHECK(extents.count(ideal) == 1);
  }
}

TEST_CASE("standard context recovers the lattice") {
  Lattice b3 = dataset_b3();
  FormalContext std_b3 = standard_context(b3);
  CHECK(std_b3.nobj() == 3);
  CHECK(std_b3.nattr() == 3);
  CHECK(is_isomorphic(concept_lattice(std_b3).lattice, b3).has_value());
  oracle::ContextPool pool;
  for (int trial = 0; trial < 30; ++trial) {
    Lattice l = pool.next_lattice(14);
    FormalContext s = standard_context(l);
    CHECK(is_reduced(s));
    CHECK(is_isomorphic(concept_lattice(s).lattice, l).has_value());
  }
}
