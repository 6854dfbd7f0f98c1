#include "doctest.h"

#include "bk/datasets.hpp"
#include "bk/implications.hpp"
#include "oracles.hpp"

using namespace bk;

namespace {

// The eight implications of the uk dataset's canonical direct basis, frozen
// as premise/conclusion sets. The dataset's incidence matrix is only trusted
// because this oracle pins its basis.
std::vector<Implication> uk_golden_basis() {
  auto imp = [](std::vector<std::string> p, std::vector<std::string> c) {
    return make_implication(std::move(p), std::move(c));
  };
  return {
      imp({"UK"}, {"British Islands"}),
      imp({"GB"}, {"UK", "British Islands"}),
      imp({"Channel Islands"}, {"British Islands"}),
      imp({"Ireland (Island)", "British Islands"}, {"UK"}),
      imp({"UK", "Channel Islands"}, {"Ireland (Island)", "British Islands", "GB"}),
      imp({"Channel Islands", "GB"}, {"UK", "Ireland (Island)", "British Islands"}),
      imp({"Ireland (Island)", "Channel Islands"}, {"UK", "British Islands", "GB"}),
      imp({"Ireland (Island)", "GB"}, {"UK", "British Islands", "Channel Islands"}),
  };
}

bool same_implications(std::vector<Implication> a, std::vector<Implication> b) {
  auto key = [](const Implication& i) { return std::make_pair(i.premise, i.conclusion); };
  std::sort(a.begin(), a.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
  std::sort(b.begin(), b.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
  return a == b;
}

}  // namespace

TEST_CASE("make_implication sorts and deduplicates") {
  Implication i = make_implication({"b", "a", "b"}, {"d", "c"});
  CHECK(i.premise == std::vector<std::string>{"a", "b"});
  CHECK(i.conclusion == std::vector<std::string>{"c", "d"});
}

TEST_CASE("closure reaches the least fixpoint") {
  ImplicationBasis b;
  b.attributes = {"a", "b", "c", "d"};
  b.implications = {make_implication({"a"}, {"b"}), make_implication({"b", "c"}, {"d"})};
  CHECK(closure(b, 0) == 0);
  CHECK(closure(b, bit(0)) == (bit(0) | bit(1)));
  CHECK(closure(b, bit(0) | bit(2)) == full_mask(4));
  std::vector<std::string> got = closure_labels(b, {"c", "a"});
  CHECK(got == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("holds tests premise closure against conclusion") {
  FormalContext uk = dataset_uk();
  CHECK(holds(make_implication({"UK"}, {"British Islands"}), uk));
  CHECK(holds(make_implication({"GB"}, {"UK"}), uk));
  CHECK_FALSE(holds(make_implication({"British Islands"}, {"UK"}), uk));
  CHECK_THROWS_AS(holds(make_implication({"Atlantis"}, {"UK"}), uk), input_error);
}

TEST_CASE("proper premises require an attribute-clarified context") {
  FormalContext uk = dataset_uk();
  CHECK_NOTHROW(proper_premises(uk));  // only attributes must be clarified
  FormalContext dup = make_context({"g1", "g2"}, {"m1", "m2"}, {3, 0});
  CHECK_THROWS_AS(proper_premises(dup), input_error);
}

TEST_CASE("proper premises of the reduced uk context") {
  FormalContext red = reduce(dataset_uk());
  auto pps = proper_premises(red);
  CHECK(pps.size() == 8);
  int singletons = 0;
  for (auto& [premise, star] : pps) {
    CHECK(star != 0);
    CHECK((premise & star) == 0);
    // The star set is contained in the closure.
    CHECK(subset_of(star, attr_closure(red, premise)));
    if (popcount(premise) == 1) singletons++;
  }
  CHECK(singletons == 3);
  // Size then lectic order.
  for (std::size_t i = 1; i < pps.size(); ++i)
    CHECK(popcount(pps[i - 1].first) <= popcount(pps[i].first));
}

TEST_CASE("canonical_direct_basis requires a reduced context") {
  try {
    canonical_direct_basis(dataset_uk());
    FAIL("unreduced context accepted");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("reduce") != std::string::npos);
  }
}

TEST_CASE("uk basis oracle: the canonical direct basis is the frozen eight") {
  FormalContext red = reduce(dataset_uk());
  ImplicationBasis basis = canonical_direct_basis(red);
  CHECK(same_implications(basis.implications, uk_golden_basis()));
  ImplicationBasis dist = distributive_part(basis);
  std::vector<Implication> golden = uk_golden_basis();
  CHECK(same_implications(dist.implications,
                          {golden[0], golden[1], golden[2]}));
}

TEST_CASE("every basis implication holds and non-implications fail") {
  FormalContext red = reduce(dataset_uk());
  for (auto& imp : canonical_direct_basis(red).implications) CHECK(holds(imp, red));
  CHECK_FALSE(holds(make_implication({"British Islands"}, {"Channel Islands"}), red));
}

TEST_CASE("basis is sound, complete and direct on exhaustive small contexts") {
  for (int ng = 1; ng <= 3; ++ng)
    for (int nm = 1; nm <= 3; ++nm)
      for (Mask cells = 0; cells < (Mask(1) << (ng * nm)); ++cells) {
        FormalContext k = reduce(oracle::context_from_cells(ng, nm, cells));
        ImplicationBasis basis = canonical_direct_basis(k);
        for (auto& imp : basis.implications) CHECK(holds(imp, k));
        for (Mask s = 0; s < (Mask(1) << k.nattr()); ++s) {
          Mask full = closure(basis, s);
          CHECK(full == attr_closure(k, s));
          CHECK(oracle::one_pass(basis, s) == full);
        }
      }
}

TEST_CASE("basis premises are unique and conclusions disjoint from premises") {
  oracle::ContextPool pool;
  for (int trial = 0; trial < 40; ++trial) {
    FormalContext k = reduce(pool.next(5));
    ImplicationBasis basis = canonical_direct_basis(k);
    std::set<std::vector<std::string>> premises;
    for (auto& imp : basis.implications) {
      CHECK(premises.insert(imp.premise).second);
      CHECK_FALSE(imp.conclusion.empty());
      for (auto& c : imp.conclusion)
        CHECK(std::find(imp.premise.begin(), imp.premise.end(), c) == imp.premise.end());
    }
  }
}

TEST_CASE("distributive_part keeps exactly the singleton premises") {
  FormalContext red = reduce(dataset_uk());
  ImplicationBasis basis = canonical_direct_basis(red);
  ImplicationBasis dist = distributive_part(basis);
  CHECK(dist.implications.size() == 3);
  for (auto& imp : dist.implications) CHECK(imp.premise.size() == 1);
}

TEST_CASE("closed_sets_lattice lists the closure fixpoints") {
  FormalContext red = reduce(dataset_uk());
  ImplicationBasis basis = canonical_direct_basis(red);
  SetLattice closed = closed_sets_lattice(basis);
  ConceptLattice cl = concept_lattice(red);
  CHECK(closed.lattice.size() == static_cast<int>(cl.concepts.size()));
  std::set<Mask> intents;
  for (auto& c : cl.concepts) intents.insert(c.intent);
  for (Mask s : closed.sets) CHECK(intents.count(s) == 1);
  CHECK_THROWS_AS(closed_sets_lattice(basis, 3), error);
}

TEST_CASE("empty premise implications close everything from nothing") {
  // A context whose every object has attribute m1 yields the implication
  // {} -> {m1} before reduction strips the full column.
  FormalContext k = make_context({"g1", "g2"}, {"m1", "m2"}, {1, 3});
  auto pps = proper_premises(k);
  REQUIRE(!pps.empty());
  CHECK(pps[0].first == 0);
  CHECK(pps[0].second == bit(0));
}
