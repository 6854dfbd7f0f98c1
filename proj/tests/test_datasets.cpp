#include "doctest.h"

#include <set>

#include "bk/datasets.hpp"
#include "bk/implications.hpp"
#include "oracles.hpp"

using namespace bk;

TEST_CASE("bundled datasets are registered with their kinds") {
  auto& all = bundled_datasets();
  REQUIRE(all.size() == 7);
  std::vector<std::string> names, kinds;
  for (auto& d : all) {
    names.push_back(d.name);
    kinds.push_back(d.kind);
    CHECK(!d.note.empty());
  }
  CHECK(names == std::vector<std::string>{"m3", "n5", "b3", "fig4", "fig4dual", "fig6", "uk"});
  CHECK(kinds == std::vector<std::string>{"lattice", "lattice", "lattice", "lattice",
                                          "lattice", "lattice", "context"});
}

TEST_CASE("m3 and n5 are the minimal non-distributive lattices") {
  Lattice m3 = dataset_m3();
  CHECK(m3.size() == 5);
  CHECK(oracle::count_sublattices(m3, "M3") == 1);
  CHECK(oracle::count_sublattices(m3, "N5") == 0);
  Lattice n5 = dataset_n5();
  CHECK(n5.size() == 5);
  CHECK(oracle::count_sublattices(n5, "N5") == 1);
  CHECK(oracle::count_sublattices(n5, "M3") == 0);
}

TEST_CASE("b3 is the boolean lattice on three atoms") {
  Lattice b3 = dataset_b3();
  CHECK(b3.size() == 8);
  CHECK(is_distributive_law(b3));
  CHECK(oracle::brute_join_irreducibles(b3).size() == 3);
}

TEST_CASE("fig4 and its dual swap irreducibles") {
  Lattice a = dataset_fig4();
  Lattice b = dataset_fig4dual();
  CHECK(a.size() == 7);
  CHECK(b.size() == 7);
  CHECK(is_isomorphic(dual(a), b).has_value());
  CHECK(join_irreducibles(a).size() == meet_irreducibles(b).size());
  CHECK(meet_irreducibles(a).size() == join_irreducibles(b).size());
  CHECK(join_irreducibles(a).size() == 3);
  CHECK(meet_irreducibles(a).size() == 4);
}

TEST_CASE("fig6 embeds into its recorded distributive extension") {
  Lattice left = dataset_fig6();
  Lattice right = dataset_fig6_extension();
  CHECK(left.size() == 14);
  CHECK(right.size() == 16);
  CHECK_FALSE(is_distributive_law(left));
  CHECK(is_distributive_law(right));
  // Shared labels embed by inclusion, preserving order both ways.
  for (int x = 0; x < left.size(); ++x) {
    int ix = right.poset.index_of(left.label(x));
    REQUIRE(ix >= 0);
    for (int y = 0; y < left.size(); ++y) {
      int iy = right.poset.index_of(left.label(y));
      CHECK(left.le(x, y) == right.le(ix, iy));
    }
  }
}

TEST_CASE("uk context matches its recorded structure") {
  FormalContext uk = dataset_uk();
  CHECK(uk.nobj() == 8);
  CHECK(uk.nattr() == 6);
  Lattice l = concept_lattice(uk).lattice;
  CHECK(l.size() == 8);
  CHECK(oracle::count_sublattices(l, "N5") == 3);
  CHECK(oracle::count_sublattices(l, "M3") == 0);
  FormalContext red = reduce(uk);
  CHECK(red.nobj() == 4);
  CHECK(red.nattr() == 5);
  CHECK(canonical_direct_basis(red).implications.size() == 8);
}

TEST_CASE("every bundled lattice is a lattice with distinct labels") {
  for (auto& d : bundled_datasets()) {
    if (d.kind != "lattice") continue;
    const Lattice& l = std::get<Lattice>(d.payload);
    std::set<std::string> seen;
    for (int x = 0; x < l.size(); ++x) seen.insert(l.label(x));
    CHECK(static_cast<int>(seen.size()) == l.size());
    for (int x = 0; x < l.size(); ++x)
      for (int y = 0; y < l.size(); ++y) {
        l.meet(x, y);
        l.join(x, y);
      }
  }
}
