#include "bk/implications.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace bk {

Implication make_implication(std::vector<std::string> premise,
                             std::vector<std::string> conclusion) {
  std::sort(premise.begin(), premise.end());
  premise.erase(std::unique(premise.begin(), premise.end()), premise.end());
  std::sort(conclusion.begin(), conclusion.end());
  conclusion.erase(std::unique(conclusion.begin(), conclusion.end()), conclusion.end());
  return {std::move(premise), std::move(conclusion)};
}

namespace {

Mask to_mask(const std::vector<std::string>& labels, const std::vector<std::string>& universe,
             const char* what) {
  Mask out = 0;
  for (auto& s : labels) {
    auto it = std::find(universe.begin(), universe.end(), s);
    if (it == universe.end())
      throw input_error(std::string(what) + " uses unknown attribute '" + s + "'");
    out |= bit(static_cast<int>(it - universe.begin()));
  }
  return out;
}

std::vector<std::string> to_labels(Mask m, const std::vector<std::string>& universe) {
  std::vector<std::string> out;
  for (int i : mask_elements(m)) out.push_back(universe[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Mask closure(const ImplicationBasis& b, Mask s) {
  std::vector<std::pair<Mask, Mask>> imps;
  imps.reserve(b.implications.size());
  for (auto& imp : b.implications)
    imps.emplace_back(to_mask(imp.premise, b.attributes, "implication premise"),
                      to_mask(imp.conclusion, b.attributes, "implication conclusion"));
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [p, c] : imps)
      if (subset_of(p, s) && !subset_of(c, s)) {
        s |= c;
        changed = true;
      }
  }
  return s;
}

std::vector<std::string> closure_labels(const ImplicationBasis& b,
                                        const std::vector<std::string>& s) {
  return to_labels(closure(b, to_mask(s, b.attributes, "closure seed")), b.attributes);
}

bool holds(const Implication& imp, const FormalContext& k) {
  Mask premise = to_mask(imp.premise, k.attributes, "implication premise");
  Mask conclusion = to_mask(imp.conclusion, k.attributes, "implication conclusion");
  return subset_of(derive_objects(k, premise), derive_objects(k, conclusion));
}

namespace {

// (size, lectic) enumeration order on attribute subsets: compare cardinality,
// then the sorted index sequences lexicographically.
bool size_lectic_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  auto ea = mask_elements(a), eb = mask_elements(b);
  return ea < eb;
}

}  // namespace

std::vector<std::pair<Mask, Mask>> proper_premises(const FormalContext& k) {
  int m = k.nattr();
  if (m > 20) throw error("proper premise enumeration limited to 20 attributes");
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (k.col(a) == k.col(b))
        throw input_error("proper premises require an attribute-clarified context");

  std::vector<Mask> cl(std::size_t(1) << m);
  for (Mask a = 0; a < cl.size(); ++a) cl[a] = attr_closure(k, a);

  std::vector<std::pair<Mask, Mask>> out;
  for (Mask a = 0; a < cl.size(); ++a) {
    // For A = {} the union over n in A is empty, so the formula leaves A''.
    Mask removed = a;
    for (int n : mask_elements(a)) removed |= cl[a & ~bit(n)];
    Mask star = cl[a] & ~removed;
    if (star) out.emplace_back(a, star);
  }
  std::sort(out.begin(), out.end(),
            [](auto& x, auto& y) { return size_lectic_less(x.first, y.first); });
  return out;
}

ImplicationBasis canonical_direct_basis(const FormalContext& k) {
  if (!is_reduced(k))
    throw input_error(
        "canonical_direct_basis requires a reduced context; call reduce() first");
  ImplicationBasis b;
  b.attributes = k.attributes;
  for (auto& pp : proper_premises(k)) {
    Mask premise = pp.first;
    Mask conclusion = attr_closure(k, premise) & ~premise;
    b.implications.push_back(
        make_implication(to_labels(premise, k.attributes), to_labels(conclusion, k.attributes)));
  }
  return b;
}

ImplicationBasis distributive_part(const ImplicationBasis& b) {
  ImplicationBasis out;
  out.attributes = b.attributes;
  for (auto& imp : b.implications)
    if (imp.premise.size() == 1) out.implications.push_back(imp);
  return out;
}

SetLattice closed_sets_lattice(const ImplicationBasis& b, std::size_t limit) {
  int m = static_cast<int>(b.attributes.size());
  if (m > 63) throw error("closed set enumeration limited to 63 attributes");
  std::vector<std::pair<Mask, Mask>> imps;
  for (auto& imp : b.implications)
    imps.emplace_back(to_mask(imp.premise, b.attributes, "implication premise"),
                      to_mask(imp.conclusion, b.attributes, "implication conclusion"));
  auto close = [&](Mask s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [p, c] : imps)
        if (subset_of(p, s) && !subset_of(c, s)) {
          s |= c;
          changed = true;
        }
    }
    return s;
  };

  // NextClosure over the closure operator enumerates every fixpoint once.
  std::vector<Mask> sets;
  Mask universe = full_mask(m);
  Mask a = close(0);
  sets.push_back(a);
  while (a != universe) {
    if (sets.size() >= limit) throw error("closed set family exceeds limit");
    Mask next = 0;
    bool found = false;
    for (int i = m - 1; i >= 0; --i) {
      if (has(a, i)) continue;
      Mask lower = a & (bit(i) - 1);
      Mask cand = close(lower | bit(i));
      if ((cand & ~(lower | bit(i)) & (bit(i) - 1)) == 0) {
        next = cand;
        found = true;
        break;
      }
    }
    assert(found);
    (void)found;
    a = next;
    sets.push_back(a);
  }
  return make_set_lattice(b.attributes, std::move(sets), false);
}

}  // namespace bk
