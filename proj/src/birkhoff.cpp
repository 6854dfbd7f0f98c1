#include "bk/birkhoff.hpp"

#include <algorithm>
#include <cassert>

#include "bk/datasets.hpp"

namespace bk {

std::vector<std::string> CompletionReport::element_members(int elem) const {
  std::vector<std::string> out;
  for (int i : mask_elements(element_sets[elem])) out.push_back(universe[i]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

CompletionReport lattice_completion(const Lattice& l, bool up) {
  std::vector<int> irr = up ? meet_irreducibles(l) : join_irreducibles(l);
  Poset sub = subposet(l.poset, irr);
  SetFamilyLattice fam = up ? order_filters(sub) : order_ideals(sub);

  CompletionReport r;
  r.up = up;
  r.context_level = false;
  r.universe = fam.universe;
  r.element_sets = fam.sets;
  r.completed = fam.lattice;
  r.original_labels = l.poset.labels;
  r.embedding.resize(l.size());
  for (int x = 0; x < l.size(); ++x) {
    Mask image = 0;
    for (std::size_t i = 0; i < irr.size(); ++i) {
      bool in = up ? l.le(x, irr[i]) : l.le(irr[i], x);
      if (in) image |= bit(static_cast<int>(i));
    }
    int idx = fam.index_of_set(image);
    assert(idx >= 0);
    r.embedding[x] = idx;
  }
  return r;
}

}  // namespace

CompletionReport birkhoff_up(const Lattice& l) { return lattice_completion(l, true); }

CompletionReport birkhoff_down(const Lattice& l) { return lattice_completion(l, false); }

EtaResult eta(const Lattice& l) {
  if (auto w = find_forbidden_sublattice(l)) {
    std::vector<std::string> names;
    for (int e : w->elems) names.push_back(l.label(e));
    throw not_distributive_error(
        "eta requires a distributive lattice; found " + w->kind + " sublattice {" +
            join_strings(names, ", ") + "}",
        *w);
  }
  EtaResult out{birkhoff_up(l), {}};
  out.map = out.completion.embedding;
  const Lattice& c = out.completion.completed;
  if (l.size() != c.size()) throw error("eta image size mismatch on a distributive lattice");
  std::vector<char> hit(c.size(), 0);
  for (int x : out.map) hit[x] = 1;
  for (char h : hit)
    if (!h) throw error("eta is not surjective on a distributive lattice");
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      if (l.le(a, b) != c.le(out.map[a], out.map[b]))
        throw error("eta does not preserve order both ways");
  return out;
}

FactorResult factor_embedding(const Lattice& l, const Lattice& lhat,
                              const std::vector<int>& phi) {
  if (auto w = find_forbidden_sublattice(lhat)) {
    std::vector<std::string> names;
    for (int e : w->elems) names.push_back(lhat.label(e));
    throw not_distributive_error("factor_embedding requires a distributive codomain; found " +
                                     w->kind + " sublattice {" + join_strings(names, ", ") + "}",
                                 *w);
  }
  if (static_cast<int>(phi.size()) != l.size())
    throw input_error("phi does not cover the domain lattice");
  for (int v : phi)
    if (v < 0 || v >= lhat.size()) throw input_error("phi maps outside the codomain lattice");
  for (int a = 0; a < l.size(); ++a)
    for (int b = a + 1; b < l.size(); ++b)
      if (phi[a] == phi[b])
        throw input_error("phi is not injective: (" + l.label(a) + ", " + l.label(b) +
                          ") collapse");
  if (phi[l.bottom] != lhat.bottom)
    throw input_error("phi does not map the bottom to the bottom");
  for (int a = 0; a < l.size(); ++a)
    for (int b = a; b < l.size(); ++b)
      if (phi[l.join(a, b)] != lhat.join(phi[a], phi[b]))
        throw input_error("phi does not preserve the join of (" + l.label(a) + ", " +
                          l.label(b) + ")");

  FactorResult out{birkhoff_up(l), {}};
  const CompletionReport& bc = out.completion;
  int n = bc.completed.size();
  out.epsilon.assign(n, lhat.top);
  for (int a = 0; a < n; ++a) {
    int acc = lhat.top;  // empty meet
    for (int x = 0; x < l.size(); ++x)
      if (subset_of(bc.element_sets[bc.embedding[x]], bc.element_sets[a]))
        acc = lhat.meet(acc, phi[x]);
    out.epsilon[a] = acc;
  }

  // These hold for every valid input; failures here are library bugs, not caller errors.
  for (int x = 0; x < l.size(); ++x)
    if (out.epsilon[bc.embedding[x]] != phi[x])
      throw error("factorization does not satisfy phi = epsilon o iota");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (out.epsilon[a] == out.epsilon[b]) throw error("epsilon is not injective");
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (out.epsilon[bc.completed.join(a, b)] != lhat.join(out.epsilon[a], out.epsilon[b]))
        throw error("epsilon does not preserve joins");
  return out;
}

namespace {

// Clarifies attributes only; object duplicates are kept.
FormalContext clarify_attributes(
    const FormalContext& k, std::vector<std::pair<std::string, std::string>>& merges) {
  std::vector<int> keep;
  for (int m = 0; m < k.nattr(); ++m) {
    int best = m;
    for (int n = 0; n < k.nattr(); ++n)
      if (k.col(n) == k.col(m) && k.attributes[n] < k.attributes[best]) best = n;
    if (best == m)
      keep.push_back(m);
    else
      merges.emplace_back(k.attributes[m], k.attributes[best]);
  }
  std::vector<std::string> attributes;
  for (int m : keep) attributes.push_back(k.attributes[m]);
  std::vector<Mask> rows(k.nobj(), 0);
  for (int g = 0; g < k.nobj(); ++g)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (k.incident(g, keep[j])) rows[g] |= bit(static_cast<int>(j));
  return make_context(k.objects, std::move(attributes), std::move(rows));
}

// Relabels concept-lattice elements by the given side's member sets and fills
// the report's set data.
void fill_concept_elements(CompletionReport& r, const ConceptLattice& cl, bool intents) {
  r.universe = intents ? cl.context.attributes : cl.context.objects;
  r.completed = cl.lattice;
  r.element_sets.clear();
  for (std::size_t i = 0; i < cl.concepts.size(); ++i) {
    Mask s = intents ? cl.concepts[i].intent : cl.concepts[i].extent;
    r.element_sets.push_back(s);
    std::vector<std::string> members;
    for (int e : mask_elements(s)) members.push_back(r.universe[e]);
    std::sort(members.begin(), members.end());
    r.completed.poset.labels[i] = set_label(members);
  }
}

ImplicationBasis invalidated_implications(const FormalContext& original,
                                          const FormalContext& completed) {
  ImplicationBasis failing;
  FormalContext red = reduce(original);
  ImplicationBasis basis = canonical_direct_basis(red);
  failing.attributes = basis.attributes;
  for (auto& imp : basis.implications)
    if (!holds(imp, completed)) failing.implications.push_back(imp);
  return failing;
}

}  // namespace

ContextCompletion birkhoff_completion_context(const FormalContext& k) {
  ContextCompletion out;
  FormalContext ac = clarify_attributes(k, out.report.attribute_merges);

  std::vector<int> mm = meet_irreducible_attributes(ac);
  FormalContext ext = ac;
  for (int m : mm) {
    Mask row = 0;
    for (int n = 0; n < ac.nattr(); ++n)
      if (!attribute_geq(ac, m, n)) row |= bit(n);
    ext.objects.push_back("~not:" + ac.attributes[m]);
    ext.rows.push_back(row);
  }
  if (ext.nobj() > 63) throw error("up-set completion exceeds the object limit");
  out.completed_context = ext;

  ConceptLattice original_cl = concept_lattice(ac);
  ConceptLattice completed_cl = concept_lattice(ext);

  CompletionReport& r = out.report;
  r.up = true;
  r.context_level = true;
  fill_concept_elements(r, completed_cl, /*intents=*/true);
  r.original_labels.clear();
  r.embedding.clear();
  for (auto& c : original_cl.concepts) {
    int idx = completed_cl.find_intent(c.intent);
    assert(idx >= 0);
    r.embedding.push_back(idx);
    std::vector<std::string> members;
    for (int e : mask_elements(c.intent)) members.push_back(ac.attributes[e]);
    std::sort(members.begin(), members.end());
    r.original_labels.push_back(set_label(members));
  }
  for (std::size_t i = 0; i < mm.size(); ++i) {
    int g = ac.nobj() + static_cast<int>(i);
    r.added_generators.emplace_back(ext.objects[g], completed_cl.gamma[g]);
    for (int h = 0; h < ac.nobj(); ++h)
      if (ext.rows[h] == ext.rows[g]) r.coincidences.emplace_back(ext.objects[g], ext.objects[h]);
  }
  r.invalidated = invalidated_implications(k, ext);
  return out;
}

ContextCompletion birkhoff_completion_context_downset(const FormalContext& k) {
  ContextCompletion out;
  ConceptLattice original_cl = concept_lattice(k);

  std::vector<int> lower(original_cl.lattice.size(), 0);
  for (auto& [lo, hi] : original_cl.lattice.poset.covers) lower[hi]++;
  std::vector<int> gens;
  for (int g = 0; g < k.nobj(); ++g) {
    int c = original_cl.gamma[g];
    if (c != original_cl.lattice.bottom && lower[c] == 1) gens.push_back(g);
  }

  FormalContext ext = k;
  for (int g : gens) {
    ext.attributes.push_back("~not:" + k.objects[g]);
    int col_index = ext.nattr() - 1;
    for (int h = 0; h < k.nobj(); ++h)
      if (!subset_of(k.rows[h], k.rows[g])) ext.rows[h] |= bit(col_index);
  }
  if (ext.nattr() > 63) throw error("down-set completion exceeds the attribute limit");
  out.completed_context = ext;

  ConceptLattice completed_cl = concept_lattice(ext);
  CompletionReport& r = out.report;
  r.up = false;
  r.context_level = true;
  fill_concept_elements(r, completed_cl, /*intents=*/false);
  r.original_labels.clear();
  r.embedding.clear();
  for (auto& c : original_cl.concepts) {
    int idx = completed_cl.find_extent(c.extent);
    assert(idx >= 0);
    r.embedding.push_back(idx);
    std::vector<std::string> members;
    for (int e : mask_elements(c.extent)) members.push_back(k.objects[e]);
    std::sort(members.begin(), members.end());
    r.original_labels.push_back(set_label(members));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int m = k.nattr() + static_cast<int>(i);
    r.added_generators.emplace_back(ext.attributes[m], completed_cl.mu[m]);
    for (int n = 0; n < k.nattr(); ++n)
      if (ext.col(n) == ext.col(m)) r.coincidences.emplace_back(ext.attributes[m], ext.attributes[n]);
  }
  r.invalidated = invalidated_implications(k, ext);
  return out;
}

CommutationCheck verify_commutation(const FormalContext& k) {
  CommutationCheck out;
  ContextCompletion ctx = birkhoff_completion_context(k);
  CompletionReport lat = birkhoff_up(concept_lattice(k).lattice);
  out.context_route_size = ctx.report.completed.size();
  out.lattice_route_size = lat.completed.size();
  out.ok = is_isomorphic(ctx.report.completed, lat.completed).has_value();
  return out;
}

bool verify_duality(const Lattice& l) {
  CompletionReport down = birkhoff_down(l);
  CompletionReport up_of_dual = birkhoff_up(dual(l));
  return is_isomorphic(down.completed, dual(up_of_dual.completed)).has_value();
}

Fig6Report fig6_check() {
  Fig6Report r;
  Lattice left = dataset_fig6();
  Lattice right = dataset_fig6_extension();
  r.left_size = left.size();
  r.right_size = right.size();
  r.right_distributive = is_distributive_law(right);

  r.inclusion_embedding = true;
  for (int a = 0; a < left.size() && r.inclusion_embedding; ++a) {
    int fa = right.poset.index_of(left.label(a));
    if (fa < 0) {
      r.inclusion_embedding = false;
      break;
    }
    for (int b = 0; b < left.size(); ++b) {
      int fb = right.poset.index_of(left.label(b));
      if (fb < 0 || left.le(a, b) != right.le(fa, fb)) {
        r.inclusion_embedding = false;
        break;
      }
    }
  }

  r.left_up_size = birkhoff_up(left).completed.size();
  r.left_down_size = birkhoff_down(left).completed.size();
  r.ok = r.right_distributive && r.inclusion_embedding && r.left_up_size > r.right_size &&
         r.left_down_size > r.right_size;
  return r;
}

}  // namespace bk
