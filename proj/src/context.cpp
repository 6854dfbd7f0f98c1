#include "bk/context.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace bk {

Mask FormalContext::col(int m) const {
  Mask out = 0;
  for (int g = 0; g < nobj(); ++g)
    if (has(rows[g], m)) out |= bit(g);
  return out;
}

int FormalContext::object_index(const std::string& label) const {
  for (int g = 0; g < nobj(); ++g)
    if (objects[g] == label) return g;
  return -1;
}

int FormalContext::attribute_index(const std::string& label) const {
  for (int m = 0; m < nattr(); ++m)
    if (attributes[m] == label) return m;
  return -1;
}

FormalContext make_context(std::vector<std::string> objects,
                           std::vector<std::string> attributes, std::vector<Mask> rows) {
  if (objects.size() > 63 || attributes.size() > 63)
    throw input_error("context exceeds the 63-object/63-attribute limit");
  if (rows.size() != objects.size())
    throw input_error("context row count does not match object count");
  auto check_unique = [](const std::vector<std::string>& labels, const char* side) {
    std::set<std::string> seen;
    for (auto& s : labels)
      if (!seen.insert(s).second)
        throw input_error(std::string("duplicate ") + side + " label '" + s + "'");
  };
  check_unique(objects, "object");
  check_unique(attributes, "attribute");
  Mask attr_universe = full_mask(static_cast<int>(attributes.size()));
  for (Mask r : rows)
    if (!subset_of(r, attr_universe)) throw input_error("incidence row uses unknown attribute bits");
  FormalContext k;
  k.objects = std::move(objects);
  k.attributes = std::move(attributes);
  k.rows = std::move(rows);
  return k;
}

Mask derive_attributes(const FormalContext& k, Mask object_set) {
  Mask out = full_mask(k.nattr());
  for (int g : mask_elements(object_set)) out &= k.rows[g];
  return out;
}

Mask derive_objects(const FormalContext& k, Mask attr_set) {
  Mask out = 0;
  for (int g = 0; g < k.nobj(); ++g)
    if (subset_of(attr_set, k.rows[g])) out |= bit(g);
  return out;
}

Mask attr_closure(const FormalContext& k, Mask attr_set) {
  return derive_attributes(k, derive_objects(k, attr_set));
}

Mask obj_closure(const FormalContext& k, Mask object_set) {
  return derive_objects(k, derive_attributes(k, object_set));
}

int ConceptLattice::find_extent(Mask extent) const {
  for (int i = 0; i < static_cast<int>(concepts.size()); ++i)
    if (concepts[i].extent == extent) return i;
  return -1;
}

int ConceptLattice::find_intent(Mask intent) const {
  for (int i = 0; i < static_cast<int>(concepts.size()); ++i)
    if (concepts[i].intent == intent) return i;
  return -1;
}

namespace {

// NextClosure over attribute sets: enumerates all intents in lectic order.
std::vector<Mask> all_intents(const FormalContext& k) {
  int m = k.nattr();
  std::vector<Mask> intents;
  Mask a = attr_closure(k, 0);
  intents.push_back(a);
  Mask universe = full_mask(m);
  while (a != universe) {
    Mask next = 0;
    for (int i = m - 1; i >= 0; --i) {
      if (has(a, i)) continue;
      Mask lower = a & (bit(i) - 1);
      Mask cand = attr_closure(k, lower | bit(i));
      // a <_i cand: the new elements below i must be empty.
      if ((cand & ~(lower | bit(i)) & (bit(i) - 1)) == 0) {
        next = cand;
        break;
      }
    }
    assert(next != 0 || universe == 0);
    a = next;
    intents.push_back(a);
  }
  return intents;
}

}  // namespace

ConceptLattice concept_lattice(const FormalContext& k) {
  ConceptLattice cl;
  cl.context = k;
  for (Mask intent : all_intents(k))
    cl.concepts.push_back({derive_objects(k, intent), intent});

  int n = static_cast<int>(cl.concepts.size());
  Poset p;
  p.leq.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      p.leq[i][j] = subset_of(cl.concepts[i].extent, cl.concepts[j].extent) ? 1 : 0;
    std::vector<std::string> members;
    for (int g : mask_elements(cl.concepts[i].extent)) members.push_back(k.objects[g]);
    std::sort(members.begin(), members.end());
    p.labels.push_back(set_label(members));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.leq[a][b]) continue;
      bool is_cover = true;
      for (int z = 0; z < n && is_cover; ++z)
        if (z != a && z != b && p.leq[a][z] && p.leq[z][b]) is_cover = false;
      if (is_cover) p.covers.emplace_back(a, b);
    }
  std::sort(p.covers.begin(), p.covers.end());
  cl.lattice = as_lattice(p);

  cl.gamma.resize(k.nobj());
  for (int g = 0; g < k.nobj(); ++g) {
    int idx = cl.find_intent(k.rows[g]);
    assert(idx >= 0);
    cl.gamma[g] = idx;
  }
  cl.mu.resize(k.nattr());
  for (int m = 0; m < k.nattr(); ++m) {
    int idx = cl.find_extent(k.col(m));
    assert(idx >= 0);
    cl.mu[m] = idx;
  }
  return cl;
}

bool attribute_geq(const FormalContext& k, int m, int n) {
  return subset_of(k.col(n), k.col(m));
}

std::vector<int> meet_irreducible_attributes(const FormalContext& k) {
  ConceptLattice cl = concept_lattice(k);
  std::vector<int> upper(cl.lattice.size(), 0);
  for (auto& [lo, hi] : cl.lattice.poset.covers) upper[lo]++;
  std::vector<int> out;
  for (int m = 0; m < k.nattr(); ++m) {
    bool first_of_column = true;
    for (int n2 = 0; n2 < k.nattr(); ++n2)
      if (n2 != m && k.col(n2) == k.col(m) && k.attributes[n2] < k.attributes[m])
        first_of_column = false;
    int c = cl.mu[m];
    if (first_of_column && c != cl.lattice.top && upper[c] == 1) out.push_back(m);
  }
  return out;
}

namespace {

// Keeps, within every duplicate group, the lexicographically least label;
// surviving entries stay in original index order.
template <typename KeyOf>
std::vector<int> clarified_survivors(int n, KeyOf key, const std::vector<std::string>& labels,
                                     std::vector<std::pair<std::string, std::string>>& merges) {
  std::vector<int> keep;
  std::vector<int> rep(n, -1);
  for (int i = 0; i < n; ++i) {
    int best = i;
    for (int j = 0; j < n; ++j)
      if (key(j) == key(i) && labels[j] < labels[best]) best = j;
    rep[i] = best;
  }
  for (int i = 0; i < n; ++i) {
    if (rep[i] == i)
      keep.push_back(i);
    else
      merges.emplace_back(labels[i], labels[rep[i]]);
  }
  return keep;
}

}  // namespace

Clarified clarify_traced(const FormalContext& k) {
  Clarified out;
  auto obj_keep = clarified_survivors(
      k.nobj(), [&](int g) { return k.rows[g]; }, k.objects, out.object_merges);
  auto attr_keep = clarified_survivors(
      k.nattr(), [&](int m) { return k.col(m); }, k.attributes, out.attribute_merges);

  std::vector<std::string> objects, attributes;
  for (int g : obj_keep) objects.push_back(k.objects[g]);
  for (int m : attr_keep) attributes.push_back(k.attributes[m]);
  std::vector<Mask> rows;
  for (int g : obj_keep) {
    Mask r = 0;
    for (std::size_t j = 0; j < attr_keep.size(); ++j)
      if (k.incident(g, attr_keep[j])) r |= bit(static_cast<int>(j));
    rows.push_back(r);
  }
  out.context = make_context(std::move(objects), std::move(attributes), std::move(rows));
  return out;
}

FormalContext clarify(const FormalContext& k) { return clarify_traced(k).context; }

namespace {

// m is reducible iff its column is the intersection of the other columns
// containing it (the empty intersection being all objects).
bool attribute_reducible(const FormalContext& k, int m) {
  Mask inter = full_mask(k.nobj());
  for (int n = 0; n < k.nattr(); ++n)
    if (n != m && subset_of(k.col(m), k.col(n))) inter &= k.col(n);
  return inter == k.col(m);
}

bool object_reducible(const FormalContext& k, int g) {
  Mask inter = full_mask(k.nattr());
  for (int h = 0; h < k.nobj(); ++h)
    if (h != g && subset_of(k.rows[g], k.rows[h])) inter &= k.rows[h];
  return inter == k.rows[g];
}

}  // namespace

FormalContext reduce(const FormalContext& k) {
  FormalContext c = clarify(k);
  std::vector<int> obj_keep, attr_keep;
  for (int g = 0; g < c.nobj(); ++g)
    if (!object_reducible(c, g)) obj_keep.push_back(g);
  for (int m = 0; m < c.nattr(); ++m)
    if (!attribute_reducible(c, m)) attr_keep.push_back(m);

  std::vector<std::string> objects, attributes;
  for (int g : obj_keep) objects.push_back(c.objects[g]);
  for (int m : attr_keep) attributes.push_back(c.attributes[m]);
  std::vector<Mask> rows;
  for (int g : obj_keep) {
    Mask r = 0;
    for (std::size_t j = 0; j < attr_keep.size(); ++j)
      if (c.incident(g, attr_keep[j])) r |= bit(static_cast<int>(j));
    rows.push_back(r);
  }
  return make_context(std::move(objects), std::move(attributes), std::move(rows));
}

bool is_clarified(const FormalContext& k) {
  for (int g = 0; g < k.nobj(); ++g)
    for (int h = g + 1; h < k.nobj(); ++h)
      if (k.rows[g] == k.rows[h]) return false;
  for (int m = 0; m < k.nattr(); ++m)
    for (int n = m + 1; n < k.nattr(); ++n)
      if (k.col(m) == k.col(n)) return false;
  return true;
}

bool is_reduced(const FormalContext& k) {
  if (!is_clarified(k)) return false;
  for (int g = 0; g < k.nobj(); ++g)
    if (object_reducible(k, g)) return false;
  for (int m = 0; m < k.nattr(); ++m)
    if (attribute_reducible(k, m)) return false;
  return true;
}

FormalContext contraordinal_scale(const Poset& p) {
  int n = p.size();
  std::vector<std::string> objects;
  for (auto& s : p.labels) objects.push_back("~not:" + s);
  std::vector<Mask> rows(n, 0);
  for (int g = 0; g < n; ++g)
    for (int m = 0; m < n; ++m)
      if (!p.le(m, g)) rows[g] |= bit(m);  // g I m iff g is not >= m
  return make_context(std::move(objects), p.labels, std::move(rows));
}

FormalContext standard_context(const Lattice& l) {
  std::vector<int> js = join_irreducibles(l);
  std::vector<int> ms = meet_irreducibles(l);
  std::vector<std::string> objects, attributes;
  for (int j : js) objects.push_back(l.label(j));
  for (int m : ms) attributes.push_back(l.label(m));
  std::vector<Mask> rows(js.size(), 0);
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (l.le(js[a], ms[b])) rows[a] |= bit(static_cast<int>(b));
  return make_context(std::move(objects), std::move(attributes), std::move(rows));
}

}  // namespace bk
