#include "bk/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace bk {

namespace {

// Down-sets as word vectors so bound computation stays near O(n^2 * n/64).
std::vector<std::vector<std::uint64_t>> down_rows(const Poset& p) {
  int n = p.size();
  int words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.le(b, a)) rows[a][b / 64] |= std::uint64_t(1) << (b % 64);
  return rows;
}

int locate_unique_bound(const std::vector<std::vector<std::uint64_t>>& rows,
                        const std::vector<std::uint64_t>& want, int n) {
  for (int x = 0; x < n; ++x)
    if (rows[x] == want) return x;
  return -1;
}

}  // namespace

Lattice as_lattice(const Poset& p) {
  int n = p.size();
  if (n == 0) throw input_error("empty poset is not a lattice");
  auto down = down_rows(p);
  auto up = down_rows(dual(p));
  int words = (n + 63) / 64;

  Lattice l;
  l.poset = p;
  l.meet_table.assign(std::size_t(n) * n, 0);
  l.join_table.assign(std::size_t(n) * n, 0);

  std::vector<std::uint64_t> acc(words);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      for (int w = 0; w < words; ++w) acc[w] = down[a][w] & down[b][w];
      int m = locate_unique_bound(down, acc, n);
      if (m < 0)
        throw input_error("not a lattice: no unique meet for (" + p.labels[a] + ", " +
                          p.labels[b] + ")");
      for (int w = 0; w < words; ++w) acc[w] = up[a][w] & up[b][w];
      int j = locate_unique_bound(up, acc, n);
      if (j < 0)
        throw input_error("not a lattice: no unique join for (" + p.labels[a] + ", " +
                          p.labels[b] + ")");
      l.meet_table[std::size_t(a) * n + b] = l.meet_table[std::size_t(b) * n + a] = m;
      l.join_table[std::size_t(a) * n + b] = l.join_table[std::size_t(b) * n + a] = j;
    }

  l.bottom = 0;
  l.top = 0;
  for (int x = 0; x < n; ++x) {
    l.bottom = l.meet(l.bottom, x);
    l.top = l.join(l.top, x);
  }
  return l;
}

Lattice dual(const Lattice& l) {
  Lattice d;
  d.poset = dual(l.poset);
  d.meet_table = l.join_table;
  d.join_table = l.meet_table;
  d.bottom = l.top;
  d.top = l.bottom;
  return d;
}

std::vector<int> join_irreducibles(const Lattice& l) {
  std::vector<int> count(l.size(), 0);
  for (auto& [lo, hi] : l.poset.covers) count[hi]++;
  std::vector<int> out;
  for (int x = 0; x < l.size(); ++x)
    if (count[x] == 1) out.push_back(x);
  return out;
}

std::vector<int> meet_irreducibles(const Lattice& l) {
  std::vector<int> count(l.size(), 0);
  for (auto& [lo, hi] : l.poset.covers) count[lo]++;
  std::vector<int> out;
  for (int x = 0; x < l.size(); ++x)
    if (count[x] == 1) out.push_back(x);
  return out;
}

bool is_distributive_law(const Lattice& l) {
  int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

namespace {

// Number of comparable unordered pairs distinguishes the closed 5-subsets:
// a chain has 10, M3 has 7, N5 has 8, the two B2-plus-chain shapes have 9.
bool classify_five(const Lattice& l, const std::array<int, 5>& s, bool want_n5,
                   ForbiddenSublattice& out) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      int m = l.meet(s[i], s[j]), v = l.join(s[i], s[j]);
      bool mc = false, vc = false;
      for (int k = 0; k < 5; ++k) {
        mc |= s[k] == m;
        vc |= s[k] == v;
      }
      if (!mc || !vc) return false;
    }
  int comparable = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (l.le(s[i], s[j]) || l.le(s[j], s[i])) comparable++;
  if (want_n5 && comparable != 8) return false;
  if (!want_n5 && comparable != 7) return false;

  int bot = s[0], top = s[0];
  for (int k = 1; k < 5; ++k) {
    bot = l.meet(bot, s[k]);
    top = l.join(top, s[k]);
  }
  std::vector<int> mid;
  for (int k = 0; k < 5; ++k)
    if (s[k] != bot && s[k] != top) mid.push_back(s[k]);
  assert(mid.size() == 3);
  out.kind = want_n5 ? "N5" : "M3";
  if (want_n5) {
    // Arrange the chain pair as (low, high) and the side last.
    int a = -1, b = -1, c = -1;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && l.le(mid[i], mid[j])) {
          a = mid[i];
          b = mid[j];
          c = mid[3 - i - j];
        }
    out.elems = {bot, a, b, c, top};
  } else {
    std::sort(mid.begin(), mid.end());
    out.elems = {bot, mid[0], mid[1], mid[2], top};
  }
  return true;
}

}  // namespace

std::optional<ForbiddenSublattice> find_forbidden_sublattice(const Lattice& l) {
  if (is_distributive_law(l)) return std::nullopt;
  int n = l.size();
  ForbiddenSublattice w;
  for (int pass = 0; pass < 2; ++pass) {
    bool want_n5 = pass == 0;
    std::array<int, 5> s;
    for (s[0] = 0; s[0] < n; ++s[0])
      for (s[1] = s[0] + 1; s[1] < n; ++s[1])
        for (s[2] = s[1] + 1; s[2] < n; ++s[2])
          for (s[3] = s[2] + 1; s[3] < n; ++s[3])
            for (s[4] = s[3] + 1; s[4] < n; ++s[4])
              if (classify_five(l, s, want_n5, w)) return w;
  }
  // Unreachable: a non-distributive lattice contains M3 or N5.
  throw error("non-distributive lattice without forbidden sublattice");
}

namespace {

struct IsoState {
  const Lattice* a;
  const Lattice* b;
  std::vector<int> color_a, color_b;
};

std::vector<int> refine_colors(const Lattice& l) {
  int n = l.size();
  std::vector<int> height(n, 0);
  // Height = longest chain from the bottom, computed over covers.
  {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      int cx = 0, cy = 0;
      for (int z = 0; z < n; ++z) {
        cx += l.le(z, x);
        cy += l.le(z, y);
      }
      return cx < cy;
    });
    for (int x : order)
      for (auto& [lo, hi] : l.poset.covers)
        if (hi == x) height[x] = std::max(height[x], height[lo] + 1);
  }
  std::vector<int> updeg(n, 0), downdeg(n, 0);
  for (auto& [lo, hi] : l.poset.covers) {
    updeg[lo]++;
    downdeg[hi]++;
  }
  std::vector<std::vector<long>> sig(n);
  for (int x = 0; x < n; ++x) sig[x] = {height[x], updeg[x], downdeg[x]};

  std::vector<int> color(n, 0);
  for (int round = 0; round < n; ++round) {
    // Codes assigned by sorted signature so they are comparable across lattices.
    std::vector<std::vector<long>> keys(sig.begin(), sig.end());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> nc(n);
    for (int x = 0; x < n; ++x)
      nc[x] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[x]) - keys.begin());
    if (nc == color && round > 0) break;
    color = nc;
    for (int x = 0; x < n; ++x) {
      std::vector<long> up, down;
      for (auto& [lo, hi] : l.poset.covers) {
        if (lo == x) up.push_back(color[hi]);
        if (hi == x) down.push_back(color[lo]);
      }
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      sig[x] = {color[x]};
      sig[x].insert(sig[x].end(), up.begin(), up.end());
      sig[x].push_back(-1);
      sig[x].insert(sig[x].end(), down.begin(), down.end());
    }
  }
  return color;
}

bool extend_iso(const IsoState& st, std::vector<int>& map_ab, std::vector<char>& used,
                const std::vector<int>& order, std::size_t pos) {
  const Lattice& A = *st.a;
  const Lattice& B = *st.b;
  int n = A.size();
  if (pos == order.size()) return true;
  int x = order[pos];
  for (int y = 0; y < n; ++y) {
    if (used[y] || st.color_b[y] != st.color_a[x]) continue;
    bool ok = true;
    for (std::size_t q = 0; q < pos && ok; ++q) {
      int u = order[q];
      if (A.le(u, x) != B.le(map_ab[u], y)) ok = false;
      if (A.le(x, u) != B.le(y, map_ab[u])) ok = false;
    }
    if (!ok) continue;
    map_ab[x] = y;
    used[y] = 1;
    if (extend_iso(st, map_ab, used, order, pos + 1)) return true;
    used[y] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Lattice& l1, const Lattice& l2) {
  int n = l1.size();
  if (n != l2.size()) return std::nullopt;
  IsoState st{&l1, &l2, refine_colors(l1), refine_colors(l2)};
  {
    std::vector<int> h1 = st.color_a, h2 = st.color_b;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return std::nullopt;
  }
  // Match rare color classes first to cut the search.
  std::vector<int> class_size(n + 1, 0);
  for (int x = 0; x < n; ++x) class_size[st.color_a[x]]++;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int sx = class_size[st.color_a[x]], sy = class_size[st.color_a[y]];
    return sx != sy ? sx < sy : x < y;
  });
  std::vector<int> map_ab(n, -1);
  std::vector<char> used(n, 0);
  if (extend_iso(st, map_ab, used, order, 0)) return map_ab;
  return std::nullopt;
}

std::string set_label(const std::vector<std::string>& members) {
  return "{" + join_strings(members, ", ") + "}";
}

int SetLattice::index_of_set(Mask m) const {
  for (int i = 0; i < static_cast<int>(sets.size()); ++i)
    if (sets[i] == m) return i;
  return -1;
}

std::vector<std::string> SetLattice::member_labels(int elem) const {
  std::vector<std::string> out;
  for (int i : mask_elements(sets[elem])) out.push_back(universe[i]);
  std::sort(out.begin(), out.end());
  return out;
}

SetLattice make_set_lattice(std::vector<std::string> universe, std::vector<Mask> sets,
                            bool by_superset) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  std::vector<std::vector<std::string>> members(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (int e : mask_elements(sets[i])) members[i].push_back(universe[e]);
    std::sort(members[i].begin(), members[i].end());
  }
  std::vector<int> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return members[a] < members[b]; });

  SetLattice out;
  out.universe = std::move(universe);
  out.by_superset = by_superset;
  out.sets.reserve(sets.size());
  std::vector<std::string> labels;
  for (int i : order) {
    out.sets.push_back(sets[i]);
    labels.push_back(set_label(members[i]));
  }
  int n = static_cast<int>(out.sets.size());
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool inc = subset_of(out.sets[a], out.sets[b]);
      if (by_superset) inc = subset_of(out.sets[b], out.sets[a]);
      leq[a][b] = inc ? 1 : 0;
    }
  Poset p;
  p.labels = std::move(labels);
  p.leq = std::move(leq);
  // Covers via the generic reduction in subposet order.
  {
    int m = n;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (a == b || !p.leq[a][b]) continue;
        bool is_cover = true;
        for (int z = 0; z < m && is_cover; ++z)
          if (z != a && z != b && p.leq[a][z] && p.leq[z][b]) is_cover = false;
        if (is_cover) p.covers.emplace_back(a, b);
      }
    std::sort(p.covers.begin(), p.covers.end());
  }
  out.lattice = as_lattice(p);
  return out;
}

SetFamilyLattice order_ideals(const Poset& p) {
  return make_set_lattice(p.labels, ideal_masks(p), false);
}

SetFamilyLattice order_filters(const Poset& p) {
  return make_set_lattice(p.labels, filter_masks(p), true);
}

}  // namespace bk
