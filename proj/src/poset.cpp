#include "bk/poset.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

namespace bk {

int Poset::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

std::vector<int> Poset::lower_covers(int x) const {
  std::vector<int> out;
  for (auto& [lo, hi] : covers)
    if (hi == x) out.push_back(lo);
  return out;
}

std::vector<int> Poset::upper_covers(int x) const {
  std::vector<int> out;
  for (auto& [lo, hi] : covers)
    if (lo == x) out.push_back(hi);
  return out;
}

namespace {

// Shortest path a -> b through the input edge list, for cycle reporting.
std::vector<int> find_path(int n, const std::vector<std::pair<int, int>>& edges, int a, int b) {
  std::vector<int> prev(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(a);
  seen[a] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == b) break;
    for (auto& [u, v] : edges)
      if (u == x && !seen[v]) {
        seen[v] = 1;
        prev[v] = x;
        q.push(v);
      }
  }
  std::vector<int> path;
  for (int x = b; x != -1; x = prev[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::pair<int, int>> compute_covers(const std::vector<std::vector<char>>& leq) {
  int n = static_cast<int>(leq.size());
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool is_cover = true;
      for (int z = 0; z < n && is_cover; ++z)
        if (z != a && z != b && leq[a][z] && leq[z][b]) is_cover = false;
      if (is_cover) covers.emplace_back(a, b);
    }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace

Poset make_poset(std::vector<std::string> labels,
                 const std::vector<std::pair<int, int>>& le_pairs) {
  int n = static_cast<int>(labels.size());
  {
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (static_cast<int>(uniq.size()) != n) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (labels[i] == labels[j])
            throw input_error("duplicate element label '" + labels[i] + "'");
    }
  }
  for (auto& [a, b] : le_pairs)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw input_error("order pair refers to element index out of range");

  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) leq[i][i] = 1;
  for (auto& [a, b] : le_pairs) leq[a][b] = 1;
  // Floyd-Warshall style closure; n stays small enough at desk scale.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (leq[k][j]) leq[i][j] = 1;
    }

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (leq[a][b] && leq[b][a]) {
        auto fwd = find_path(n, le_pairs, a, b);
        auto back = find_path(n, le_pairs, b, a);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < fwd.size(); ++i) names.push_back(labels[fwd[i]]);
        for (std::size_t i = 1; i < back.size(); ++i) names.push_back(labels[back[i]]);
        throw input_error("order contains a cycle: " + join_strings(names, " <= "));
      }

  Poset p;
  p.labels = std::move(labels);
  p.covers = compute_covers(leq);
  p.leq = std::move(leq);
  return p;
}

Poset make_poset(std::vector<std::string> labels,
                 const std::vector<std::pair<std::string, std::string>>& le_pairs) {
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (index.count(labels[i]))
      throw input_error("duplicate element label '" + labels[i] + "'");
    index[labels[i]] = i;
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(le_pairs.size());
  for (auto& [a, b] : le_pairs) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw input_error("order pair refers to unknown label '" + a + "'");
    if (ib == index.end()) throw input_error("order pair refers to unknown label '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return make_poset(std::move(labels), pairs);
}

Poset dual(const Poset& p) {
  int n = p.size();
  Poset d;
  d.labels = p.labels;
  d.leq.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.leq[a][b] = p.leq[b][a];
  for (auto& [lo, hi] : p.covers) d.covers.emplace_back(hi, lo);
  std::sort(d.covers.begin(), d.covers.end());
  return d;
}

Poset subposet(const Poset& p, const std::vector<int>& elems) {
  int n = static_cast<int>(elems.size());
  Poset s;
  s.labels.reserve(n);
  for (int e : elems) s.labels.push_back(p.labels[e]);
  s.leq.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.leq[i][j] = p.leq[elems[i]][elems[j]];
  // Recompute covers within the restriction; they are not inherited.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !s.leq[a][b]) continue;
      bool is_cover = true;
      for (int z = 0; z < n && is_cover; ++z)
        if (z != a && z != b && s.leq[a][z] && s.leq[z][b]) is_cover = false;
      if (is_cover) s.covers.emplace_back(a, b);
    }
  std::sort(s.covers.begin(), s.covers.end());
  return s;
}

namespace {

// Enumerates down-closed subsets by deciding membership element by element in
// a linear extension; an element may join only if all its strict predecessors
// already did.
void gen_ideals(const Poset& p, const std::vector<int>& topo, std::size_t pos, Mask acc,
                const std::vector<Mask>& strict_down, std::vector<Mask>& out, std::size_t limit) {
  if (pos == topo.size()) {
    if (out.size() >= limit) throw error("order ideal family exceeds limit");
    out.push_back(acc);
    return;
  }
  int x = topo[pos];
  gen_ideals(p, topo, pos + 1, acc, strict_down, out, limit);
  if (subset_of(strict_down[x], acc))
    gen_ideals(p, topo, pos + 1, acc | bit(x), strict_down, out, limit);
}

}  // namespace

std::vector<Mask> ideal_masks(const Poset& p, std::size_t limit) {
  int n = p.size();
  if (n > 63) throw error("poset too large for mask-based ideal enumeration");
  std::vector<Mask> strict_down(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.le(b, a)) strict_down[a] |= bit(b);
  // Linear extension: sort by strict-down-set size, ties by index.
  std::vector<int> topo(n);
  for (int i = 0; i < n; ++i) topo[i] = i;
  std::stable_sort(topo.begin(), topo.end(), [&](int a, int b) {
    return popcount(strict_down[a]) < popcount(strict_down[b]);
  });
  std::vector<Mask> out;
  gen_ideals(p, topo, 0, 0, strict_down, out, limit);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::vector<Mask> filter_masks(const Poset& p, std::size_t limit) {
  return ideal_masks(dual(p), limit);
}

}  // namespace bk
