// Brute-force reference computations straight from the definitions. Nothing
// here calls into the library beyond reading a group's Cayley table.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "nilgraph/group.hpp"

namespace oracle_ref {

using nilgraph::ConcreteGroup;
using nilgraph::Element;
using Members = std::vector<bool>;

inline std::size_t count(const Members& m) { return static_cast<std::size_t>(std::count(m.begin(), m.end(), true)); }

inline Element inverse(const ConcreteGroup& g, Element x) {
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == 0) return y;
  return 0;
}

inline Element comm(const ConcreteGroup& g, Element x, Element y) {
  return g.mul(g.mul(inverse(g, x), inverse(g, y)), g.mul(x, y));
}

inline std::uint32_t order_of(const ConcreteGroup& g, Element x) {
  std::uint32_t k = 1;
  for (Element p = x; p != 0; p = g.mul(p, x)) ++k;
  return k;
}

// Repeated squaring of the set under products until nothing new appears.
inline Members closure(const ConcreteGroup& g, const std::vector<Element>& seed) {
  Members m(g.order(), false);
  m[0] = true;
  for (Element s : seed) m[s] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element a = 0; a < g.order(); ++a) {
      if (!m[a]) continue;
      for (Element b = 0; b < g.order(); ++b)
        if (m[b] && !m[g.mul(a, b)]) {
          m[g.mul(a, b)] = true;
          grew = true;
        }
    }
  }
  return m;
}

inline Members center(const ConcreteGroup& g) {
  Members m(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    bool c = true;
    for (Element y = 0; y < g.order() && c; ++y) c = g.mul(x, y) == g.mul(y, x);
    m[x] = c;
  }
  return m;
}

// Upper central series of H computed inside H: Z_{i+1} = {h : [h,k] in Z_i for all k in H}.
inline std::vector<Members> upper_central(const ConcreteGroup& g, const Members& h) {
  std::vector<Members> terms;
  Members z(g.order(), false);
  z[0] = true;
  terms.push_back(z);
  while (true) {
    Members next(g.order(), false);
    for (Element x = 0; x < g.order(); ++x) {
      if (!h[x]) continue;
      bool ok = true;
      for (Element k = 0; k < g.order() && ok; ++k)
        if (h[k]) ok = z[comm(g, x, k)];
      next[x] = ok;
    }
    if (next == z) return terms;
    z = next;
    terms.push_back(z);
  }
}

inline bool nilpotent(const ConcreteGroup& g, const Members& h) { return upper_central(g, h).back() == h; }

inline Members all(const ConcreteGroup& g) { return Members(g.order(), true); }

inline bool pair_nilpotent(const ConcreteGroup& g, Element x, Element y) { return nilpotent(g, closure(g, {x, y})); }

inline Members nil(const ConcreteGroup& g, Element x) {
  Members m(g.order(), false);
  for (Element y = 0; y < g.order(); ++y) m[y] = pair_nilpotent(g, x, y);
  return m;
}

inline bool is_normal(const ConcreteGroup& g, const Members& h) {
  for (Element x = 0; x < g.order(); ++x) {
    if (!h[x]) continue;
    for (Element t = 0; t < g.order(); ++t)
      if (!h[g.mul(g.mul(inverse(g, t), x), t)]) return false;
  }
  return true;
}

// Every subgroup: start from cyclic subgroups and close under pairwise joins.
inline std::vector<Members> all_subgroups(const ConcreteGroup& g) {
  std::set<Members> found;
  for (Element x = 0; x < g.order(); ++x) found.insert(closure(g, {x}));
  std::vector<Members> frontier(found.begin(), found.end());
  const std::vector<Members> cyclic = frontier;
  while (!frontier.empty()) {
    std::vector<Members> next;
    for (const Members& a : frontier)
      for (const Members& c : cyclic) {
        std::vector<Element> seed;
        for (Element x = 0; x < g.order(); ++x)
          if (a[x] || c[x]) seed.push_back(x);
        Members j = closure(g, seed);
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline std::vector<Members> normal_subgroups(const ConcreteGroup& g) {
  std::vector<Members> out;
  for (const Members& h : oracle_ref::all_subgroups(g))
    if (is_normal(g, h)) out.push_back(h);
  return out;
}

// Largest nilpotent normal subgroup.
inline Members fitting(const ConcreteGroup& g) {
  Members best(g.order(), false);
  best[0] = true;
  for (const Members& h : oracle_ref::normal_subgroups(g))
    if (oracle_ref::nilpotent(g, h) && count(h) > count(best)) best = h;
  return best;
}

// Frobenius by definition: a subgroup H, 1 < H < G, with H meet H^t = 1 for t outside H.
inline bool frobenius(const ConcreteGroup& g) {
  for (const Members& h : oracle_ref::all_subgroups(g)) {
    const std::size_t n = count(h);
    if (n == 1 || n == g.order()) continue;
    bool malnormal = true;
    for (Element t = 0; t < g.order() && malnormal; ++t) {
      if (h[t]) continue;
      for (Element x = 1; x < g.order() && malnormal; ++x)
        if (h[x] && h[g.mul(g.mul(inverse(g, t), x), t)]) malnormal = false;
    }
    if (malnormal) return true;
  }
  return false;
}

struct GraphData {
  std::vector<std::size_t> component_sizes;  // sorted
  std::vector<std::uint32_t> diameters;      // sorted
  bool connected = false;
};

// Floyd-Warshall on an adjacency matrix restricted to `vertices`.
inline GraphData analyze_graph(const std::vector<std::vector<bool>>& adj, const Members& vertices) {
  const std::size_t n = adj.size();
  constexpr std::uint32_t inf = 1U << 30;
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    if (!vertices[i]) continue;
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && vertices[j] && adj[i][j]) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  GraphData out;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!vertices[i] || seen[i]) continue;
    std::size_t size = 0;
    std::uint32_t diam = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (d[i][j] < inf) {
        seen[j] = true;
        ++size;
        for (std::size_t k = 0; k < n; ++k)
          if (d[i][k] < inf) diam = std::max(diam, d[j][k]);
      }
    out.component_sizes.push_back(size);
    out.diameters.push_back(diam);
  }
  std::sort(out.component_sizes.begin(), out.component_sizes.end());
  std::sort(out.diameters.begin(), out.diameters.end());
  out.connected = out.component_sizes.size() == 1;
  return out;
}

}  // namespace oracle_ref
