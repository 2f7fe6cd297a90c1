#include "nilgraph/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "nilgraph/error.hpp"

namespace nilgraph {

std::size_t default_order_cap() {
  if (const char* env = std::getenv("NILGRAPH_ORDER_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2000;
}

BuildOptions default_build_options() {
  BuildOptions o;
  o.order_cap = default_order_cap();
  return o;
}

namespace {

ElementSet generated(const ConcreteGroup& g, std::span<const Element> gens, std::size_t n,
                     const std::vector<Element>& table) {
  ElementSet seen(n);
  std::vector<Element> queue{kIdentity};
  seen.insert(kIdentity);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element s : gens) {
      Element v = table[static_cast<std::size_t>(queue[head]) * n + s];
      if (!seen.contains(v)) {
        seen.insert(v);
        queue.push_back(v);
      }
    }
  }
  (void)g;
  return seen;
}

}  // namespace

ConcreteGroup::ConcreteGroup(std::size_t order, std::vector<Element> table,
                             std::vector<Element> generators, std::string label,
                             const BuildOptions& options)
    : order_(order),
      table_(std::move(table)),
      generators_(std::move(generators)),
      label_(std::move(label)) {
  finish(true, options);
}

ConcreteGroup ConcreteGroup::derived(std::size_t order, std::vector<Element> table,
                                     std::vector<Element> generators, std::string label) {
  ConcreteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.generators_ = std::move(generators);
  g.label_ = std::move(label);
  BuildOptions unlimited;
  unlimited.order_cap = order;
  g.finish(false, unlimited);
  return g;
}

void ConcreteGroup::finish(bool check_associativity, const BuildOptions& options) {
  const std::size_t n = order_;
  if (n == 0) throw SpecError("group order must be positive");
  if (n > options.order_cap)
    throw OrderCapError("group order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(options.order_cap));
  if (table_.size() != n * n)
    throw SpecError("Cayley table has " + std::to_string(table_.size()) + " entries, expected " +
                    std::to_string(n * n));
  for (Element v : table_)
    if (v >= n) throw SpecError("Cayley table entry out of range");

  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i] != i || table_[i * n] != i)
      throw SpecError("index 0 is not a two-sided identity");
  }
  // Latin square: every row and column is a permutation.
  for (std::size_t i = 0; i < n; ++i) {
    ElementSet row_seen(n), col_seen(n);
    for (std::size_t j = 0; j < n; ++j) {
      row_seen.insert(table_[i * n + j]);
      col_seen.insert(table_[j * n + i]);
    }
    if (row_seen.size() != n || col_seen.size() != n)
      throw SpecError("Cayley table is not a Latin square");
  }

  inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i * n + j] == kIdentity) {
        inverse_[i] = static_cast<Element>(j);
        break;
      }
    }
    if (table_[inverse_[i] * n + i] != kIdentity) throw SpecError("inverse is not two-sided");
  }

  if (check_associativity) {
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
      return table_[table_[a * n + b] * n + c] == table_[a * n + table_[b * n + c]];
    };
    if (n < options.full_associativity_limit) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const std::size_t ab = table_[a * n + b];
          for (std::size_t c = 0; c < n; ++c)
            if (table_[ab * n + c] != table_[a * n + table_[b * n + c]])
              throw SpecError("Cayley table is not associative");
        }
    } else {
      std::mt19937_64 rng(0x5eed5eedULL ^ n);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      const std::size_t trials = 10 * n * n;
      for (std::size_t t = 0; t < trials; ++t)
        if (!assoc(pick(rng), pick(rng), pick(rng)))
          throw SpecError("Cayley table is not associative (spot check)");
    }
  }

  element_order_.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t k = 1;
    std::size_t p = i;
    while (p != kIdentity) {
      p = table_[p * n + i];
      ++k;
    }
    element_order_[i] = k;
    if (n % k != 0) throw SpecError("element order does not divide group order");
  }

  for (Element s : generators_)
    if (s >= n) throw SpecError("generator index out of range");
  if (generated(*this, generators_, n, table_).size() != n)
    throw SpecError("listed generators do not generate the group");
}

void ConcreteGroup::check_index(Element x) const {
  if (x >= order_)
    throw ArgumentError("element index " + std::to_string(x) + " out of range for group of order " +
                        std::to_string(order_));
}

Element ConcreteGroup::multiply(Element x, Element y) const {
  check_index(x);
  check_index(y);
  return mul(x, y);
}

Element ConcreteGroup::inverse(Element x) const {
  check_index(x);
  return inv(x);
}

Element ConcreteGroup::commutator(Element x, Element y) const {
  check_index(x);
  check_index(y);
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

Element ConcreteGroup::conjugate(Element x, Element g) const {
  check_index(x);
  check_index(g);
  return mul(mul(inv(g), x), g);
}

std::uint32_t ConcreteGroup::element_order(Element x) const {
  check_index(x);
  return ord(x);
}

Element ConcreteGroup::power(Element x, std::int64_t k) const {
  check_index(x);
  const std::int64_t o = ord(x);
  k %= o;
  if (k < 0) k += o;
  Element r = kIdentity;
  Element base = x;
  auto e = static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1U) r = mul(r, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return r;
}

bool ConcreteGroup::is_abelian() const {
  for (Element a : generators_)
    for (Element b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Element> greedy_generators(const ConcreteGroup& g, const ElementSet& members) {
  std::vector<Element> gens;
  ElementSet span(g.order());
  span.insert(kIdentity);
  members.for_each([&](std::size_t i) {
    if (span.contains(i)) return;
    gens.push_back(static_cast<Element>(i));
    span = generated(g, gens, g.order(), g.table());
  });
  return gens;
}

bool is_automorphism(const ConcreteGroup& g, std::span<const std::uint32_t> map) {
  const std::size_t n = g.order();
  if (map.size() != n) return false;
  ElementSet image(n);
  for (std::uint32_t v : map) {
    if (v >= n) return false;
    image.insert(v);
  }
  if (image.size() != n) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (map[g.mul(a, b)] != g.mul(map[a], map[b])) return false;
  return true;
}

namespace {

/// Extends generator images to a homomorphism along the Cayley graph.
/// Returns an empty vector on inconsistency or non-bijectivity.
Permutation extend_to_automorphism(const ConcreteGroup& g, std::span<const Element> gens,
                                   std::span<const Element> images) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  Permutation map(n, kUnset);
  map[kIdentity] = kIdentity;
  std::vector<Element> queue{kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element u = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element v = g.mul(u, gens[i]);
      const Element fv = g.mul(map[u], images[i]);
      if (map[v] == kUnset) {
        map[v] = fv;
        queue.push_back(v);
      } else if (map[v] != fv) {
        return {};
      }
    }
  }
  ElementSet image(n);
  for (std::uint32_t v : map) image.insert(v);
  if (image.size() != n) return {};
  return map;
}

std::uint32_t permutation_order(const Permutation& p) {
  Permutation cur = p;
  std::uint32_t k = 1;
  auto is_identity = [](const Permutation& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i] != i) return false;
    return true;
  };
  while (!is_identity(cur)) {
    Permutation next(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] = p[cur[i]];
    cur = std::move(next);
    ++k;
  }
  return k;
}

}  // namespace

std::vector<Permutation> automorphisms_of_order(const ConcreteGroup& g, std::uint32_t order) {
  const std::vector<Element> gens = greedy_generators(g, g.all());
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element x = 0; x < g.order(); ++x)
      if (g.ord(x) == g.ord(gens[i])) candidates[i].push_back(x);

  std::vector<Permutation> out;
  std::vector<Element> images(gens.size());
  // Odometer over candidate images.
  std::vector<std::size_t> pos(gens.size(), 0);
  if (gens.empty()) {
    if (order == 1) out.push_back(Permutation{0});
    return out;
  }
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pos[i]];
    Permutation map = extend_to_automorphism(g, gens, images);
    if (!map.empty() && permutation_order(map) == order) out.push_back(std::move(map));
    std::size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++pos[i] < candidates[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace nilgraph
