#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "nilgraph/error.hpp"
#include "nilgraph/group.hpp"

namespace nilgraph {

namespace {

void check_cap(std::size_t order, const BuildOptions& options) {
  if (order > options.order_cap)
    throw OrderCapError("group order " + std::to_string(order) + " exceeds cap " +
                        std::to_string(options.order_cap));
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  std::int64_t r = 1 % n;
  base = mod(base, n);
  while (exp > 0) {
    if (exp & 1) r = r * base % n;
    base = base * base % n;
    exp >>= 1;
  }
  return r;
}

}  // namespace

ConcreteGroup build_cyclic(std::size_t n, const BuildOptions& options) {
  if (n == 0) throw SpecError("cyclic group order must be positive");
  check_cap(n, options);
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  std::vector<Element> gens;
  if (n > 1) gens.push_back(1);
  return ConcreteGroup(n, std::move(table), std::move(gens), "C" + std::to_string(n), options);
}

ConcreteGroup build_semidirect_cyclic(std::size_t n, std::size_t m, std::int64_t e,
                                      const BuildOptions& options) {
  if (n == 0 || m == 0) throw SpecError("semidirect_cyclic: n and m must be positive");
  const auto sn = static_cast<std::int64_t>(n);
  const std::int64_t ee = mod(e, sn);
  if (std::gcd(ee, sn) != 1 && n > 1)
    throw SpecError("semidirect_cyclic: e must be a unit modulo n");
  if (pow_mod(ee, static_cast<std::int64_t>(m), sn) != 1 % sn)
    throw SpecError("semidirect_cyclic: e^m is not 1 modulo n, so y cannot act with order dividing m");
  check_cap(n * m, options);

  // y^b x y^-b = x^(e^-b) = x^(e^(m-b)) since x^y = x^e.
  std::vector<std::int64_t> twist(m);
  for (std::size_t b = 0; b < m; ++b)
    twist[b] = pow_mod(ee, static_cast<std::int64_t>((m - b) % m), sn);

  const std::size_t order = n * m;
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < m; ++d) {
          // x^a y^b x^c y^d = x^(a + c*e^-b) y^(b+d)
          const auto na = static_cast<std::size_t>(
              mod(static_cast<std::int64_t>(a) + static_cast<std::int64_t>(c) * twist[b], sn));
          const std::size_t nb = (b + d) % m;
          table[(a * m + b) * order + (c * m + d)] = static_cast<Element>(na * m + nb);
        }
  std::vector<Element> gens;
  if (n > 1) gens.push_back(static_cast<Element>(m));  // x
  if (m > 1) gens.push_back(1);                          // y
  const std::string label = "C" + std::to_string(n) + ":C" + std::to_string(m) + "[e=" +
                            std::to_string(ee) + "]";
  return ConcreteGroup(order, std::move(table), std::move(gens), label, options);
}

ConcreteGroup build_dihedral(std::size_t n, const BuildOptions& options) {
  if (n == 0) throw SpecError("dihedral: n must be positive");
  ConcreteGroup g = build_semidirect_cyclic(n, 2, static_cast<std::int64_t>(n) - 1, options);
  return ConcreteGroup::derived(g.order(), g.table(), g.generators(),
                                "D" + std::to_string(2 * n));
}

ConcreteGroup build_quaternion(std::size_t order, const BuildOptions& options) {
  if (order < 4 || order % 4 != 0)
    throw SpecError("quaternion: order must be a positive multiple of 4");
  check_cap(order, options);
  // Dic_k = <a, x | a^(2k) = 1, x^2 = a^k, a^x = a^-1>; a^i x^j has index 2i + j.
  const std::size_t two_k = order / 2;
  const std::size_t k = order / 4;
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < two_k; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < two_k; ++l)
        for (std::size_t t = 0; t < 2; ++t) {
          // a^i x^j a^l x^t: x a^l = a^-l x
          std::size_t exp = j == 0 ? (i + l) % two_k : (i + two_k - l) % two_k;
          std::size_t xs = j + t;
          if (xs == 2) {
            exp = (exp + k) % two_k;
            xs = 0;
          }
          table[(2 * i + j) * order + (2 * l + t)] = static_cast<Element>(2 * exp + xs);
        }
  std::vector<Element> gens{2, 1};
  const std::string label = order == 8 ? "Q8" : "Dic" + std::to_string(order);
  return ConcreteGroup(order, std::move(table), std::move(gens), label, options);
}

ConcreteGroup build_from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                                      const BuildOptions& options) {
  if (degree == 0) throw SpecError("from_permutations: degree must be positive");
  for (const Permutation& p : gens) {
    if (p.size() != degree) throw SpecError("from_permutations: image array has wrong length");
    std::vector<bool> hit(degree, false);
    for (std::uint32_t v : p) {
      if (v >= degree || hit[v]) throw SpecError("from_permutations: image array is not a bijection");
      hit[v] = true;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> index{{id, 0}};
  auto compose = [degree](const Permutation& p, const Permutation& q) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = q[p[i]];
    return r;
  };

  std::vector<Element> gen_index;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Permutation& s : gens) {
      Permutation next = compose(elements[head], s);
      if (index.find(next) == index.end()) {
        if (elements.size() + 1 > options.order_cap)
          throw OrderCapError("permutation closure exceeds order cap " +
                              std::to_string(options.order_cap));
        index.emplace(next, static_cast<Element>(elements.size()));
        elements.push_back(std::move(next));
      }
    }
  }
  for (const Permutation& s : gens) {
    const Element e = index.at(s);
    if (e != kIdentity && std::find(gen_index.begin(), gen_index.end(), e) == gen_index.end())
      gen_index.push_back(e);
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index.at(compose(elements[i], elements[j]));
  return ConcreteGroup(n, std::move(table), std::move(gen_index),
                       "Perm(" + std::to_string(degree) + ")", options);
}

namespace {

Permutation cycle_perm(std::size_t degree, const std::vector<std::uint32_t>& cycle) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

}  // namespace

ConcreteGroup build_symmetric(std::size_t degree, const BuildOptions& options) {
  if (degree == 0) throw SpecError("symmetric: degree must be positive");
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(cycle_perm(degree, {0, 1}));
    std::vector<std::uint32_t> full(degree);
    std::iota(full.begin(), full.end(), 0U);
    if (degree >= 3) gens.push_back(cycle_perm(degree, full));
  }
  ConcreteGroup g = build_from_permutations(degree, gens, options);
  return ConcreteGroup::derived(g.order(), g.table(), g.generators(), "S" + std::to_string(degree));
}

ConcreteGroup build_alternating(std::size_t degree, const BuildOptions& options) {
  if (degree == 0) throw SpecError("alternating: degree must be positive");
  std::vector<Permutation> gens;
  if (degree >= 3) {
    gens.push_back(cycle_perm(degree, {0, 1, 2}));
    if (degree >= 4) {
      std::vector<std::uint32_t> cyc;
      for (std::uint32_t i = degree % 2 == 0 ? 1 : 0; i < degree; ++i) cyc.push_back(i);
      gens.push_back(cycle_perm(degree, cyc));
    }
  }
  ConcreteGroup g = build_from_permutations(degree, gens, options);
  return ConcreteGroup::derived(g.order(), g.table(), g.generators(), "A" + std::to_string(degree));
}

ConcreteGroup build_semidirect_table(const ConcreteGroup& normal, const ConcreteGroup& acting,
                                     const std::vector<Permutation>& action,
                                     const BuildOptions& options) {
  const std::size_t nn = normal.order();
  const std::size_t nh = acting.order();
  if (action.size() != nh)
    throw SpecError("semidirect_table: action must list one permutation per acting element");
  for (std::size_t h = 0; h < nh; ++h)
    if (!is_automorphism(normal, action[h]))
      throw SpecError("semidirect_table: action image of element " + std::to_string(h) +
                      " is not an automorphism");
  for (std::size_t h1 = 0; h1 < nh; ++h1)
    for (std::size_t h2 = 0; h2 < nh; ++h2) {
      const Permutation& composite = action[acting.mul(static_cast<Element>(h1), static_cast<Element>(h2))];
      for (std::size_t a = 0; a < nn; ++a)
        if (composite[a] != action[h1][action[h2][a]])
          throw SpecError("semidirect_table: action is not a homomorphism");
    }
  check_cap(nn * nh, options);

  const std::size_t order = nn * nh;
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t b = 0; b < nh; ++b)
      for (std::size_t c = 0; c < nn; ++c)
        for (std::size_t d = 0; d < nh; ++d) {
          const std::size_t na = normal.mul(static_cast<Element>(a), action[b][c]);
          const std::size_t nb = acting.mul(static_cast<Element>(b), static_cast<Element>(d));
          table[(a * nh + b) * order + (c * nh + d)] = static_cast<Element>(na * nh + nb);
        }
  std::vector<Element> gens;
  for (Element s : normal.generators()) gens.push_back(static_cast<Element>(s * nh));
  for (Element s : acting.generators()) gens.push_back(s);
  return ConcreteGroup(order, std::move(table), std::move(gens),
                       normal.label() + ":" + acting.label(), options);
}

ConcreteGroup direct_product(const ConcreteGroup& a, const ConcreteGroup& b,
                             const BuildOptions& options) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  check_cap(na * nb, options);
  const std::size_t order = na * nb;
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          table[(i * nb + j) * order + (k * nb + l)] = static_cast<Element>(
              a.mul(static_cast<Element>(i), static_cast<Element>(k)) * nb +
              b.mul(static_cast<Element>(j), static_cast<Element>(l)));
  std::vector<Element> gens;
  for (Element s : a.generators()) gens.push_back(static_cast<Element>(s * nb));
  for (Element s : b.generators()) gens.push_back(s);
  return ConcreteGroup(order, std::move(table), std::move(gens), a.label() + "x" + b.label(), options);
}

ConcreteGroup build_from_cayley_table(std::size_t order, std::vector<Element> table, std::string label,
                                      const BuildOptions& options) {
  if (order == 0) throw SpecError("from_cayley_table: order must be positive");
  if (order > options.order_cap)
    throw OrderCapError("group order " + std::to_string(order) + " exceeds cap " +
                        std::to_string(options.order_cap));
  if (table.size() != order * order) throw SpecError("from_cayley_table: table must have order^2 entries");
  for (Element v : table)
    if (v >= order) throw SpecError("from_cayley_table: entry out of range");
  for (std::size_t i = 0; i < order; ++i)
    if (table[i] != i || table[i * order] != i)
      throw SpecError("from_cayley_table: index 0 must be the identity");
  // Greedy generators over the raw table before full validation.
  std::vector<Element> gens;
  std::vector<bool> in_span(order, false);
  in_span[0] = true;
  for (std::size_t x = 1; x < order; ++x) {
    if (in_span[x]) continue;
    gens.push_back(static_cast<Element>(x));
    std::vector<Element> queue{0};
    std::fill(in_span.begin(), in_span.end(), false);
    in_span[0] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Element s : gens) {
        const Element v = table[queue[h] * order + s];
        if (!in_span[v]) {
          in_span[v] = true;
          queue.push_back(v);
        }
      }
  }
  return ConcreteGroup(order, std::move(table), std::move(gens), std::move(label), options);
}

}  // namespace nilgraph
