#include "nilgraph/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "nilgraph/error.hpp"

namespace nilgraph {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint32_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime_power(std::uint64_t n) { return n == 1 || prime_divisors(n).size() == 1; }

std::size_t SeriesResult::strict_steps() const {
  std::size_t k = 0;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (!(terms[i] == terms[i - 1])) ++k;
  return k;
}

SubgroupSet centralizer(const ConcreteGroup& g, Element x) {
  if (!g.contains(x)) throw ArgumentError("centralizer: element out of range");
  ElementSet s(g.order());
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) s.insert(y);
  return SubgroupSet::trusted(g, std::move(s));
}

SubgroupSet centralizer(const ConcreteGroup& g, const SubgroupSet& h) {
  const std::vector<Element> gens = greedy_generators(g, h.members());
  ElementSet s(g.order());
  for (Element y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (Element x : gens)
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) s.insert(y);
  }
  return SubgroupSet::trusted(g, std::move(s));
}

SubgroupSet center(const ConcreteGroup& g) {
  ElementSet s(g.order());
  for (Element y = 0; y < g.order(); ++y) {
    bool central = true;
    for (Element x : g.generators())
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) s.insert(y);
  }
  return SubgroupSet::trusted(g, std::move(s));
}

SeriesResult upper_central_series(const ConcreteGroup& g) {
  SeriesResult r{SeriesKind::upper_central, {SubgroupSet::trivial(g)}, false};
  while (true) {
    const Quotient q = quotient(g, r.terms.back());
    SubgroupSet next = preimage(g, q, center(q.group));
    const bool same = next == r.terms.back();
    r.terms.push_back(std::move(next));
    if (same) break;
  }
  r.stabilized = true;
  return r;
}

SubgroupSet hypercenter(const ConcreteGroup& g) { return upper_central_series(g).last(); }

SubgroupSet commutator_subgroup(const SubgroupSet& a, const SubgroupSet& b) {
  const ConcreteGroup& g = a.parent();
  ElementSet seed(g.order());
  const auto am = a.elements();
  const auto bm = b.elements();
  for (Element x : am) {
    const Element xi = g.inv(x);
    for (Element y : bm) seed.insert(g.mul(g.mul(xi, g.inv(y)), g.mul(x, y)));
  }
  return subgroup_closure(g, seed);
}

SeriesResult lower_central_series(const SubgroupSet& h) {
  SeriesResult r{SeriesKind::lower_central, {h}, false};
  while (true) {
    SubgroupSet next = commutator_subgroup(h, r.terms.back());
    const bool same = next == r.terms.back();
    r.terms.push_back(std::move(next));
    if (same) break;
  }
  r.stabilized = true;
  return r;
}

bool is_nilpotent(const SubgroupSet& h) { return lower_central_series(h).last().is_trivial(); }

bool is_nilpotent(const ConcreteGroup& g) { return is_nilpotent(SubgroupSet::whole(g)); }

std::optional<std::size_t> nilpotency_class(const SubgroupSet& h) {
  const SeriesResult s = lower_central_series(h);
  if (!s.last().is_trivial()) return std::nullopt;
  return s.strict_steps();
}

bool is_nilpotent_by_sylow_count(const SubgroupSet& h) {
  const ConcreteGroup& g = h.parent();
  const std::size_t order = h.size();
  if (is_prime_power(order)) return true;
  for (std::uint32_t p : prime_divisors(order)) {
    std::size_t count = 0;
    h.members().for_each([&](std::size_t x) {
      if (p_part(g.ord(static_cast<Element>(x)), p) == g.ord(static_cast<Element>(x))) ++count;
    });
    if (count != p_part(order, p)) return false;
  }
  return true;
}

SeriesResult derived_series(const SubgroupSet& h) {
  SeriesResult r{SeriesKind::derived, {h}, false};
  while (true) {
    SubgroupSet next = commutator_subgroup(r.terms.back(), r.terms.back());
    const bool same = next == r.terms.back();
    r.terms.push_back(std::move(next));
    if (same) break;
  }
  r.stabilized = true;
  return r;
}

bool is_solvable(const SubgroupSet& h) { return derived_series(h).last().is_trivial(); }

bool is_solvable(const ConcreteGroup& g) { return is_solvable(SubgroupSet::whole(g)); }

bool is_normal(const ConcreteGroup& g, const SubgroupSet& h) {
  for (Element s : g.generators())
    if (!(conjugate_subgroup(h, s) == h)) return false;
  return true;
}

SubgroupSet normalizer(const ConcreteGroup& g, const SubgroupSet& h) {
  const std::vector<Element> gens = greedy_generators(g, h.members());
  ElementSet s(g.order());
  for (Element y = 0; y < g.order(); ++y) {
    const Element yi = g.inv(y);
    bool ok = true;
    for (Element x : gens)
      if (!h.contains(g.mul(g.mul(yi, x), y))) {
        ok = false;
        break;
      }
    if (ok) s.insert(y);
  }
  return SubgroupSet::trusted(g, std::move(s));
}

SubgroupSet normal_closure(const ConcreteGroup& g, std::span<const Element> seed) {
  SubgroupSet cur = subgroup_closure(g, seed);
  while (true) {
    ElementSet grown = cur.members();
    for (Element s : g.generators()) grown |= conjugate_subgroup(cur, s).members();
    if (grown == cur.members()) return cur;
    cur = subgroup_closure(g, grown);
  }
}

SubgroupSet normal_closure(const ConcreteGroup& g, const ElementSet& seed) {
  const auto m = seed.members();
  return normal_closure(g, std::span<const Element>(m));
}

std::vector<std::uint32_t> pi(const ConcreteGroup& g) { return prime_divisors(g.order()); }

SubgroupSet sylow_subgroup(const ConcreteGroup& g, std::uint32_t p, std::optional<Element> start) {
  if (!is_prime(p)) throw ArgumentError("sylow_subgroup: " + std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(g.order(), p);
  auto is_p_element = [&](Element x) { return p_part(g.ord(x), p) == g.ord(x); };

  SubgroupSet current = SubgroupSet::trivial(g);
  if (start) {
    if (!g.contains(*start) || !is_p_element(*start))
      throw ArgumentError("sylow_subgroup: start is not a p-element");
    current = subgroup_closure(g, {*start});
  }
  while (current.size() < target) {
    const SubgroupSet norm = normalizer(g, current);
    std::optional<Element> pick;
    norm.members().for_each([&](std::size_t x) {
      if (!pick && !current.contains(static_cast<Element>(x)) && is_p_element(static_cast<Element>(x)))
        pick = static_cast<Element>(x);
    });
    // A proper p-subgroup of a Sylow subgroup is properly contained in its
    // normalizer there, so a p-element of N(P) \ P always exists.
    if (!pick) throw Error("sylow_subgroup: normalizer growth stalled");
    std::vector<Element> seed = greedy_generators(g, current.members());
    seed.push_back(*pick);
    current = subgroup_closure(g, std::span<const Element>(seed));
  }
  return current;
}

SubgroupSet p_core(const ConcreteGroup& g, std::uint32_t p) {
  const SubgroupSet sylow = sylow_subgroup(g, p);
  ElementSet core = sylow.members();
  for (Element y = 0; y < g.order(); ++y) core &= conjugate_subgroup(sylow, y).members();
  return SubgroupSet::trusted(g, std::move(core));
}

SubgroupSet fitting(const ConcreteGroup& g) {
  ElementSet seed(g.order());
  seed.insert(kIdentity);
  for (std::uint32_t p : pi(g)) seed |= p_core(g, p).members();
  return subgroup_closure(g, seed);
}

ConjugacyClasses conjugacy_classes(const ConcreteGroup& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  ConjugacyClasses cc;
  cc.class_of.assign(n, kUnset);
  cc.conjugator.assign(n, kIdentity);
  for (Element x = 0; x < n; ++x) {
    if (cc.class_of[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(cc.classes.size());
    std::vector<Element> orbit{x};
    cc.class_of[x] = id;
    cc.conjugator[x] = kIdentity;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Element y = orbit[head];
      for (Element s : g.generators()) {
        const Element z = g.mul(g.mul(g.inv(s), y), s);
        if (cc.class_of[z] == kUnset) {
          cc.class_of[z] = id;
          cc.conjugator[z] = g.mul(cc.conjugator[y], s);
          orbit.push_back(z);
        }
      }
    }
    cc.classes.push_back(std::move(orbit));
  }
  return cc;
}

std::vector<SubgroupSet> normal_subgroups(const ConcreteGroup& g) {
  return normal_subgroups(g, conjugacy_classes(g));
}

std::vector<SubgroupSet> normal_subgroups(const ConcreteGroup& g, const ConjugacyClasses& classes) {
  // Atoms: the normal closure of each class, which is the closure of the class
  // itself since a class is conjugation-invariant.
  std::vector<SubgroupSet> atoms;
  std::unordered_set<ElementSet, ElementSetHash> atom_seen;
  for (const auto& cls : classes.classes) {
    SubgroupSet a = subgroup_closure(g, std::span<const Element>(cls));
    if (atom_seen.insert(a.members()).second) atoms.push_back(std::move(a));
  }

  std::vector<SubgroupSet> found{SubgroupSet::trivial(g)};
  std::unordered_set<ElementSet, ElementSetHash> seen{found.front().members()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const SubgroupSet& a : atoms) {
      if (a.is_subgroup_of(found[head])) continue;
      // Both factors normal, so the product set is the join.
      ElementSet join(g.order());
      const auto fm = found[head].elements();
      const auto am = a.elements();
      for (Element x : fm)
        for (Element y : am) join.insert(g.mul(x, y));
      if (seen.insert(join).second) found.push_back(SubgroupSet::trusted(g, std::move(join)));
    }
  }
  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

std::map<std::uint32_t, Element> primary_decomposition(const ConcreteGroup& g, Element x) {
  if (!g.contains(x)) throw ArgumentError("primary_decomposition: element out of range");
  const std::int64_t o = g.ord(x);
  std::map<std::uint32_t, Element> out;
  for (std::uint32_t p : prime_divisors(static_cast<std::uint64_t>(o))) {
    const auto q = static_cast<std::int64_t>(p_part(static_cast<std::uint64_t>(o), p));
    const std::int64_t r = o / q;
    // k = r * (r^-1 mod q): k = 1 mod q and k = 0 mod r.
    std::int64_t rinv = 1;
    while ((r * rinv) % q != 1 % q) ++rinv;
    out.emplace(p, g.power(x, r * rinv));
  }
  return out;
}

bool is_cyclic(const SubgroupSet& h) {
  const ConcreteGroup& g = h.parent();
  bool found = false;
  h.members().for_each([&](std::size_t x) {
    if (g.ord(static_cast<Element>(x)) == h.size()) found = true;
  });
  return found;
}

bool is_abelian(const SubgroupSet& h) {
  const ConcreteGroup& g = h.parent();
  const std::vector<Element> gens = greedy_generators(g, h.members());
  for (Element a : gens)
    for (Element b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

}  // namespace nilgraph
