#include "nilgraph/classify.hpp"

#include <numeric>
#include <unordered_set>

namespace nilgraph {

bool is_frobenius_kernel(const SubgroupSet& l, const SubgroupSet& k) {
  const ConcreteGroup& g = l.parent();
  if (k.is_trivial() || k.size() >= l.size() || !k.is_subgroup_of(l)) return false;
  const auto lm = l.elements();
  for (Element y : lm) {
    const Element yi = g.inv(y);
    bool stable = true;
    k.members().for_each([&](std::size_t x) {
      if (stable && !k.contains(g.mul(g.mul(yi, static_cast<Element>(x)), y))) stable = false;
    });
    if (!stable) return false;
  }
  bool ok = true;
  k.members().for_each([&](std::size_t x) {
    if (!ok || x == kIdentity) return;
    for (Element y : lm)
      if (!k.contains(y) && g.mul(static_cast<Element>(x), y) == g.mul(y, static_cast<Element>(x))) {
        ok = false;
        return;
      }
  });
  return ok;
}

std::optional<SubgroupSet> find_complement(const ConcreteGroup& g, const SubgroupSet& k) {
  const std::size_t target = g.order() / k.size();
  std::vector<Element> pool;
  for (Element x = 1; x < g.order(); ++x)
    if (std::gcd<std::size_t, std::size_t>(g.ord(x), k.size()) == 1) pool.push_back(x);

  auto accept = [&](const SubgroupSet& h) {
    return h.size() == target && intersect(h, k).is_trivial();
  };
  if (target == 1) return SubgroupSet::trivial(g);

  std::unordered_set<ElementSet, ElementSetHash> tried;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    SubgroupSet h1 = subgroup_closure(g, {pool[i]});
    if (accept(h1)) return h1;
    if (h1.size() > target || target % h1.size() != 0) continue;
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (h1.contains(pool[j])) continue;
      SubgroupSet h2 = subgroup_closure(g, {pool[i], pool[j]});
      if (accept(h2)) return h2;
      if (h2.size() > target || target % h2.size() != 0) continue;
      if (!tried.insert(h2.members()).second) continue;
      for (std::size_t l = j + 1; l < pool.size(); ++l) {
        if (h2.contains(pool[l])) continue;
        SubgroupSet h3 = subgroup_closure(g, {pool[i], pool[j], pool[l]});
        if (accept(h3)) return h3;
      }
    }
  }
  return std::nullopt;
}

std::optional<FrobeniusWitness> is_frobenius(const ConcreteGroup& g) {
  return is_frobenius(g, normal_subgroups(g));
}

std::optional<FrobeniusWitness> is_frobenius(const ConcreteGroup& g,
                                             const std::vector<SubgroupSet>& normal) {
  const SubgroupSet whole = SubgroupSet::whole(g);
  for (const SubgroupSet& k : normal) {
    if (!is_frobenius_kernel(whole, k)) continue;
    if (auto h = find_complement(g, k)) return FrobeniusWitness{k, std::move(*h)};
  }
  return std::nullopt;
}

bool is_2frobenius_pair(const ConcreteGroup& g, const SubgroupSet& k, const SubgroupSet& l) {
  if (!k.is_subgroup_of(l) || !is_normal(g, k) || !is_normal(g, l)) return false;
  if (!is_frobenius_kernel(l, k)) return false;
  const Quotient q = quotient(g, k);
  return is_frobenius_kernel(SubgroupSet::whole(q.group), image(q, l));
}

std::optional<TwoFrobeniusWitness> is_2frobenius(const ConcreteGroup& g) {
  SubgroupSet k = fitting(g);
  const Quotient q = quotient(g, k);
  SubgroupSet l = preimage(g, q, fitting(q.group));
  if (is_2frobenius_pair(g, k, l)) return TwoFrobeniusWitness{std::move(k), std::move(l)};
  return std::nullopt;
}

std::optional<TwoFrobeniusWitness> is_2frobenius_by_scan(const ConcreteGroup& g,
                                                        const std::vector<SubgroupSet>& normal) {
  for (const SubgroupSet& k : normal) {
    if (k.is_trivial() || k.is_whole()) continue;
    for (const SubgroupSet& l : normal) {
      if (l.size() <= k.size() || l.is_whole() || !k.is_subgroup_of(l)) continue;
      if (is_2frobenius_pair(g, k, l)) return TwoFrobeniusWitness{k, l};
    }
  }
  return std::nullopt;
}

bool is_A_group(const ConcreteGroup& g) {
  for (std::uint32_t p : pi(g))
    if (!is_abelian(sylow_subgroup(g, p))) return false;
  return true;
}

bool is_AC_group(const ConcreteGroup& g) {
  const ConjugacyClasses cc = conjugacy_classes(g);
  for (const auto& cls : cc.classes) {
    if (cls[0] == kIdentity) continue;
    if (!is_abelian(centralizer(g, cls[0]))) return false;
  }
  return true;
}

bool nil_closed(const ConcreteGroup& g, Element x, const NilTable& nil) { return is_closed(g, nil[x]); }

bool nil_closed(const ConcreteGroup& g, Element x) { return is_closed(g, nil_neighborhood(g, x)); }

bool is_n_group(const ConcreteGroup& g, const ConjugacyClasses& classes, const NilTable& nil) {
  for (const auto& cls : classes.classes) {
    const Element rep = cls[0];
    if (!is_prime_power(g.ord(rep))) continue;
    if (!nil_closed(g, rep, nil)) return false;
  }
  return true;
}

bool is_n_group(const ConcreteGroup& g) {
  const ConjugacyClasses cc = conjugacy_classes(g);
  return is_n_group(g, cc, NilTable(g, cc));
}

bool is_n_group_all_elements(const ConcreteGroup& g, const NilTable& nil) {
  for (Element x = 0; x < g.order(); ++x)
    if (!nil_closed(g, x, nil)) return false;
  return true;
}

bool has_nilpotent_neighborhood_property(const ConcreteGroup& g, const NilTable& nil) {
  for (Element x = 1; x < g.order(); ++x) {
    if (!is_closed(g, nil[x])) return false;
    if (!is_nilpotent(SubgroupSet::trusted(g, nil[x]))) return false;
  }
  return true;
}

bool has_nilpotent_neighborhood_property(const ConcreteGroup& g) {
  return has_nilpotent_neighborhood_property(g, NilTable(g));
}

namespace {

/// Depth-first growth of abelian subgroups meeting `n` trivially until one of
/// order `target` appears.
std::optional<SubgroupSet> grow_abelian_complement(
    const ConcreteGroup& g, const SubgroupSet& n, const SubgroupSet& a, std::size_t target,
    std::unordered_set<ElementSet, ElementSetHash>& visited) {
  if (a.size() == target) return a;
  const auto gens = greedy_generators(g, a.members());
  for (Element x = 1; x < g.order(); ++x) {
    if (a.contains(x) || n.contains(x)) continue;
    bool commutes = true;
    for (Element s : gens)
      if (g.mul(s, x) != g.mul(x, s)) {
        commutes = false;
        break;
      }
    if (!commutes) continue;
    std::vector<Element> seed = gens;
    seed.push_back(x);
    SubgroupSet b = subgroup_closure(g, std::span<const Element>(seed));
    if (b.size() > target || target % b.size() != 0) continue;
    if (!intersect(b, n).is_trivial()) continue;
    if (!visited.insert(b.members()).second) continue;
    if (auto found = grow_abelian_complement(g, n, b, target, visited)) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<SubgroupSet, SubgroupSet>> find_cyclic_by_abelian(
    const ConcreteGroup& g, const std::vector<SubgroupSet>& normal) {
  for (const SubgroupSet& n : normal) {
    if (!is_cyclic(n)) continue;
    std::unordered_set<ElementSet, ElementSetHash> visited;
    if (auto a = grow_abelian_complement(g, n, SubgroupSet::trivial(g), g.order() / n.size(), visited))
      return std::make_pair(n, std::move(*a));
  }
  return std::nullopt;
}

namespace oracle {

SubgroupSet fitting_by_normal_closures(const ConcreteGroup& g) {
  ElementSet seed(g.order());
  seed.insert(kIdentity);
  for (Element x = 1; x < g.order(); ++x) {
    if (!is_prime_power(g.ord(x))) continue;
    const SubgroupSet nc = normal_closure(g, std::span<const Element>(&x, 1));
    if (is_prime_power(nc.size())) seed.insert(x);
  }
  return subgroup_closure(g, seed);
}

std::optional<SubgroupSet> malnormal_subgroup(const ConcreteGroup& g) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Element x = 1; x < g.order(); ++x)
    for (Element y = x; y < g.order(); ++y) {
      SubgroupSet h = subgroup_closure(g, {x, y});
      if (h.is_whole() || !seen.insert(h.members()).second) continue;
      bool malnormal = true;
      for (Element t = 0; t < g.order() && malnormal; ++t) {
        if (h.contains(t)) continue;
        if (!intersect(h, conjugate_subgroup(h, t)).is_trivial()) malnormal = false;
      }
      if (malnormal) return h;
    }
  return std::nullopt;
}

std::vector<SubgroupSet> upper_central_series_by_commutators(const ConcreteGroup& g) {
  std::vector<SubgroupSet> terms{SubgroupSet::trivial(g)};
  while (true) {
    const SubgroupSet& z = terms.back();
    ElementSet next(g.order());
    for (Element y = 0; y < g.order(); ++y) {
      bool ok = true;
      for (Element x : g.generators())
        if (!z.contains(g.commutator(y, x))) {
          ok = false;
          break;
        }
      if (ok) next.insert(y);
    }
    if (next == z.members()) return terms;
    terms.push_back(SubgroupSet(g, std::move(next)));
  }
}

}  // namespace oracle

}  // namespace nilgraph
