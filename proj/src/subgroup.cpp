#include "nilgraph/subgroup.hpp"

#include <algorithm>
#include <string>

#include "nilgraph/error.hpp"

namespace nilgraph {

bool is_closed(const ConcreteGroup& g, const ElementSet& s) {
  if (s.width() != g.order() || !s.contains(kIdentity)) return false;
  const std::vector<std::uint32_t> m = s.members();
  for (Element a : m)
    for (Element b : m)
      if (!s.contains(g.mul(a, b))) return false;
  return true;
}

SubgroupSet::SubgroupSet(const ConcreteGroup& parent, ElementSet members)
    : parent_(&parent), members_(std::move(members)), size_(members_.size()) {
  if (!is_closed(parent, members_)) throw ArgumentError("element set is not a subgroup");
}

SubgroupSet SubgroupSet::trivial(const ConcreteGroup& parent) {
  ElementSet s(parent.order());
  s.insert(kIdentity);
  return SubgroupSet(parent, std::move(s), 1);
}

SubgroupSet SubgroupSet::whole(const ConcreteGroup& parent) {
  return SubgroupSet(parent, parent.all(), parent.order());
}

SubgroupSet SubgroupSet::trusted(const ConcreteGroup& parent, ElementSet members) {
  const std::size_t size = members.size();
  return SubgroupSet(parent, std::move(members), size);
}

bool subgroup_less(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_compare(a.members(), b.members()) < 0;
}

namespace {

ElementSet close_from(const ConcreteGroup& g, ElementSet start, const std::vector<Element>& gens) {
  // Right-multiply every member by every generator until stable. Starting from
  // a set containing the identity, this reaches exactly <gens> in a finite group.
  std::vector<Element> queue = start.members();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element u = queue[head];
    for (Element s : gens) {
      const Element v = g.mul(u, s);
      if (!start.contains(v)) {
        start.insert(v);
        queue.push_back(v);
      }
    }
  }
  return start;
}

}  // namespace

SubgroupSet subgroup_closure(const ConcreteGroup& g, std::span<const Element> seed) {
  std::vector<Element> gens;
  for (Element x : seed) {
    if (!g.contains(x)) throw ArgumentError("closure seed element out of range");
    if (x != kIdentity) gens.push_back(x);
  }
  ElementSet start(g.order());
  start.insert(kIdentity);
  return SubgroupSet::trusted(g, close_from(g, std::move(start), gens));
}

SubgroupSet subgroup_closure(const ConcreteGroup& g, const ElementSet& seed) {
  const std::vector<std::uint32_t> m = seed.members();
  return subgroup_closure(g, std::span<const Element>(m));
}

SubgroupSet subgroup_closure(const ConcreteGroup& g, std::initializer_list<Element> seed) {
  return subgroup_closure(g, std::span<const Element>(seed.begin(), seed.size()));
}

SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b) {
  return SubgroupSet::trusted(a.parent(), a.members() & b.members());
}

SubgroupSet product_subgroup(const SubgroupSet& a, const SubgroupSet& b) {
  const ConcreteGroup& g = a.parent();
  ElementSet s(g.order());
  const auto am = a.elements();
  const auto bm = b.elements();
  for (Element x : am)
    for (Element y : bm) s.insert(g.mul(x, y));
  return SubgroupSet(g, std::move(s));
}

SubgroupSet conjugate_subgroup(const SubgroupSet& h, Element g) {
  const ConcreteGroup& G = h.parent();
  ElementSet s(G.order());
  const Element gi = G.inv(g);
  h.members().for_each([&](std::size_t x) { s.insert(G.mul(G.mul(gi, static_cast<Element>(x)), g)); });
  return SubgroupSet::trusted(G, std::move(s));
}

Quotient quotient(const ConcreteGroup& g, const SubgroupSet& n) {
  if (&n.parent() != &g) throw ArgumentError("quotient: subgroup belongs to a different group");
  const std::size_t order = g.order();
  // Normality: N^s = N for every generator s.
  for (Element s : g.generators())
    if (!(conjugate_subgroup(n, s) == n)) throw ArgumentError("quotient: subgroup is not normal");

  constexpr Element kUnset = ~Element{0};
  std::vector<Element> projection(order, kUnset);
  std::vector<Element> representative;
  const auto nm = n.elements();
  for (Element x = 0; x < order; ++x) {
    if (projection[x] != kUnset) continue;
    const auto c = static_cast<Element>(representative.size());
    representative.push_back(x);
    for (Element k : nm) projection[g.mul(x, k)] = c;
  }
  const std::size_t m = representative.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = projection[g.mul(representative[i], representative[j])];
  std::vector<Element> gens;
  for (Element s : g.generators()) {
    const Element c = projection[s];
    if (c != kIdentity && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  ConcreteGroup qg = ConcreteGroup::derived(m, std::move(table), std::move(gens),
                                            g.label() + "/N" + std::to_string(n.size()));
  return Quotient{std::move(qg), std::move(projection), std::move(representative)};
}

SubgroupSet preimage(const ConcreteGroup& g, const Quotient& q, const SubgroupSet& sub) {
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (sub.contains(q.projection[x])) s.insert(x);
  return SubgroupSet::trusted(g, std::move(s));
}

SubgroupSet image(const Quotient& q, const SubgroupSet& sub) {
  ElementSet s(q.group.order());
  sub.members().for_each([&](std::size_t x) { s.insert(q.projection[x]); });
  return SubgroupSet::trusted(q.group, std::move(s));
}

InducedGroup induced_group(const SubgroupSet& h, std::string label) {
  const ConcreteGroup& g = h.parent();
  std::vector<Element> embedding = h.elements();  // identity is index 0, already first
  const std::size_t m = embedding.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) local[embedding[i]] = static_cast<Element>(i);
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = local[g.mul(embedding[i], embedding[j])];
  // Greedy generators in local indices.
  ConcreteGroup tmp = ConcreteGroup::derived(m, table, [&] {
    std::vector<Element> all(m > 1 ? m - 1 : 0);
    for (std::size_t i = 1; i < m; ++i) all[i - 1] = static_cast<Element>(i);
    return all;
  }(), label);
  std::vector<Element> gens = greedy_generators(tmp, tmp.all());
  return InducedGroup{ConcreteGroup::derived(m, std::move(table), std::move(gens), std::move(label)),
                      std::move(embedding)};
}

}  // namespace nilgraph
