#include "nilgraph/verify.hpp"

#include <numeric>

#include "nilgraph/error.hpp"

namespace nilgraph {

namespace {

Permutation compose_power(const Permutation& phi, std::size_t k) {
  Permutation out(phi.size());
  std::iota(out.begin(), out.end(), 0U);
  for (std::size_t i = 0; i < k; ++i)
    for (auto& x : out) x = phi[x];
  return out;
}

bool valid_exponent(std::size_t n, std::size_t m, std::size_t e) {
  if (std::gcd(e, n) != 1) return false;
  std::size_t p = 1;
  for (std::size_t i = 0; i < m; ++i) p = p * e % n;
  return p == 1 % n;
}

}  // namespace

std::vector<GroupSpec> order27_groups() {
  const GroupSpec c3 = GroupSpec::cyclic(3);
  const GroupSpec c3c3 = GroupSpec::product(c3, c3);
  // (a, b) -> (a + b, b) on C3 x C3, indexed a*3 + b.
  std::vector<Permutation> action;
  for (std::uint32_t h = 0; h < 3; ++h) {
    Permutation p(9);
    for (std::uint32_t a = 0; a < 3; ++a)
      for (std::uint32_t b = 0; b < 3; ++b) p[a * 3 + b] = ((a + h * b) % 3) * 3 + b;
    action.push_back(std::move(p));
  }
  GroupSpec he3 = GroupSpec::semidirect_table(c3c3, c3, action);
  he3.label = "He3";
  GroupSpec m27 = GroupSpec::semidirect_cyclic(9, 3, 4);
  return {GroupSpec::cyclic(27), GroupSpec::product(GroupSpec::cyclic(9), c3),
          GroupSpec::product(c3c3, c3), he3, m27};
}

GroupSpec sl23_spec() {
  const GroupSpec q8 = GroupSpec::quaternion(8);
  BuildOptions options;
  options.order_cap = 8;
  const ConcreteGroup g = build_group(q8, options);
  const auto autos = automorphisms_of_order(g, 3);
  if (autos.empty()) throw Error("Q8 has no automorphism of order 3");
  const Permutation& phi = autos.front();
  GroupSpec s = GroupSpec::semidirect_table(q8, GroupSpec::cyclic(3),
                                            {compose_power(phi, 0), compose_power(phi, 1), compose_power(phi, 2)});
  s.label = "SL(2,3)";
  return s;
}

Catalog default_catalog(std::size_t cap) {
  Catalog c;
  c.cap = cap;
  auto add = [&](GroupSpec s, std::size_t order) {
    if (order <= cap) c.entries.push_back(std::move(s));
  };
  for (std::size_t n = 1; n <= cap; ++n) add(GroupSpec::cyclic(n), n);
  for (std::size_t n = 2; 2 * n <= cap; ++n) add(GroupSpec::dihedral(n), 2 * n);
  for (std::size_t o = 8; o <= cap; o += 4) add(GroupSpec::quaternion(o), o);
  const std::size_t factorial[] = {1, 1, 2, 6, 24, 120};
  for (std::size_t d = 1; d <= 5; ++d) add(GroupSpec::symmetric(d), factorial[d]);
  for (std::size_t d = 3; d <= 5; ++d) add(GroupSpec::alternating(d), factorial[d] / 2);
  for (std::size_t n = 2; n * 2 <= cap; ++n)
    for (std::size_t m = 2; n * m <= cap; ++m)
      for (std::size_t e = 1; e < n; ++e)
        if (valid_exponent(n, m, e)) add(GroupSpec::semidirect_cyclic(n, m, static_cast<std::int64_t>(e)), n * m);
  add(sl23_spec(), 24);

  // Pairs of the entries above, factors of order at least 2.
  BuildOptions options;
  options.order_cap = cap;
  std::vector<std::pair<GroupSpec, std::size_t>> base;
  for (const GroupSpec& s : c.entries) {
    const std::size_t order = build_group(s, options).order();
    if (order >= 2 && 2 * order <= cap) base.emplace_back(s, order);
  }
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j)
      add(GroupSpec::product(base[i].first, base[j].first), base[i].second * base[j].second);
  if (cap >= 54)
    for (GroupSpec& s : order54_family()) c.entries.push_back(std::move(s));
  return c;
}

Catalog parse_catalog(const std::string& text, std::size_t cap) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("malformed catalog JSON: ") + e.what());
  }
  if (!j.is_array()) throw SpecError("catalog must be a JSON list of group specs");
  Catalog c;
  c.cap = cap;
  for (const auto& e : j) c.entries.push_back(e.get<GroupSpec>());
  return c;
}

}  // namespace nilgraph
