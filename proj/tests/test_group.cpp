#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "nilgraph/error.hpp"
#include "nilgraph/group_spec.hpp"
#include "nilgraph/structure.hpp"
#include "nilgraph/subgroup.hpp"
#include "oracles.hpp"
#include "sample_groups.hpp"

using namespace nilgraph;

namespace {

std::multiset<std::uint32_t> order_multiset(const ConcreteGroup& g) {
  std::multiset<std::uint32_t> s;
  for (Element x = 0; x < g.order(); ++x) s.insert(g.ord(x));
  return s;
}

// Closure of permutations as plain vectors, independent of the group builder.
std::size_t permutation_closure_size(std::size_t degree, const std::vector<Permutation>& gens) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::set<Permutation> seen{id};
  std::vector<Permutation> todo{id};
  while (!todo.empty()) {
    Permutation p = todo.back();
    todo.pop_back();
    for (const Permutation& s : gens) {
      Permutation q(degree);
      for (std::size_t i = 0; i < degree; ++i) q[i] = s[p[i]];
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("cyclic groups") {
  CHECK(build_cyclic(1).order() == 1);
  const ConcreteGroup c15 = build_cyclic(15);
  CHECK(c15.is_abelian());
  CHECK(c15.ord(1) == 15);

  const ConcreteGroup c6 = build_cyclic(6);
  CHECK(order_multiset(c6) == std::multiset<std::uint32_t>{1, 2, 3, 3, 6, 6});
  for (std::size_t n : {1, 7, 12, 30})
    for (Element k = 0; k < n; ++k) CHECK(build_cyclic(n).ord(k) == n / std::gcd<std::size_t>(k, n));
}

TEST_CASE("permutation closure") {
  CHECK(build_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}).order() == 6);
  CHECK(build_from_permutations(4, {}).order() == 1);
  const std::vector<Permutation> gens{{1, 2, 3, 0}, {1, 0, 2, 3}};
  CHECK(build_from_permutations(4, gens).order() == 24);
  CHECK(permutation_closure_size(4, gens) == 24);

  const std::vector<Permutation> d5{{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}};
  CHECK(build_from_permutations(5, d5).order() == permutation_closure_size(5, d5));
  CHECK_THROWS_AS(build_from_permutations(3, {{0, 0, 1}}), SpecError);
  CHECK_THROWS_AS(build_from_permutations(3, {{0, 1}}), SpecError);
}

TEST_CASE("symmetric, alternating and dicyclic builders") {
  CHECK(build_symmetric(4).order() == 24);
  CHECK(build_alternating(4).order() == 12);
  CHECK(build_alternating(5).order() == 60);
  CHECK(build_symmetric(1).order() == 1);

  const ConcreteGroup q8 = build_quaternion(8);
  std::size_t involutions = 0;
  for (Element x = 0; x < 8; ++x) involutions += q8.ord(x) == 2;
  CHECK(involutions == 1);
  CHECK(build_quaternion(12).order() == 12);
  CHECK_THROWS_AS(build_quaternion(10), SpecError);
}

TEST_CASE("semidirect_cyclic") {
  const ConcreteGroup g = build_semidirect_cyclic(15, 4, 8);
  CHECK(g.order() == 60);
  CHECK(oracle_ref::count(oracle_ref::center(g)) == 1);

  for (std::size_t n = 3; n <= 10; ++n) {
    const ConcreteGroup d = build_dihedral(n);
    const ConcreteGroup s = build_semidirect_cyclic(n, 2, static_cast<std::int64_t>(n - 1));
    CHECK(d.order() == 2 * n);
    CHECK(d.table() == s.table());
  }
  CHECK_THROWS_AS(build_semidirect_cyclic(5, 3, 2), SpecError);
  CHECK_THROWS_AS(build_semidirect_cyclic(6, 2, 2), SpecError);
}

TEST_CASE("semidirect_table") {
  const ConcreteGroup c27 = build_cyclic(27);
  const ConcreteGroup c2 = build_cyclic(2);
  Permutation id(27), inv(27);
  for (Element x = 0; x < 27; ++x) {
    id[x] = x;
    inv[x] = (27 - x) % 27;
  }
  const ConcreteGroup g = build_semidirect_table(c27, c2, {id, inv});
  CHECK(g.order() == 54);
  CHECK(fitting(g).size() == 27);

  CHECK(build_semidirect_table(c27, c2, {id, id}).table() == direct_product(c27, c2).table());

  Permutation bad = id;
  std::swap(bad[1], bad[2]);
  CHECK_THROWS_AS(build_semidirect_table(c27, c2, {id, bad}), SpecError);
  // x -> x^-1 as the image of a generator of C3 is not a homomorphism.
  const ConcreteGroup c3 = build_cyclic(3);
  Permutation inv3{0, 2, 1};
  CHECK_THROWS_AS(build_semidirect_table(c3, c3, {{0, 1, 2}, inv3, inv3}), SpecError);
}

TEST_CASE("direct products") {
  const ConcreteGroup v4 = direct_product(build_cyclic(2), build_cyclic(2));
  for (Element x = 0; x < 4; ++x) CHECK(v4.ord(x) <= 2);
  const ConcreteGroup s3 = build_symmetric(3);
  CHECK(direct_product(build_cyclic(1), s3).table() == s3.table());
  const ConcreteGroup s3c2 = direct_product(s3, build_cyclic(2));
  CHECK(s3c2.order() == 12);
  CHECK(oracle_ref::count(oracle_ref::center(s3c2)) == 2);
  CHECK(center(s3c2).size() == 2);
}

TEST_CASE("element operations") {
  const ConcreteGroup s4 = build_symmetric(4);
  for (Element x = 0; x < s4.order(); ++x) {
    CHECK(s4.commutator(x, x) == kIdentity);
    CHECK(s4.multiply(x, s4.inverse(x)) == kIdentity);
    CHECK(s4.power(x, s4.ord(x)) == kIdentity);
    CHECK(s4.power(x, -1) == s4.inverse(x));
    for (Element y = 0; y < s4.order(); ++y)
      if (s4.mul(x, y) == s4.mul(y, x)) CHECK(s4.commutator(x, y) == kIdentity);
  }
  CHECK_THROWS_AS(s4.multiply(0, 24), ArgumentError);
  CHECK_THROWS_AS(s4.element_order(99), ArgumentError);
}

TEST_CASE("subgroup closure") {
  const ConcreteGroup s3 = build_symmetric(3);
  CHECK(subgroup_closure(s3, std::vector<Element>{}).is_trivial());
  for (Element x = 0; x < 6; ++x) CHECK(subgroup_closure(s3, {x}).size() == s3.ord(x));
  std::vector<Element> transpositions;
  for (Element x = 0; x < 6; ++x)
    if (s3.ord(x) == 2) transpositions.push_back(x);
  REQUIRE(transpositions.size() == 3);
  CHECK(subgroup_closure(s3, {transpositions[0], transpositions[1]}).is_whole());
  CHECK_THROWS_AS(SubgroupSet(s3, [&] {
                    ElementSet e(6);
                    e.insert(0);
                    e.insert(transpositions[0]);
                    e.insert(transpositions[1]);
                    return e;
                  }()),
                  ArgumentError);
}

TEST_CASE("quotients") {
  const ConcreteGroup s4 = build_symmetric(4);
  CHECK(quotient(s4, SubgroupSet::whole(s4)).group.order() == 1);
  CHECK(quotient(s4, SubgroupSet::trivial(s4)).group.table() == s4.table());

  const auto normals = normal_subgroups(s4);
  const auto v4 = std::find_if(normals.begin(), normals.end(), [](const SubgroupSet& h) { return h.size() == 4; });
  REQUIRE(v4 != normals.end());
  const Quotient q = quotient(s4, *v4);
  CHECK(q.group.order() == 6);
  CHECK(center(q.group).is_trivial());
  for (Element x = 0; x < 24; ++x)
    for (Element y = 0; y < 24; ++y)
      CHECK(q.projection[s4.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]));

  const SubgroupSet c2 = subgroup_closure(s4, {1});
  if (!is_normal(s4, c2)) CHECK_THROWS_AS(quotient(s4, c2), ArgumentError);
}

TEST_CASE("property: group laws and closure on sample groups") {
  for (const GroupSpec& spec : sample_specs()) {
    CAPTURE(spec.display_name());
    const ConcreteGroup g = build_group(spec);
    const std::size_t n = g.order();
    for (Element x = 0; x < n; ++x) {
      CHECK(g.mul(0, x) == x);
      CHECK(g.mul(x, 0) == x);
      CHECK(g.mul(x, g.inv(x)) == 0);
      CHECK(g.ord(x) == oracle_ref::order_of(g, x));
      for (Element y = 0; y < n; ++y) {
        CHECK(g.ord(g.mul(x, y)) == g.ord(g.mul(y, x)));
        if (n <= 24)
          for (Element z = 0; z < n; ++z) REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      }
    }
    for (Element x = 0; x < n; x += 3) {
      for (Element y = 0; y < n; y += 5) {
        const SubgroupSet a = subgroup_closure(g, {x});
        const SubgroupSet b = subgroup_closure(g, {x, y});
        CHECK(a.is_subgroup_of(b));
        CHECK(subgroup_closure(g, b.members()) == b);
        const auto naive = oracle_ref::closure(g, {x, y});
        CHECK(oracle_ref::count(naive) == b.size());
      }
    }
    CHECK(quotient(g, SubgroupSet::trivial(g)).group.table() == g.table());
  }
}

TEST_CASE("property: direct product order is multiplicative") {
  const auto specs = sample_specs();
  for (std::size_t i = 0; i < specs.size(); i += 3)
    for (std::size_t j = 1; j < specs.size(); j += 4) {
      const ConcreteGroup a = build_group(specs[i]);
      const ConcreteGroup b = build_group(specs[j]);
      if (a.order() * b.order() > 400) continue;
      CHECK(direct_product(a, b).order() == a.order() * b.order());
    }
}

TEST_CASE("order cap") {
  BuildOptions small;
  small.order_cap = 50;
  CHECK_THROWS_AS(build_cyclic(51, small), OrderCapError);
  CHECK_THROWS_AS(build_symmetric(5, small), OrderCapError);
  CHECK(build_cyclic(50, small).order() == 50);

  ::setenv("NILGRAPH_ORDER_CAP", "30", 1);
  CHECK(default_order_cap() == 30);
  CHECK_THROWS_AS(build_cyclic(31, default_build_options()), OrderCapError);
  ::unsetenv("NILGRAPH_ORDER_CAP");
  CHECK(default_order_cap() == 2000);
}

TEST_CASE("Cayley table input") {
  const ConcreteGroup s3 = build_symmetric(3);
  const ConcreteGroup t = build_from_cayley_table(6, s3.table());
  CHECK(t.table() == s3.table());
  std::vector<Element> broken = s3.table();
  std::swap(broken[7], broken[8]);
  CHECK_THROWS_AS(build_from_cayley_table(6, broken), SpecError);
}

TEST_CASE("group specs") {
  const GroupSpec s = GroupSpec::product(GroupSpec::symmetric(3), GroupSpec::semidirect_cyclic(5, 4, 2));
  const nlohmann::json j = s;
  const GroupSpec back = j.get<GroupSpec>();
  CHECK(nlohmann::json(back) == j);
  CHECK(build_group(back).order() == 120);
  CHECK(build_group(sl23_spec()).order() == 24);

  CHECK_THROWS_AS(parse_group_spec("{not json"), SpecError);
  CHECK_THROWS_AS(parse_group_spec("[1,2]"), SpecError);
  CHECK_THROWS_AS(build_group(parse_group_spec(R"({"constructor":"mystery"})")), SpecError);
  CHECK_THROWS_AS(build_group(parse_group_spec(R"({"constructor":"cyclic","params":{}})")), SpecError);
  CHECK_THROWS_AS(build_group(parse_group_spec(R"({"constructor":"cyclic","params":{"n":"six"}})")), SpecError);
  CHECK(build_group(parse_group_spec(R"({"constructor":"cyclic","params":{"n":6},"label":"six"})")).label() == "six");
}

TEST_CASE("automorphisms") {
  const ConcreteGroup c5 = build_cyclic(5);
  CHECK(automorphisms_of_order(c5, 4).size() == 2);
  CHECK(automorphisms_of_order(c5, 2).size() == 1);
  const ConcreteGroup q8 = build_quaternion(8);
  // Aut(Q8) = S4 has eight elements of order 3.
  CHECK(automorphisms_of_order(q8, 3).size() == 8);
  for (const Permutation& p : automorphisms_of_order(q8, 3)) CHECK(is_automorphism(q8, p));
  CHECK_FALSE(is_automorphism(c5, std::vector<std::uint32_t>{0, 2, 1, 3, 4}));
}
