#include "doctest.h"
#include "nilgraph/classify.hpp"
#include "nilgraph/group_spec.hpp"
#include "oracles.hpp"
#include "sample_groups.hpp"

using namespace nilgraph;

TEST_CASE("Frobenius recognition") {
  const ConcreteGroup s3 = build_symmetric(3);
  const auto w = is_frobenius(s3);
  REQUIRE(w.has_value());
  CHECK(w->kernel.size() == 3);
  CHECK(w->complement.size() == 2);

  const ConcreteGroup a4 = build_alternating(4);
  const auto wa = is_frobenius(a4);
  REQUIRE(wa.has_value());
  CHECK(wa->kernel.size() == 4);
  CHECK(wa->complement.size() == 3);
  CHECK(is_frobenius_kernel(SubgroupSet::whole(a4), wa->kernel));

  CHECK_FALSE(is_frobenius(build_quaternion(8)).has_value());
  CHECK_FALSE(is_frobenius(build_cyclic(12)).has_value());
  CHECK_FALSE(is_frobenius(build_symmetric(4)).has_value());
  CHECK(is_frobenius(build_semidirect_cyclic(5, 4, 2)).has_value());
  CHECK_FALSE(is_frobenius(build_semidirect_cyclic(15, 4, 8)).has_value());
}

TEST_CASE("2-Frobenius recognition") {
  const ConcreteGroup s4 = build_symmetric(4);
  const auto w = is_2frobenius(s4);
  REQUIRE(w.has_value());
  CHECK(w->K.size() == 4);
  CHECK(w->L.size() == 12);
  CHECK(is_2frobenius_pair(s4, w->K, w->L));
  CHECK(is_2frobenius_by_scan(s4, normal_subgroups(s4)).has_value());

  CHECK_FALSE(is_2frobenius(build_symmetric(3)).has_value());
  CHECK_FALSE(is_2frobenius(build_cyclic(10)).has_value());
}

TEST_CASE("A-groups and AC-groups") {
  CHECK(is_A_group(build_alternating(4)));
  CHECK_FALSE(is_A_group(build_group(sl23_spec())));
  CHECK(is_A_group(build_cyclic(12)));
  CHECK(is_AC_group(build_cyclic(12)));
  CHECK(is_AC_group(build_symmetric(3)));
  CHECK_FALSE(is_AC_group(build_symmetric(4)));
}

TEST_CASE("n-groups and the nilpotent-neighborhood property") {
  const ConcreteGroup c9 = build_cyclic(9);
  CHECK(is_n_group(c9));
  CHECK(has_nilpotent_neighborhood_property(c9));
  for (Element x = 0; x < 9; ++x) CHECK(nil_closed(c9, x));

  const ConcreteGroup s3 = build_symmetric(3);
  CHECK(is_n_group(s3));
  CHECK(has_nilpotent_neighborhood_property(s3));

  const ConcreteGroup s4 = build_symmetric(4);
  const NilTable nil(s4);
  CHECK(is_n_group(s4) == is_n_group_all_elements(s4, nil));

  CHECK(has_nilpotent_neighborhood_property(build_semidirect_cyclic(5, 4, 2)));
  CHECK_FALSE(has_nilpotent_neighborhood_property(build_semidirect_cyclic(15, 4, 8)));
}

TEST_CASE("cyclic-by-abelian factorization") {
  const ConcreteGroup g = build_semidirect_cyclic(15, 4, 8);
  const auto normal = normal_subgroups(g);
  const auto f = find_cyclic_by_abelian(g, normal);
  REQUIRE(f.has_value());
  const auto& [n, a] = *f;
  CHECK(is_cyclic(n));
  CHECK(is_normal(g, n));
  CHECK(is_abelian(a));
  CHECK(intersect(n, a).is_trivial());
  CHECK(n.size() * a.size() == g.order());

  const ConcreteGroup a5 = build_alternating(5);
  CHECK_FALSE(find_cyclic_by_abelian(a5, normal_subgroups(a5)).has_value());
}

TEST_CASE("property: recognizers agree with definitions") {
  for (const GroupSpec& spec : sample_specs()) {
    CAPTURE(spec.display_name());
    const ConcreteGroup g = build_group(spec);
    const auto normal = normal_subgroups(g);
    const auto frob = is_frobenius(g, normal);

    CHECK(frob.has_value() == oracle_ref::frobenius(g));
    CHECK(frob.has_value() == oracle::malnormal_subgroup(g).has_value());
    if (frob) {
      CHECK(frob->kernel.size() * frob->complement.size() == g.order());
      CHECK(intersect(frob->kernel, frob->complement).is_trivial());
      if (is_solvable(g)) CHECK(frob->kernel == fitting(g));
    }
    CHECK(is_2frobenius(g).has_value() == is_2frobenius_by_scan(g, normal).has_value());

    // A-group: every Sylow subgroup abelian, checked on Sylows from every start.
    bool sylows_abelian = true;
    for (std::uint32_t p : pi(g)) sylows_abelian = sylows_abelian && is_abelian(sylow_subgroup(g, p));
    CHECK(is_A_group(g) == sylows_abelian);

    bool ac = true;
    for (Element x = 1; x < g.order(); ++x) ac = ac && is_abelian(centralizer(g, x));
    CHECK(is_AC_group(g) == ac);

    const NilTable nil(g);
    bool nilprop = true;
    for (Element x = 1; x < g.order() && nilprop; ++x) {
      const auto m = oracle_ref::nil(g, x);
      nilprop = is_closed(g, nil[x]) && oracle_ref::nilpotent(g, m);
    }
    CHECK(has_nilpotent_neighborhood_property(g, nil) == nilprop);
    CHECK(is_n_group(g, conjugacy_classes(g), nil) == is_n_group_all_elements(g, nil));

    // Nil(x) = C(x) on prime-power elements exactly for A-groups.
    bool nil_is_c = true;
    for (Element x = 0; x < g.order(); ++x)
      if (is_prime_power(g.ord(x))) nil_is_c = nil_is_c && nil[x] == centralizer(g, x).members();
    CHECK(nil_is_c == is_A_group(g));
  }
}
