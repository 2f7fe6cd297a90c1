#pragma once

#include <vector>

#include "nilgraph/group_spec.hpp"
#include "nilgraph/verify.hpp"

// A spread of small groups: abelian, nilpotent, Frobenius, 2-Frobenius,
// centerless and non-A-groups.
inline std::vector<nilgraph::GroupSpec> sample_specs() {
  using nilgraph::GroupSpec;
  return {
      GroupSpec::cyclic(1),
      GroupSpec::cyclic(6),
      GroupSpec::cyclic(8),
      GroupSpec::product(GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(2)), GroupSpec::cyclic(2)),
      GroupSpec::symmetric(3),
      GroupSpec::dihedral(4),
      GroupSpec::quaternion(8),
      GroupSpec::dihedral(6),
      GroupSpec::alternating(4),
      GroupSpec::quaternion(12),
      GroupSpec::semidirect_cyclic(5, 4, 2),
      GroupSpec::semidirect_cyclic(7, 3, 2),
      GroupSpec::dihedral(9),
      GroupSpec::symmetric(4),
      nilgraph::sl23_spec(),
      GroupSpec::product(GroupSpec::symmetric(3), GroupSpec::cyclic(2)),
      GroupSpec::product(GroupSpec::symmetric(3), GroupSpec::cyclic(3)),
      GroupSpec::semidirect_cyclic(3, 8, 2),
      GroupSpec::dihedral(10),
      GroupSpec::semidirect_cyclic(9, 3, 4),
  };
}
