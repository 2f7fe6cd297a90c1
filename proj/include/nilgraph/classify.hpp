#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilgraph/graphs.hpp"
#include "nilgraph/group.hpp"
#include "nilgraph/structure.hpp"
#include "nilgraph/subgroup.hpp"

namespace nilgraph {

struct FrobeniusWitness {
  SubgroupSet kernel;
  SubgroupSet complement;
};

struct TwoFrobeniusWitness {
  SubgroupSet K;
  SubgroupSet L;
};

/// K is a Frobenius kernel of the subgroup L: K normal in L, 1 < K < L, and
/// C_L(k) <= K for every nontrivial k in K.
bool is_frobenius_kernel(const SubgroupSet& l, const SubgroupSet& k);

/// A subgroup of order |G:K| meeting K trivially, searched over closures of
/// 1 to 3 elements of order coprime to |K|.
std::optional<SubgroupSet> find_complement(const ConcreteGroup& g, const SubgroupSet& k);

/// Kernel-first recognition: scans the normal subgroups for a kernel.
std::optional<FrobeniusWitness> is_frobenius(const ConcreteGroup& g);
std::optional<FrobeniusWitness> is_frobenius(const ConcreteGroup& g,
                                             const std::vector<SubgroupSet>& normal);

/// Checks (K, L) = (Fit(G), preimage of Fit(G/Fit(G))).
std::optional<TwoFrobeniusWitness> is_2frobenius(const ConcreteGroup& g);
/// Scans every pair K < L of normal subgroups.
std::optional<TwoFrobeniusWitness> is_2frobenius_by_scan(const ConcreteGroup& g,
                                                        const std::vector<SubgroupSet>& normal);
bool is_2frobenius_pair(const ConcreteGroup& g, const SubgroupSet& k, const SubgroupSet& l);

/// Every Sylow subgroup abelian.
bool is_A_group(const ConcreteGroup& g);
/// Every nontrivial element has an abelian centralizer.
bool is_AC_group(const ConcreteGroup& g);

/// Nil_G(x) is closed under multiplication.
bool nil_closed(const ConcreteGroup& g, Element x, const NilTable& nil);
bool nil_closed(const ConcreteGroup& g, Element x);

/// Every Nil_G(x) is a subgroup, tested only on prime-power-order class
/// representatives.
bool is_n_group(const ConcreteGroup& g, const ConjugacyClasses& classes, const NilTable& nil);
bool is_n_group(const ConcreteGroup& g);
/// Same property tested on every element.
bool is_n_group_all_elements(const ConcreteGroup& g, const NilTable& nil);

/// Nil_G(x) is a nilpotent subgroup for every x != 1.
bool has_nilpotent_neighborhood_property(const ConcreteGroup& g, const NilTable& nil);
bool has_nilpotent_neighborhood_property(const ConcreteGroup& g);

/// G = N A with N normal cyclic, A abelian and N meet A = 1.
std::optional<std::pair<SubgroupSet, SubgroupSet>> find_cyclic_by_abelian(
    const ConcreteGroup& g, const std::vector<SubgroupSet>& normal);

namespace oracle {

/// Subgroup generated by the prime-power-order elements whose normal closure
/// is a p-group.
SubgroupSet fitting_by_normal_closures(const ConcreteGroup& g);

/// A subgroup H with 1 < H < G and H meet H^g = 1 for every g outside H,
/// searched over all subgroups generated by at most two elements.
std::optional<SubgroupSet> malnormal_subgroup(const ConcreteGroup& g);

/// Upper central series via Z_{i+1} = {g : [g, x] in Z_i for all x}.
std::vector<SubgroupSet> upper_central_series_by_commutators(const ConcreteGroup& g);

}  // namespace oracle

}  // namespace nilgraph
