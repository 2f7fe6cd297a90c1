#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nilgraph/group.hpp"
#include "nilgraph/subgroup.hpp"

namespace nilgraph {

// Number theory helpers.
bool is_prime(std::uint64_t n);
/// Distinct primes dividing n, ascending.
std::vector<std::uint32_t> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint32_t p);
bool is_prime_power(std::uint64_t n);

enum class SeriesKind { upper_central, lower_central, derived };

/// A subgroup series. When `stabilized`, the last two terms are equal.
struct SeriesResult {
  SeriesKind kind;
  std::vector<SubgroupSet> terms;
  bool stabilized = false;

  const SubgroupSet& last() const { return terms.back(); }
  /// Number of strict steps between consecutive terms.
  std::size_t strict_steps() const;
};

SubgroupSet centralizer(const ConcreteGroup& g, Element x);
/// Centralizer of a whole subgroup.
SubgroupSet centralizer(const ConcreteGroup& g, const SubgroupSet& h);
SubgroupSet center(const ConcreteGroup& g);

/// Z_0 = 1 and Z_{i+1} is the preimage of Z(G/Z_i), via explicit quotients.
SeriesResult upper_central_series(const ConcreteGroup& g);
SubgroupSet hypercenter(const ConcreteGroup& g);

/// Subgroup generated by all [a, b] with a in A, b in B.
SubgroupSet commutator_subgroup(const SubgroupSet& a, const SubgroupSet& b);

/// gamma_1 = H, gamma_{i+1} = [H, gamma_i].
SeriesResult lower_central_series(const SubgroupSet& h);
bool is_nilpotent(const SubgroupSet& h);
bool is_nilpotent(const ConcreteGroup& g);
/// Nilpotency class, or nullopt for non-nilpotent H.
std::optional<std::size_t> nilpotency_class(const SubgroupSet& h);

/// Nilpotency by Sylow counting: H is nilpotent iff, for every prime p, the
/// p-elements of H number exactly the p-part of |H|. O(|H|).
bool is_nilpotent_by_sylow_count(const SubgroupSet& h);

SeriesResult derived_series(const SubgroupSet& h);
bool is_solvable(const ConcreteGroup& g);
bool is_solvable(const SubgroupSet& h);

/// Grows a p-subgroup through normalizers until it reaches the full p-part.
/// `start`, when given, must be a p-element and seeds the growth.
SubgroupSet sylow_subgroup(const ConcreteGroup& g, std::uint32_t p,
                           std::optional<Element> start = std::nullopt);
/// O_p(G): intersection of the conjugates of one Sylow p-subgroup.
SubgroupSet p_core(const ConcreteGroup& g, std::uint32_t p);
/// Fit(G): product of the p-cores.
SubgroupSet fitting(const ConcreteGroup& g);

struct ConjugacyClasses {
  /// Classes ordered by smallest member; classes[i][0] is that member.
  std::vector<std::vector<Element>> classes;
  std::vector<std::uint32_t> class_of;
  /// rep^conjugator[x] = x, with rep = classes[class_of[x]][0].
  std::vector<Element> conjugator;

  Element representative(Element x) const { return classes[class_of[x]][0]; }
};

ConjugacyClasses conjugacy_classes(const ConcreteGroup& g);

/// Every normal subgroup exactly once, sorted by (size, member list).
std::vector<SubgroupSet> normal_subgroups(const ConcreteGroup& g);
std::vector<SubgroupSet> normal_subgroups(const ConcreteGroup& g, const ConjugacyClasses& classes);

/// prime p -> p-component of x, for every prime dividing o(x).
std::map<std::uint32_t, Element> primary_decomposition(const ConcreteGroup& g, Element x);

bool is_normal(const ConcreteGroup& g, const SubgroupSet& h);
SubgroupSet normalizer(const ConcreteGroup& g, const SubgroupSet& h);
SubgroupSet normal_closure(const ConcreteGroup& g, std::span<const Element> seed);
SubgroupSet normal_closure(const ConcreteGroup& g, const ElementSet& seed);
/// Primes dividing |G|.
std::vector<std::uint32_t> pi(const ConcreteGroup& g);

bool is_cyclic(const SubgroupSet& h);
bool is_abelian(const SubgroupSet& h);

}  // namespace nilgraph
