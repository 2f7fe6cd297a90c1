#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilgraph/element_set.hpp"

namespace nilgraph {

/// Index of an element inside one ConcreteGroup. Index 0 is the identity.
using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

inline constexpr Element kIdentity = 0;

struct BuildOptions {
  std::size_t order_cap = 2000;
  /// Groups below this order get an exhaustive associativity check; larger
  /// groups are spot-checked on 10*n^2 random triples.
  std::size_t full_associativity_limit = 512;
};

/// Default order cap: 2000, overridden by NILGRAPH_ORDER_CAP when set.
std::size_t default_order_cap();
BuildOptions default_build_options();

/// A finite group materialized as a Cayley table.
///
/// Immutable after construction; every accessor is a pure read and safe to
/// call from any number of threads.
class ConcreteGroup {
 public:
  /// Validates the identity, inverse and associativity laws.
  /// `table` is row-major: table[i * n + j] = i * j.
  ConcreteGroup(std::size_t order, std::vector<Element> table, std::vector<Element> generators,
                std::string label, const BuildOptions& options = default_build_options());

  /// Skips the associativity check. For tables derived from an already
  /// validated group (quotients, induced subgroups).
  static ConcreteGroup derived(std::size_t order, std::vector<Element> table,
                               std::vector<Element> generators, std::string label);

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }
  const std::vector<Element>& generators() const { return generators_; }
  std::span<const Element> row(Element x) const {
    return {table_.data() + static_cast<std::size_t>(x) * order_, order_};
  }
  const std::vector<Element>& table() const { return table_; }

  // Unchecked hot-path accessors.
  Element mul(Element x, Element y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }
  Element inv(Element x) const { return inverse_[x]; }
  std::uint32_t ord(Element x) const { return element_order_[x]; }

  // Checked accessors; throw ArgumentError on out-of-range indices.
  Element multiply(Element x, Element y) const;
  Element inverse(Element x) const;
  /// [x, y] = x^-1 y^-1 x y
  Element commutator(Element x, Element y) const;
  /// x^g = g^-1 x g
  Element conjugate(Element x, Element g) const;
  std::uint32_t element_order(Element x) const;
  Element power(Element x, std::int64_t k) const;

  bool contains(Element x) const { return x < order_; }
  bool is_abelian() const;
  ElementSet all() const { return ElementSet::full(order_); }
  ElementSet empty_set() const { return ElementSet(order_); }

 private:
  ConcreteGroup() = default;
  void check_index(Element x) const;
  void finish(bool check_associativity, const BuildOptions& options);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::vector<Element> generators_;
  std::string label_;
};

// Builders. All throw SpecError on invalid parameters and OrderCapError when
// the result would exceed options.order_cap.

ConcreteGroup build_cyclic(std::size_t n, const BuildOptions& options = default_build_options());

/// Dihedral group of order 2n, identical to build_semidirect_cyclic(n, 2, n-1).
ConcreteGroup build_dihedral(std::size_t n, const BuildOptions& options = default_build_options());

/// Dicyclic group of the given order (a multiple of 4); order 8 is Q8.
ConcreteGroup build_quaternion(std::size_t order,
                               const BuildOptions& options = default_build_options());

ConcreteGroup build_symmetric(std::size_t degree,
                              const BuildOptions& options = default_build_options());
ConcreteGroup build_alternating(std::size_t degree,
                                const BuildOptions& options = default_build_options());

/// Closure of permutation generators (image arrays), composed left to right:
/// (p*q)(i) = q(p(i)). Elements are indexed in breadth-first discovery order.
ConcreteGroup build_from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                                      const BuildOptions& options = default_build_options());

/// <x> x| <y> with x^n = y^m = 1 and x^y = x^e. Element x^a y^b has index a*m + b.
ConcreteGroup build_semidirect_cyclic(std::size_t n, std::size_t m, std::int64_t e,
                                      const BuildOptions& options = default_build_options());

/// N x| H where action[h] is the automorphism of N applied by conjugation with h:
/// (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2). Pair (a, b) has index a*|H| + b,
/// so a trivial action reproduces direct_product(N, H) exactly.
ConcreteGroup build_semidirect_table(const ConcreteGroup& normal, const ConcreteGroup& acting,
                                     const std::vector<Permutation>& action,
                                     const BuildOptions& options = default_build_options());

/// Pair (a, b) has index a*|B| + b.
ConcreteGroup direct_product(const ConcreteGroup& a, const ConcreteGroup& b,
                             const BuildOptions& options = default_build_options());

/// Identity must sit at index 0.
ConcreteGroup build_from_cayley_table(std::size_t order, std::vector<Element> table,
                                      std::string label = "table",
                                      const BuildOptions& options = default_build_options());

/// True when `map` (indexed by element) is an automorphism of g.
bool is_automorphism(const ConcreteGroup& g, std::span<const std::uint32_t> map);

/// All automorphisms of exactly the given order,
/// enumerated by choosing generator images in increasing index order.
std::vector<Permutation> automorphisms_of_order(const ConcreteGroup& g, std::uint32_t order);

/// Smallest greedy generating set of the subset `members`, assumed closed.
std::vector<Element> greedy_generators(const ConcreteGroup& g, const ElementSet& members);

}  // namespace nilgraph
