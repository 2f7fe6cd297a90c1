#pragma once

#include <span>
#include <vector>

#include "nilgraph/element_set.hpp"
#include "nilgraph/group.hpp"

namespace nilgraph {

/// A subgroup of a parent ConcreteGroup, stored as a membership bitset.
///
/// The parent must outlive the subgroup. Construction from an arbitrary bitset
/// validates closure; results of closure operations skip the check.
class SubgroupSet {
 public:
  /// Throws ArgumentError unless `members` is a subgroup of `parent`.
  SubgroupSet(const ConcreteGroup& parent, ElementSet members);

  static SubgroupSet trivial(const ConcreteGroup& parent);
  static SubgroupSet whole(const ConcreteGroup& parent);
  /// No validation; `members` must already be a subgroup.
  static SubgroupSet trusted(const ConcreteGroup& parent, ElementSet members);

  const ConcreteGroup& parent() const { return *parent_; }
  const ElementSet& members() const { return members_; }
  std::size_t size() const { return size_; }
  bool contains(Element x) const { return members_.contains(x); }
  bool is_trivial() const { return size_ == 1; }
  bool is_whole() const { return size_ == parent_->order(); }
  std::vector<Element> elements() const { return members_.members(); }

  bool is_subgroup_of(const SubgroupSet& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  SubgroupSet(const ConcreteGroup& parent, ElementSet members, std::size_t size)
      : parent_(&parent), members_(std::move(members)), size_(size) {}

  const ConcreteGroup* parent_;
  ElementSet members_;
  std::size_t size_;
};

/// Orders by (size, lexicographic member list).
bool subgroup_less(const SubgroupSet& a, const SubgroupSet& b);

/// True when `s` contains the identity and is closed under multiplication.
bool is_closed(const ConcreteGroup& g, const ElementSet& s);

/// Smallest subgroup containing `seed`, by worklist closure.
SubgroupSet subgroup_closure(const ConcreteGroup& g, std::span<const Element> seed);
SubgroupSet subgroup_closure(const ConcreteGroup& g, const ElementSet& seed);
SubgroupSet subgroup_closure(const ConcreteGroup& g, std::initializer_list<Element> seed);

SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b);
/// HK as a set; a subgroup whenever one factor normalizes the other.
SubgroupSet product_subgroup(const SubgroupSet& a, const SubgroupSet& b);

/// Conjugate subgroup H^g.
SubgroupSet conjugate_subgroup(const SubgroupSet& h, Element g);

struct Quotient {
  ConcreteGroup group;
  /// projection[x] is the coset index of x.
  std::vector<Element> projection;
  /// representative[c] is the smallest element of coset c.
  std::vector<Element> representative;
};

/// G/N. Cosets are numbered in increasing order of their smallest member, so
/// the identity coset is 0. Throws ArgumentError unless N is normal.
Quotient quotient(const ConcreteGroup& g, const SubgroupSet& n);

/// Preimage of a subgroup of G/N under the projection.
SubgroupSet preimage(const ConcreteGroup& g, const Quotient& q, const SubgroupSet& sub);

/// Image of a subgroup of G in G/N.
SubgroupSet image(const Quotient& q, const SubgroupSet& sub);

/// H as a standalone group (identity first, then members in increasing order),
/// with `embedding[i]` the parent index of element i.
struct InducedGroup {
  ConcreteGroup group;
  std::vector<Element> embedding;
};
InducedGroup induced_group(const SubgroupSet& h, std::string label = "sub");

}  // namespace nilgraph
