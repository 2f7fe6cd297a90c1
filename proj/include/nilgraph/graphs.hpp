#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilgraph/element_set.hpp"
#include "nilgraph/group.hpp"
#include "nilgraph/structure.hpp"
#include "nilgraph/subgroup.hpp"

namespace nilgraph {

/// True iff <x, y> is nilpotent.
bool is_nilpotent_pair(const ConcreteGroup& g, Element x, Element y);

/// Nil_G(x) for every element of a group.
///
/// Neighborhoods are computed for one representative per conjugacy class and
/// transported by conjugation, using Nil_G(x^g) = Nil_G(x)^g.
class NilTable {
 public:
  NilTable(const ConcreteGroup& g, const ConjugacyClasses& classes, unsigned jobs = 1);
  explicit NilTable(const ConcreteGroup& g, unsigned jobs = 1);

  const ElementSet& operator[](Element x) const { return nil_[x]; }
  std::size_t size() const { return nil_.size(); }

 private:
  std::vector<ElementSet> nil_;
};

/// Nil_G(x) computed directly by scanning every y; no caching.
ElementSet nil_neighborhood(const ConcreteGroup& g, Element x);

enum class GraphKind { nilpotent_full, nilpotent_reduced, commuting };

std::string_view to_string(GraphKind kind);
std::optional<GraphKind> parse_graph_kind(std::string_view name);

/// An undirected graph on a subset of a group's elements with its components
/// and per-component diameters.
class GroupGraph {
 public:
  GroupGraph(const ConcreteGroup& parent, GraphKind kind, ElementSet vertices,
             std::vector<ElementSet> adjacency);

  const ConcreteGroup& parent() const { return *parent_; }
  GraphKind kind() const { return kind_; }
  const ElementSet& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const;
  bool has_vertex(Element x) const { return x < vertices_.width() && vertices_.contains(x); }
  bool adjacent(Element x, Element y) const { return adjacency_[x].contains(y); }
  const ElementSet& neighbors(Element x) const { return adjacency_[x]; }

  /// Components ordered by smallest member, each sorted ascending.
  const std::vector<std::vector<Element>>& components() const { return components_; }
  /// Diameter of each component; 0 for singletons.
  const std::vector<std::uint32_t>& diameters() const { return diameters_; }
  std::size_t component_count() const { return components_.size(); }
  /// At least one vertex and exactly one component.
  bool is_connected() const { return components_.size() == 1; }
  /// Largest component diameter; nullopt for a graph with no vertices.
  std::optional<std::uint32_t> max_diameter() const;

  /// Throws ArgumentError if x is not a vertex.
  std::size_t component_of(Element x) const;
  /// BFS distance; nullopt when y is unreachable from x.
  std::optional<std::uint32_t> distance(Element x, Element y) const;
  /// Distances from every vertex in `sources` (multi-source BFS); entries for
  /// non-vertices and unreachable vertices are nullopt.
  std::vector<std::optional<std::uint32_t>> distances_from(const ElementSet& sources) const;

  /// Identical vertex sets and edge sets.
  friend bool same_graph(const GroupGraph& a, const GroupGraph& b);

 private:
  void require_vertex(Element x) const;
  std::uint32_t eccentricity(Element x) const;

  const ConcreteGroup* parent_;
  GraphKind kind_;
  ElementSet vertices_;
  std::size_t vertex_count_;
  std::vector<ElementSet> adjacency_;
  std::vector<std::vector<Element>> components_;
  std::vector<std::int32_t> component_id_;
  std::vector<std::uint32_t> diameters_;
};

/// Builds a graph of the given kind. Pair evaluation may run on `jobs`
/// threads; the result does not depend on the thread count.
GroupGraph build_graph(const ConcreteGroup& g, GraphKind kind, unsigned jobs = 1);
/// Same, reusing precomputed neighborhoods and central subgroups.
GroupGraph build_graph(const ConcreteGroup& g, GraphKind kind, const NilTable& nil,
                       const SubgroupSet& hypercenter, const SubgroupSet& center);

/// Vertices adjacent to every other vertex. Requires kind == nilpotent_full.
ElementSet universal_vertices(const GroupGraph& graph);

enum class ExportFormat { dot, json };
std::optional<ExportFormat> parse_export_format(std::string_view name);

/// Deterministic text export of a graph.
std::string export_graph(const GroupGraph& graph, ExportFormat format);
std::string export_graph(const GroupGraph& graph, std::string_view format);

}  // namespace nilgraph
