#include "nilgraph/graphs.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

#include "nilgraph/error.hpp"
#include "nilgraph/parallel.hpp"

namespace nilgraph {

bool is_nilpotent_pair(const ConcreteGroup& g, Element x, Element y) {
  if (!g.contains(x) || !g.contains(y)) throw ArgumentError("is_nilpotent_pair: element out of range");
  if (g.mul(x, y) == g.mul(y, x)) return true;
  return is_nilpotent_by_sylow_count(subgroup_closure(g, {x, y}));
}

ElementSet nil_neighborhood(const ConcreteGroup& g, Element x) {
  ElementSet s(g.order());
  for (Element y = 0; y < g.order(); ++y)
    if (is_nilpotent_pair(g, x, y)) s.insert(y);
  return s;
}

NilTable::NilTable(const ConcreteGroup& g, unsigned jobs) : NilTable(g, conjugacy_classes(g), jobs) {}

NilTable::NilTable(const ConcreteGroup& g, const ConjugacyClasses& classes, unsigned jobs) {
  const std::size_t n = g.order();
  std::vector<ElementSet> rep_nil(classes.classes.size());
  parallel_for(classes.classes.size(), jobs,
               [&](std::size_t c) { rep_nil[c] = nil_neighborhood(g, classes.classes[c][0]); });
  nil_.assign(n, ElementSet());
  for (Element x = 0; x < n; ++x) {
    const ElementSet& base = rep_nil[classes.class_of[x]];
    const Element c = classes.conjugator[x];
    if (c == kIdentity) {
      nil_[x] = base;
      continue;
    }
    const Element ci = g.inv(c);
    ElementSet moved(n);
    base.for_each([&](std::size_t y) { moved.insert(g.mul(g.mul(ci, static_cast<Element>(y)), c)); });
    nil_[x] = std::move(moved);
  }
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::nilpotent_full:
      return "nilpotent_full";
    case GraphKind::nilpotent_reduced:
      return "nilpotent_reduced";
    case GraphKind::commuting:
      return "commuting";
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  if (name == "nilpotent" || name == "nilpotent_full" || name == "full") return GraphKind::nilpotent_full;
  if (name == "reduced" || name == "nilpotent_reduced") return GraphKind::nilpotent_reduced;
  if (name == "commuting") return GraphKind::commuting;
  return std::nullopt;
}

GroupGraph::GroupGraph(const ConcreteGroup& parent, GraphKind kind, ElementSet vertices,
                       std::vector<ElementSet> adjacency)
    : parent_(&parent),
      kind_(kind),
      vertices_(std::move(vertices)),
      vertex_count_(vertices_.size()),
      adjacency_(std::move(adjacency)) {
  const std::size_t n = parent.order();
  // Restrict rows to the vertex set and drop loops.
  for (std::size_t x = 0; x < n; ++x) {
    if (!vertices_.contains(x)) {
      adjacency_[x] = ElementSet(n);
      continue;
    }
    adjacency_[x] &= vertices_;
    adjacency_[x].erase(x);
  }

  component_id_.assign(n, -1);
  vertices_.for_each([&](std::size_t start) {
    if (component_id_[start] >= 0) return;
    const auto id = static_cast<std::int32_t>(components_.size());
    std::vector<Element> members{static_cast<Element>(start)};
    component_id_[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      adjacency_[members[head]].for_each([&](std::size_t y) {
        if (component_id_[y] < 0) {
          component_id_[y] = id;
          members.push_back(static_cast<Element>(y));
        }
      });
    }
    std::sort(members.begin(), members.end());
    components_.push_back(std::move(members));
  });

  diameters_.assign(components_.size(), 0);
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (Element v : components_[c]) diameters_[c] = std::max(diameters_[c], eccentricity(v));
}

std::size_t GroupGraph::edge_count() const {
  std::size_t twice = 0;
  vertices_.for_each([&](std::size_t x) { twice += adjacency_[x].size(); });
  return twice / 2;
}

std::optional<std::uint32_t> GroupGraph::max_diameter() const {
  if (diameters_.empty()) return std::nullopt;
  return *std::max_element(diameters_.begin(), diameters_.end());
}

void GroupGraph::require_vertex(Element x) const {
  if (!has_vertex(x)) throw ArgumentError("element " + std::to_string(x) + " is not a vertex");
}

std::size_t GroupGraph::component_of(Element x) const {
  require_vertex(x);
  return static_cast<std::size_t>(component_id_[x]);
}

std::uint32_t GroupGraph::eccentricity(Element x) const {
  ElementSet visited(parent_->order());
  visited.insert(x);
  ElementSet frontier = visited;
  std::uint32_t depth = 0;
  while (true) {
    ElementSet next(parent_->order());
    frontier.for_each([&](std::size_t v) { next |= adjacency_[v]; });
    next -= visited;
    if (next.empty()) return depth;
    visited |= next;
    frontier = std::move(next);
    ++depth;
  }
}

std::vector<std::optional<std::uint32_t>> GroupGraph::distances_from(const ElementSet& sources) const {
  std::vector<std::optional<std::uint32_t>> dist(parent_->order());
  ElementSet frontier = sources & vertices_;
  ElementSet visited = frontier;
  std::uint32_t depth = 0;
  while (!frontier.empty()) {
    frontier.for_each([&](std::size_t v) { dist[v] = depth; });
    ElementSet next(parent_->order());
    frontier.for_each([&](std::size_t v) { next |= adjacency_[v]; });
    next -= visited;
    visited |= next;
    frontier = std::move(next);
    ++depth;
  }
  return dist;
}

std::optional<std::uint32_t> GroupGraph::distance(Element x, Element y) const {
  require_vertex(x);
  require_vertex(y);
  if (component_id_[x] != component_id_[y]) return std::nullopt;
  ElementSet src(parent_->order());
  src.insert(x);
  return distances_from(src)[y];
}

bool same_graph(const GroupGraph& a, const GroupGraph& b) {
  if (a.parent_ != b.parent_ || !(a.vertices_ == b.vertices_)) return false;
  bool same = true;
  a.vertices_.for_each([&](std::size_t x) {
    if (!(a.adjacency_[x] == b.adjacency_[x])) same = false;
  });
  return same;
}

GroupGraph build_graph(const ConcreteGroup& g, GraphKind kind, const NilTable& nil,
                       const SubgroupSet& hypercenter, const SubgroupSet& center) {
  const std::size_t n = g.order();
  ElementSet vertices = g.all();
  std::vector<ElementSet> adjacency(n);
  switch (kind) {
    case GraphKind::nilpotent_full:
      break;
    case GraphKind::nilpotent_reduced:
      vertices -= hypercenter.members();
      break;
    case GraphKind::commuting:
      vertices -= center.members();
      break;
  }
  if (kind == GraphKind::commuting) {
    for (Element x = 0; x < n; ++x) {
      adjacency[x] = ElementSet(n);
      if (!vertices.contains(x)) continue;
      for (Element y = 0; y < n; ++y)
        if (g.mul(x, y) == g.mul(y, x)) adjacency[x].insert(y);
    }
  } else {
    for (Element x = 0; x < n; ++x) adjacency[x] = nil[x];
  }
  return GroupGraph(g, kind, std::move(vertices), std::move(adjacency));
}

GroupGraph build_graph(const ConcreteGroup& g, GraphKind kind, unsigned jobs) {
  const SubgroupSet z = center(g);
  if (kind == GraphKind::commuting) {
    // Neighborhoods unused for the commuting graph.
    const std::size_t n = g.order();
    std::vector<ElementSet> adjacency(n, ElementSet(n));
    ElementSet vertices = g.all() - z.members();
    parallel_for(n, jobs, [&](std::size_t x) {
      if (!vertices.contains(x)) return;
      for (Element y = 0; y < n; ++y)
        if (g.mul(static_cast<Element>(x), y) == g.mul(y, static_cast<Element>(x))) adjacency[x].insert(y);
    });
    return GroupGraph(g, kind, std::move(vertices), std::move(adjacency));
  }
  const NilTable nil(g, jobs);
  return build_graph(g, kind, nil, hypercenter(g), z);
}

ElementSet universal_vertices(const GroupGraph& graph) {
  if (graph.kind() != GraphKind::nilpotent_full)
    throw ArgumentError("universal_vertices requires the full nilpotent graph");
  const ConcreteGroup& g = graph.parent();
  ElementSet out(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (graph.neighbors(x).size() + 1 == graph.vertex_count()) out.insert(x);
  return out;
}

std::optional<ExportFormat> parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  return std::nullopt;
}

std::string export_graph(const GroupGraph& graph, std::string_view format) {
  const auto f = parse_export_format(format);
  if (!f) throw ArgumentError("unknown export format '" + std::string(format) + "'");
  return export_graph(graph, *f);
}

std::string export_graph(const GroupGraph& graph, ExportFormat format) {
  const ConcreteGroup& g = graph.parent();
  std::vector<std::pair<Element, Element>> edges;
  graph.vertices().for_each([&](std::size_t x) {
    graph.neighbors(static_cast<Element>(x)).for_each([&](std::size_t y) {
      if (x < y) edges.emplace_back(static_cast<Element>(x), static_cast<Element>(y));
    });
  });

  if (format == ExportFormat::dot) {
    std::ostringstream os;
    os << "graph \"" << to_string(graph.kind()) << "\" {\n";
    graph.vertices().for_each([&](std::size_t x) {
      os << "  v" << x << " [label=\"" << x << " (o=" << g.ord(static_cast<Element>(x)) << ")\"];\n";
    });
    for (const auto& [x, y] : edges) os << "  v" << x << " -- v" << y << ";\n";
    os << "}\n";
    return os.str();
  }

  nlohmann::json j;
  j["kind"] = to_string(graph.kind());
  j["vertices"] = nlohmann::json::array();
  graph.vertices().for_each([&](std::size_t x) {
    j["vertices"].push_back({{"index", x}, {"order", g.ord(static_cast<Element>(x))}});
  });
  j["edges"] = nlohmann::json::array();
  for (const auto& [x, y] : edges) j["edges"].push_back({x, y});
  j["components"] = graph.components();
  j["diameters"] = graph.diameters();
  return j.dump(2) + "\n";
}

}  // namespace nilgraph
