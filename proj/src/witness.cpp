#include "nilgraph/verify.hpp"

#include <numeric>
#include <set>
#include <tuple>

#include "nilgraph/error.hpp"

namespace nilgraph {

namespace {

struct Involution {
  GroupSpec normal;
  Permutation phi;
  std::size_t fixed = 0;
  std::size_t inverted = 0;
};

std::vector<Involution> involutions() {
  BuildOptions options;
  options.order_cap = 27;
  std::vector<Involution> out;
  for (const GroupSpec& n : order27_groups()) {
    const ConcreteGroup g = build_group(n, options);
    for (Permutation& phi : automorphisms_of_order(g, 2)) {
      Involution inv{n, std::move(phi)};
      for (Element x = 1; x < g.order(); ++x) {
        if (inv.phi[x] == x) ++inv.fixed;
        if (inv.phi[x] == g.inv(x)) ++inv.inverted;
      }
      out.push_back(std::move(inv));
    }
  }
  return out;
}

GroupSpec candidate_spec(const Involution& inv, std::size_t index) {
  Permutation id(inv.phi.size());
  std::iota(id.begin(), id.end(), 0U);
  GroupSpec s = GroupSpec::semidirect_table(inv.normal, GroupSpec::cyclic(2), {id, inv.phi});
  s.label = inv.normal.display_name() + ":C2#" + std::to_string(index);
  return s;
}

}  // namespace

WitnessSearch search_order54_witness(bool exhaustive) {
  WitnessSearch out;
  std::size_t index = 0;
  for (const Involution& inv : involutions()) {
    WitnessCandidate c;
    c.spec = candidate_spec(inv, index++);
    c.normal_label = inv.normal.display_name();
    c.fixed_point_free = inv.fixed == 0;
    if (!c.fixed_point_free) {
      BuildOptions cap54;
      cap54.order_cap = 54;
      const ConcreteGroup g = build_group(c.spec, cap54);
      c.fitting_order = fitting(g).size();
      const GroupGraph gr = build_graph(g, GraphKind::nilpotent_reduced);
      c.connected = gr.is_connected();
      c.diameter = gr.max_diameter();
    }
    const bool hit = !c.fixed_point_free && c.fitting_order == 27 && c.connected && c.diameter == 3U;
    out.candidates.push_back(c);
    if (hit && !out.winner) {
      out.winner = c.spec;
      if (!exhaustive) break;
    }
  }
  return out;
}

GroupSpec find_order54_witness() {
  WitnessSearch s = search_order54_witness(false);
  if (!s.winner) throw Error("order-54 witness search exhausted without a match");
  return *s.winner;
}

std::vector<GroupSpec> order54_family() {
  // Fixed-point-free actions stay in the family as Frobenius test cases.
  // One candidate per (normal group, fixed-point count, inverted count).
  std::set<std::tuple<std::string, std::size_t, std::size_t>> seen;
  std::vector<GroupSpec> out;
  std::size_t index = 0;
  for (const Involution& inv : involutions()) {
    const std::size_t i = index++;
    if (!seen.emplace(inv.normal.display_name(), inv.fixed, inv.inverted).second) continue;
    out.push_back(candidate_spec(inv, i));
  }
  return out;
}

}  // namespace nilgraph
