#include "nilgraph/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "nilgraph/error.hpp"

namespace nilgraph {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

namespace checks {

const std::vector<std::string>& all() {
  static const std::vector<std::string> names{
      kNilNeighborhoodClassification, kHypercenterQuotientComponents, kDisconnectedIffFrobenius,
      kCommutingEqualsIffAGroup,      kComponentDiameterBounds,       kNilPrimaryIntersection,
      kNGroupPrimePowerReduction,     kAGroupIffNilIsCentralizer,     kNGroupDirectProduct,
      kNGroupFrobeniusComplement,     kHypercenterQuotientAdjacency,  kFrobeniusDisconnected,
      kCommutingConnectivity,         kCommutingSubgraph,             kFittingComponentDistance,
      kPrimeIndexFittingBound,        kACGroupDisconnected,           kAGroupDiameterBound,
      kCyclicByAbelianBound,          kCyclicFittingBound,            kTwoPrimeBound,
      kFittingOracle,                 kFrobeniusOracle,               kUniversalVerticesHypercenter,
      kTwoFrobeniusPaths,             kHypercenterIffNilpotent,       kNilConjugationEquivariance,
      kFrobeniusKernelIsFitting,
  };
  return names;
}

std::optional<std::string> resolve(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> aliases{
      {"theoremA", kNilNeighborhoodClassification}, {"theoremB", kHypercenterQuotientComponents},
      {"theoremC", kDisconnectedIffFrobenius},      {"theoremD", kCommutingEqualsIffAGroup},
      {"theoremE", kComponentDiameterBounds},
  };
  if (auto it = aliases.find(name); it != aliases.end()) return it->second;
  for (const std::string& n : all())
    if (n == name) return n;
  return std::nullopt;
}

}  // namespace checks

namespace {

bool same_prime_set(std::uint64_t a, std::uint64_t b) { return prime_divisors(a) == prime_divisors(b); }

std::string fmt_set(const std::vector<std::uint32_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

std::string diam_str(const GroupGraph& g) {
  auto d = g.diameters();
  std::sort(d.begin(), d.end());
  return "diameters=" + fmt_set(d);
}

}  // namespace

GroupAnalysis::GroupAnalysis(const ConcreteGroup& g, unsigned jobs)
    : group(g),
      classes(conjugacy_classes(g)),
      center(nilgraph::center(g)),
      hypercenter(nilgraph::hypercenter(g)),
      fitting(nilgraph::fitting(g)),
      normal(normal_subgroups(g, classes)),
      nil(g, classes, jobs),
      nilpotent(is_nilpotent(g)),
      solvable(is_solvable(g)),
      full(build_graph(g, GraphKind::nilpotent_full, nil, hypercenter, center)),
      reduced(build_graph(g, GraphKind::nilpotent_reduced, nil, hypercenter, center)),
      commuting(build_graph(g, GraphKind::commuting, nil, hypercenter, center)),
      frobenius(is_frobenius(g, normal)),
      two_frobenius(is_2frobenius(g)),
      a_group(is_A_group(g)),
      ac_group(is_AC_group(g)),
      n_group(is_n_group(g, classes, nil)),
      nil_property(has_nilpotent_neighborhood_property(g, nil)) {
  if (!hypercenter.is_trivial() && !hypercenter.is_whole()) {
    quotient_ = std::make_unique<Quotient>(quotient(g, hypercenter));
    quotient_analysis_ = std::make_unique<GroupAnalysis>(quotient_->group, jobs);
  }
}

Outcome check_theorem_A(const GroupAnalysis& a) {
  if (a.group.order() == 1) return Outcome::not_applicable("trivial group");
  if (!a.solvable) return Outcome::not_applicable("not solvable");
  if (!a.center.is_trivial()) return Outcome::not_applicable("center nontrivial");
  const bool lhs = a.nil_property;
  const bool rhs = a.frobenius && is_nilpotent(a.frobenius->complement);
  if (lhs == rhs) return Outcome::pass(lhs ? "both sides true" : "both sides false");
  std::ostringstream os;
  os << "nilpotent-neighborhood property=" << lhs << ", Frobenius with nilpotent complement=" << rhs;
  if (a.frobenius) os << " (kernel " << a.frobenius->kernel.size() << ", complement " << a.frobenius->complement.size() << ")";
  return Outcome::fail(os.str());
}

Outcome check_theorem_B(const GroupAnalysis& a) {
  if (a.nilpotent) return Outcome::not_applicable("nilpotent: reduced graph is empty");
  const GroupAnalysis& q = a.modulo_hypercenter();
  const GroupGraph& gg = a.reduced;
  const GroupGraph& qg = q.reduced;
  if (gg.component_count() != qg.component_count())
    return Outcome::fail("component counts differ: " + std::to_string(gg.component_count()) + " vs " +
                         std::to_string(qg.component_count()));
  std::vector<bool> hit(qg.component_count(), false);
  for (std::size_t c = 0; c < gg.component_count(); ++c) {
    const auto& comp = gg.components()[c];
    const std::size_t target = qg.component_of(a.project(comp.front()));
    for (Element x : comp)
      if (qg.component_of(a.project(x)) != target)
        return Outcome::fail("component of element " + std::to_string(comp.front()) +
                             " splits in the quotient at element " + std::to_string(x));
    if (hit[target]) return Outcome::fail("two components map to quotient component " + std::to_string(target));
    hit[target] = true;
    const std::uint32_t dg = gg.diameters()[c];
    const std::uint32_t dq = qg.diameters()[target];
    const bool ok = dg > 1 ? dq == dg : (dg == 1 ? dq <= 1 : dq == 0);
    if (!ok)
      return Outcome::fail("component of element " + std::to_string(comp.front()) + " has diameter " +
                           std::to_string(dg) + " but its image has diameter " + std::to_string(dq));
  }
  return Outcome::pass("components=" + std::to_string(gg.component_count()) + ", " + diam_str(gg));
}

Outcome check_theorem_C(const GroupAnalysis& a) {
  if (a.nilpotent) return Outcome::not_applicable("nilpotent");
  if (!a.solvable) return Outcome::not_applicable("not solvable");
  const GroupAnalysis& q = a.modulo_hypercenter();
  const bool frob = q.frobenius.has_value() || q.two_frobenius.has_value();
  const bool disconnected = !a.reduced.is_connected();
  std::ostringstream os;
  os << "disconnected=" << disconnected << ", quotient Frobenius=" << q.frobenius.has_value()
     << ", quotient 2-Frobenius=" << q.two_frobenius.has_value();
  return disconnected == frob ? Outcome::pass(os.str()) : Outcome::fail(os.str());
}

Outcome check_theorem_D(const GroupAnalysis& a) {
  const bool equal = same_graph(a.reduced, a.commuting);
  std::ostringstream os;
  os << "graphs identical=" << equal << ", A-group=" << a.a_group;
  return equal == a.a_group ? Outcome::pass(os.str()) : Outcome::fail(os.str());
}

Outcome check_theorem_E(const GroupAnalysis& a) {
  if (a.nilpotent) return Outcome::not_applicable("nilpotent");
  const auto& d = a.reduced.diameters();
  for (std::size_t c = 0; c < d.size(); ++c)
    if (d[c] > 10)
      return Outcome::fail("component of element " + std::to_string(a.reduced.components()[c].front()) +
                           " has diameter " + std::to_string(d[c]) + " > 10");
  if (a.solvable) {
    if (a.reduced.is_connected()) {
      if (d[0] > 8) return Outcome::fail("connected solvable with diameter " + std::to_string(d[0]) + " > 8");
    } else {
      std::size_t large = 0;
      for (std::uint32_t x : d) {
        if (x > 5) return Outcome::fail("disconnected solvable with a component of diameter " + std::to_string(x));
        if (x > 2) ++large;
      }
      if (large > 1) return Outcome::fail(std::to_string(large) + " components exceed diameter 2");
    }
  }
  return Outcome::pass(diam_str(a.reduced));
}

OutcomeMap check_neighborhood_statements(
    const GroupAnalysis& a, const std::pair<const GroupAnalysis*, const GroupAnalysis*>* factors) {
  const ConcreteGroup& g = a.group;
  OutcomeMap out;

  {
    Outcome o = Outcome::pass("all " + std::to_string(g.order()) + " elements");
    for (Element x = 0; x < g.order() && o.status == CheckStatus::pass; ++x) {
      ElementSet meet = g.all();
      for (const auto& [p, xp] : primary_decomposition(g, x)) meet &= a.nil[xp];
      if (!(meet == a.nil[x])) o = Outcome::fail("element " + std::to_string(x));
    }
    out[checks::kNilPrimaryIntersection] = o;
  }

  {
    const bool all = is_n_group_all_elements(g, a.nil);
    std::ostringstream os;
    os << "prime-power reduction=" << a.n_group << ", all elements=" << all;
    out[checks::kNGroupPrimePowerReduction] = all == a.n_group ? Outcome::pass(os.str()) : Outcome::fail(os.str());
  }

  {
    std::optional<Element> mismatch;
    for (Element x = 0; x < g.order() && !mismatch; ++x) {
      if (!is_prime_power(g.ord(x))) continue;
      if (!(centralizer(g, x).members() == a.nil[x])) mismatch = x;
    }
    const bool nil_is_c = !mismatch;
    std::ostringstream os;
    os << "A-group=" << a.a_group << ", Nil=C on prime-power elements=" << nil_is_c;
    if (mismatch) os << " (first difference at element " << *mismatch << ")";
    out[checks::kAGroupIffNilIsCentralizer] = nil_is_c == a.a_group ? Outcome::pass(os.str()) : Outcome::fail(os.str());
  }

  if (factors == nullptr) {
    out[checks::kNGroupDirectProduct] = Outcome::not_applicable("not a direct product entry");
  } else {
    const GroupAnalysis& fa = *factors->first;
    const GroupAnalysis& fb = *factors->second;
    const std::size_t nb = fb.group.order();
    Outcome o = Outcome::pass();
    // Nil_{AxB}(ab) = Nil_A(a) x Nil_B(b) under the pair indexing i*|B| + j.
    for (Element x = 0; x < g.order() && o.status == CheckStatus::pass; ++x) {
      ElementSet expected(g.order());
      fa.nil[static_cast<Element>(x / nb)].for_each([&](std::size_t i) {
        fb.nil[static_cast<Element>(x % nb)].for_each([&](std::size_t j) { expected.insert(i * nb + j); });
      });
      if (!(expected == a.nil[x])) o = Outcome::fail("Nil of element " + std::to_string(x) + " is not the product of factor neighborhoods");
    }
    if (o.status == CheckStatus::pass) {
      std::ostringstream os;
      os << "factor n-groups=" << fa.n_group << "," << fb.n_group << ", product n-group=" << a.n_group;
      if (fa.n_group && fb.n_group && !a.n_group) o = Outcome::fail(os.str());
      else o = Outcome::pass(os.str());
    }
    out[checks::kNGroupDirectProduct] = o;
  }

  if (!a.frobenius) {
    out[checks::kNGroupFrobeniusComplement] = Outcome::not_applicable("not a Frobenius group");
  } else {
    const InducedGroup h = induced_group(a.frobenius->complement, "complement");
    if (!is_n_group(h.group)) {
      out[checks::kNGroupFrobeniusComplement] = Outcome::not_applicable("complement is not an n-group");
    } else {
      out[checks::kNGroupFrobeniusComplement] =
          a.n_group ? Outcome::pass("complement order " + std::to_string(h.group.order()))
                    : Outcome::fail("complement is an n-group but G is not");
    }
  }
  return out;
}

OutcomeMap check_connectivity_statements(const GroupAnalysis& a) {
  const ConcreteGroup& g = a.group;
  OutcomeMap out;

  if (a.nilpotent) {
    out[checks::kHypercenterQuotientAdjacency] = Outcome::not_applicable("nilpotent");
  } else if (a.hypercenter.is_trivial()) {
    out[checks::kHypercenterQuotientAdjacency] = Outcome::not_applicable("hypercenter trivial");
  } else {
    const GroupAnalysis& q = a.modulo_hypercenter();
    Outcome o = Outcome::pass();
    std::size_t pairs = 0;
    a.reduced.vertices().for_each([&](std::size_t x) {
      if (o.status != CheckStatus::pass) return;
      a.reduced.vertices().for_each([&](std::size_t y) {
        if (o.status != CheckStatus::pass || y <= x) return;
        const Element px = a.project(static_cast<Element>(x));
        const Element py = a.project(static_cast<Element>(y));
        if (px == py) return;
        ++pairs;
        if (a.reduced.adjacent(static_cast<Element>(x), static_cast<Element>(y)) != q.reduced.adjacent(px, py))
          o = Outcome::fail("pair (" + std::to_string(x) + ", " + std::to_string(y) + ")");
      });
    });
    if (o.status == CheckStatus::pass) o.detail = std::to_string(pairs) + " pairs";
    out[checks::kHypercenterQuotientAdjacency] = o;
  }

  if (a.frobenius) {
    const ElementSet kernel_vertices = a.frobenius->kernel.members() - SubgroupSet::trivial(g).members();
    bool exact = false;
    for (const auto& comp : a.reduced.components()) {
      ElementSet s(g.order());
      for (Element x : comp) s.insert(x);
      if (s == kernel_vertices) exact = true;
    }
    if (a.reduced.is_connected()) out[checks::kFrobeniusDisconnected] = Outcome::fail("Frobenius group with connected graph");
    else if (!exact) out[checks::kFrobeniusDisconnected] = Outcome::fail("kernel minus identity is not a component");
    else out[checks::kFrobeniusDisconnected] = Outcome::pass("Frobenius; kernel minus identity is a component");
  } else if (a.two_frobenius) {
    out[checks::kFrobeniusDisconnected] = a.reduced.is_connected()
                                             ? Outcome::fail("2-Frobenius group with connected graph")
                                             : Outcome::pass("2-Frobenius; disconnected");
  } else {
    out[checks::kFrobeniusDisconnected] = Outcome::not_applicable("neither Frobenius nor 2-Frobenius");
  }

  if (g.order() == 1) {
    out[checks::kCommutingConnectivity] = Outcome::not_applicable("trivial group");
  } else if (!a.center.is_trivial()) {
    out[checks::kCommutingConnectivity] = Outcome::not_applicable("center nontrivial");
  } else {
    const bool cg = a.reduced.is_connected();
    const bool cc = a.commuting.is_connected();
    std::ostringstream os;
    os << "connected=" << cg << ", commuting connected=" << cc;
    Outcome o = Outcome::pass();
    if (cg != cc) {
      o = Outcome::fail(os.str());
    } else if (cg) {
      const std::uint32_t k = *a.reduced.max_diameter();
      const std::uint32_t kc = *a.commuting.max_diameter();
      os << ", diameter=" << k << ", commuting diameter=" << kc;
      if (kc > 2 * k) o = Outcome::fail(os.str());
    }
    if (o.status == CheckStatus::pass && a.solvable) {
      const bool frob = a.frobenius.has_value() || a.two_frobenius.has_value();
      os << ", Frobenius or 2-Frobenius=" << frob;
      if (frob == cg) o = Outcome::fail(os.str());
    }
    if (o.status == CheckStatus::pass) o.detail = os.str();
    out[checks::kCommutingConnectivity] = o;
  }

  if (!(a.center == a.hypercenter)) {
    out[checks::kCommutingSubgraph] = Outcome::not_applicable("center differs from hypercenter");
  } else {
    Outcome o = Outcome::pass(std::to_string(a.commuting.edge_count()) + " of " +
                              std::to_string(a.reduced.edge_count()) + " edges");
    if (!(a.commuting.vertices() == a.reduced.vertices())) o = Outcome::fail("vertex sets differ");
    a.commuting.vertices().for_each([&](std::size_t x) {
      if (o.status == CheckStatus::pass &&
          !a.commuting.neighbors(static_cast<Element>(x)).is_subset_of(a.reduced.neighbors(static_cast<Element>(x))))
        o = Outcome::fail("commuting edge at element " + std::to_string(x) + " missing from the reduced graph");
    });
    out[checks::kCommutingSubgraph] = o;
  }
  return out;
}

OutcomeMap check_diameter_bounds(const GroupAnalysis& a) {
  const ConcreteGroup& g = a.group;
  OutcomeMap out;
  const GroupGraph& gr = a.reduced;
  const bool connected = gr.is_connected();
  const std::uint32_t diam = connected ? *gr.max_diameter() : 0;
  const std::string dstr = "diameter " + std::to_string(diam);
  auto bound = [&](std::uint32_t limit) {
    return diam <= limit ? Outcome::pass(dstr + " <= " + std::to_string(limit))
                         : Outcome::fail(dstr + " > " + std::to_string(limit));
  };

  // Fitting component and distance-2 reach.
  if (g.order() == 1) {
    out[checks::kFittingComponentDistance] = Outcome::not_applicable("trivial group");
  } else if (!a.solvable) {
    out[checks::kFittingComponentDistance] = Outcome::not_applicable("not solvable");
  } else if (!a.center.is_trivial()) {
    out[checks::kFittingComponentDistance] = Outcome::not_applicable("center nontrivial");
  } else {
    Outcome o = Outcome::pass();
    const ElementSet fit_vertices = a.fitting.members() - SubgroupSet::trivial(g).members();
    std::set<std::size_t> comps;
    fit_vertices.for_each([&](std::size_t x) { comps.insert(gr.component_of(static_cast<Element>(x))); });
    if (comps.size() != 1) o = Outcome::fail("Fit(G) minus identity spans " + std::to_string(comps.size()) + " components");
    const auto dist = gr.distances_from(fit_vertices);
    for (Element x = 1; x < g.order() && o.status == CheckStatus::pass; ++x) {
      if (std::gcd<std::size_t, std::size_t>(g.ord(x), a.fitting.size()) == 1) continue;
      if (!dist[x] || *dist[x] > 2) o = Outcome::fail("element " + std::to_string(x) + " is farther than 2 from Fit(G)");
    }
    if (o.status == CheckStatus::pass && same_prime_set(g.order(), a.fitting.size()) && connected) {
      o = bound(5);
    } else if (o.status == CheckStatus::pass) {
      o.detail = "Fit(G) reach within 2 verified";
    }
    out[checks::kFittingComponentDistance] = o;
  }

  const std::size_t index = g.order() / a.fitting.size();
  if (a.nilpotent) out[checks::kPrimeIndexFittingBound] = Outcome::not_applicable("nilpotent");
  else if (!is_prime(index)) out[checks::kPrimeIndexFittingBound] = Outcome::not_applicable("|G:Fit(G)| not prime");
  else if (!connected) out[checks::kPrimeIndexFittingBound] = Outcome::not_applicable("graph disconnected");
  else out[checks::kPrimeIndexFittingBound] = bound(3);

  if (!a.solvable) out[checks::kACGroupDisconnected] = Outcome::not_applicable("not solvable");
  else if (a.nilpotent) out[checks::kACGroupDisconnected] = Outcome::not_applicable("nilpotent");
  else if (!a.ac_group) out[checks::kACGroupDisconnected] = Outcome::not_applicable("not an AC-group");
  else out[checks::kACGroupDisconnected] = connected ? Outcome::fail("AC-group with connected graph")
                                                     : Outcome::pass("disconnected");

  if (!a.a_group) out[checks::kAGroupDiameterBound] = Outcome::not_applicable("not an A-group");
  else if (a.nilpotent) out[checks::kAGroupDiameterBound] = Outcome::not_applicable("nilpotent");
  else if (!connected) out[checks::kAGroupDiameterBound] = Outcome::not_applicable("graph disconnected");
  else out[checks::kAGroupDiameterBound] = bound(6);

  if (a.nilpotent) out[checks::kCyclicByAbelianBound] = Outcome::not_applicable("nilpotent");
  else if (!connected) out[checks::kCyclicByAbelianBound] = Outcome::not_applicable("graph disconnected");
  else if (!(a.center == a.hypercenter)) out[checks::kCyclicByAbelianBound] = Outcome::not_applicable("center differs from hypercenter");
  else if (auto f = find_cyclic_by_abelian(g, a.normal); !f)
    out[checks::kCyclicByAbelianBound] = Outcome::not_applicable("no cyclic-by-abelian factorization");
  else {
    Outcome o = bound(4);
    o.detail += " (N order " + std::to_string(f->first.size()) + ", A order " + std::to_string(f->second.size()) + ")";
    out[checks::kCyclicByAbelianBound] = o;
  }

  if (!a.solvable) out[checks::kCyclicFittingBound] = Outcome::not_applicable("not solvable");
  else if (g.order() == 1 || !a.center.is_trivial()) out[checks::kCyclicFittingBound] = Outcome::not_applicable("center nontrivial or trivial group");
  else if (!connected) out[checks::kCyclicFittingBound] = Outcome::not_applicable("graph disconnected");
  else if (!is_cyclic(a.fitting)) out[checks::kCyclicFittingBound] = Outcome::not_applicable("Fit(G) not cyclic");
  else out[checks::kCyclicFittingBound] = bound(5);

  if (a.nilpotent) out[checks::kTwoPrimeBound] = Outcome::not_applicable("nilpotent");
  else if (pi(g).size() != 2) out[checks::kTwoPrimeBound] = Outcome::not_applicable("not a {p,q}-group");
  else if (!a.center.is_trivial()) out[checks::kTwoPrimeBound] = Outcome::not_applicable("center nontrivial");
  else if (!connected) out[checks::kTwoPrimeBound] = Outcome::not_applicable("graph disconnected");
  else out[checks::kTwoPrimeBound] = bound(6);
  return out;
}

OutcomeMap check_oracles(const GroupAnalysis& a) {
  const ConcreteGroup& g = a.group;
  OutcomeMap out;

  {
    const SubgroupSet alt = oracle::fitting_by_normal_closures(g);
    out[checks::kFittingOracle] = alt == a.fitting
                                      ? Outcome::pass("order " + std::to_string(a.fitting.size()))
                                      : Outcome::fail("Sylow route order " + std::to_string(a.fitting.size()) +
                                                      ", normal-closure route order " + std::to_string(alt.size()));
  }

  if (g.order() > kFrobeniusOracleLimit) {
    out[checks::kFrobeniusOracle] = Outcome::not_applicable("order above " + std::to_string(kFrobeniusOracleLimit));
  } else {
    const auto m = oracle::malnormal_subgroup(g);
    std::ostringstream os;
    os << "kernel criterion=" << a.frobenius.has_value() << ", malnormal subgroup=" << m.has_value();
    out[checks::kFrobeniusOracle] = m.has_value() == a.frobenius.has_value() ? Outcome::pass(os.str()) : Outcome::fail(os.str());
  }

  {
    const ElementSet u = universal_vertices(a.full);
    out[checks::kUniversalVerticesHypercenter] =
        u == a.hypercenter.members() ? Outcome::pass("order " + std::to_string(a.hypercenter.size()))
                                     : Outcome::fail(std::to_string(u.size()) + " universal vertices vs hypercenter of order " +
                                                     std::to_string(a.hypercenter.size()));
  }

  {
    const bool scan = is_2frobenius_by_scan(g, a.normal).has_value();
    std::ostringstream os;
    os << "Fitting-chain path=" << a.two_frobenius.has_value() << ", normal-pair scan=" << scan;
    out[checks::kTwoFrobeniusPaths] = scan == a.two_frobenius.has_value() ? Outcome::pass(os.str()) : Outcome::fail(os.str());
  }

  {
    const bool whole = a.hypercenter.is_whole();
    std::ostringstream os;
    os << "hypercenter is G=" << whole << ", lower central series reaches 1=" << a.nilpotent;
    out[checks::kHypercenterIffNilpotent] = whole == a.nilpotent ? Outcome::pass(os.str()) : Outcome::fail(os.str());
  }

  {
    Outcome o = Outcome::pass();
    std::size_t tested = 0;
    for (const auto& cls : a.classes.classes) {
      if (cls.size() < 2) continue;
      const Element rep = cls[0];
      const Element x = cls.back();
      const Element c = a.classes.conjugator[x];
      const ElementSet direct_rep = nil_neighborhood(g, rep);
      const ElementSet direct_x = nil_neighborhood(g, x);
      ElementSet moved(g.order());
      direct_rep.for_each([&](std::size_t y) { moved.insert(g.conjugate(static_cast<Element>(y), c)); });
      ++tested;
      if (!(moved == direct_x) || !(direct_x == a.nil[x])) {
        o = Outcome::fail("element " + std::to_string(x));
        break;
      }
    }
    if (o.status == CheckStatus::pass) o.detail = std::to_string(tested) + " classes";
    out[checks::kNilConjugationEquivariance] = o;
  }

  if (!a.frobenius) out[checks::kFrobeniusKernelIsFitting] = Outcome::not_applicable("not a Frobenius group");
  else if (!a.solvable) out[checks::kFrobeniusKernelIsFitting] = Outcome::not_applicable("not solvable");
  else out[checks::kFrobeniusKernelIsFitting] = a.frobenius->kernel == a.fitting
                                                    ? Outcome::pass("order " + std::to_string(a.fitting.size()))
                                                    : Outcome::fail("kernel order " + std::to_string(a.frobenius->kernel.size()) +
                                                                    ", Fit(G) order " + std::to_string(a.fitting.size()));
  return out;
}

namespace {

GraphStats stats_of(const GroupGraph& g) {
  GraphStats s;
  s.vertex_count = g.vertex_count();
  s.edge_count = g.edge_count();
  s.component_count = g.component_count();
  s.diameters = g.diameters();
  std::sort(s.diameters.begin(), s.diameters.end());
  return s;
}

}  // namespace

ClassificationReport classify_group(const GroupSpec& spec, const GroupAnalysis& a,
                                    const std::pair<const GroupAnalysis*, const GroupAnalysis*>* factors) {
  const ConcreteGroup& g = a.group;
  ClassificationReport r;
  r.spec = spec;
  r.label = spec.display_name();
  r.order = g.order();
  r.center_order = a.center.size();
  r.hypercenter_order = a.hypercenter.size();
  r.fitting_order = a.fitting.size();
  r.primes = pi(g);
  r.flags = {{"nilpotent", a.nilpotent},
             {"solvable", a.solvable},
             {"centerless", a.center.is_trivial()},
             {"A_group", a.a_group},
             {"AC_group", a.ac_group},
             {"n_group", a.n_group},
             {"frobenius", a.frobenius.has_value()},
             {"two_frobenius", a.two_frobenius.has_value()},
             {"nil_nbhd_property", a.nil_property}};
  r.graph_stats = {{std::string(to_string(GraphKind::nilpotent_full)), stats_of(a.full)},
                   {std::string(to_string(GraphKind::nilpotent_reduced)), stats_of(a.reduced)},
                   {std::string(to_string(GraphKind::commuting)), stats_of(a.commuting)}};

  r.outcomes[checks::kNilNeighborhoodClassification] = check_theorem_A(a);
  r.outcomes[checks::kHypercenterQuotientComponents] = check_theorem_B(a);
  r.outcomes[checks::kDisconnectedIffFrobenius] = check_theorem_C(a);
  r.outcomes[checks::kCommutingEqualsIffAGroup] = check_theorem_D(a);
  r.outcomes[checks::kComponentDiameterBounds] = check_theorem_E(a);
  r.outcomes.merge(check_neighborhood_statements(a, factors));
  r.outcomes.merge(check_connectivity_statements(a));
  r.outcomes.merge(check_diameter_bounds(a));
  r.outcomes.merge(check_oracles(a));
  return r;
}

ClassificationReport analyze_spec(const GroupSpec& spec, const BuildOptions& options, unsigned jobs) {
  try {
    const ConcreteGroup g = build_group(spec, options);
    const GroupAnalysis a(g, jobs);
    if (spec.constructor == "direct_product") {
      const ConcreteGroup left = build_group(spec.params.at("left").get<GroupSpec>(), options);
      const ConcreteGroup right = build_group(spec.params.at("right").get<GroupSpec>(), options);
      const GroupAnalysis la(left, jobs);
      const GroupAnalysis ra(right, jobs);
      const std::pair<const GroupAnalysis*, const GroupAnalysis*> f{&la, &ra};
      return classify_group(spec, a, &f);
    }
    return classify_group(spec, a, nullptr);
  } catch (const Error& e) {
    ClassificationReport r;
    r.spec = spec;
    r.label = spec.display_name();
    r.error = e.what();
    return r;
  } catch (const nlohmann::json::exception& e) {
    ClassificationReport r;
    r.spec = spec;
    r.label = spec.display_name();
    r.error = std::string("malformed spec: ") + e.what();
    return r;
  }
}

}  // namespace nilgraph
