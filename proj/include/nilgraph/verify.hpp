#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilgraph/classify.hpp"
#include "nilgraph/graphs.hpp"
#include "nilgraph/group.hpp"
#include "nilgraph/group_spec.hpp"
#include "nilgraph/structure.hpp"

namespace nilgraph {

enum class CheckStatus { pass, fail, not_applicable };

std::string_view to_string(CheckStatus status);

/// Result of one statement checked on one group. `detail` carries the
/// violated hypothesis for not_applicable and a concrete witness for fail.
struct Outcome {
  CheckStatus status;
  std::string detail;

  static Outcome pass(std::string detail = {}) { return {CheckStatus::pass, std::move(detail)}; }
  static Outcome fail(std::string witness) { return {CheckStatus::fail, std::move(witness)}; }
  static Outcome not_applicable(std::string reason) {
    return {CheckStatus::not_applicable, std::move(reason)};
  }
};

using OutcomeMap = std::map<std::string, Outcome>;

/// Everything the checks need about one group, computed once.
///
/// Holds references into `group`, which must outlive the analysis. The
/// analysis of G/Z_inf(G) is attached when the hypercenter is nontrivial.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(const ConcreteGroup& g, unsigned jobs = 1);
  GroupAnalysis(const GroupAnalysis&) = delete;
  GroupAnalysis& operator=(const GroupAnalysis&) = delete;

  const ConcreteGroup& group;
  ConjugacyClasses classes;
  SubgroupSet center;
  SubgroupSet hypercenter;
  SubgroupSet fitting;
  std::vector<SubgroupSet> normal;
  NilTable nil;
  bool nilpotent;
  bool solvable;
  GroupGraph full;
  GroupGraph reduced;
  GroupGraph commuting;
  std::optional<FrobeniusWitness> frobenius;
  std::optional<TwoFrobeniusWitness> two_frobenius;
  bool a_group;
  bool ac_group;
  bool n_group;
  bool nil_property;

  /// Analysis of G/Z_inf(G); *this when the hypercenter is trivial.
  const GroupAnalysis& modulo_hypercenter() const { return quotient_analysis_ ? *quotient_analysis_ : *this; }
  /// Coset of x in G/Z_inf(G).
  Element project(Element x) const { return quotient_ ? quotient_->projection[x] : x; }

 private:
  std::unique_ptr<Quotient> quotient_;
  std::unique_ptr<GroupAnalysis> quotient_analysis_;
};

// Stable check identifiers.
namespace checks {
inline constexpr const char* kNilNeighborhoodClassification = "nilpotent_neighborhoods_iff_frobenius";
inline constexpr const char* kHypercenterQuotientComponents = "hypercenter_quotient_components";
inline constexpr const char* kDisconnectedIffFrobenius = "disconnected_iff_frobenius_quotient";
inline constexpr const char* kCommutingEqualsIffAGroup = "graph_equals_commuting_iff_a_group";
inline constexpr const char* kComponentDiameterBounds = "component_diameter_bounds";
inline constexpr const char* kNilPrimaryIntersection = "nil_primary_intersection";
inline constexpr const char* kNGroupPrimePowerReduction = "n_group_prime_power_reduction";
inline constexpr const char* kAGroupIffNilIsCentralizer = "a_group_iff_nil_is_centralizer";
inline constexpr const char* kNGroupDirectProduct = "n_group_direct_product";
inline constexpr const char* kNGroupFrobeniusComplement = "n_group_frobenius_complement";
inline constexpr const char* kHypercenterQuotientAdjacency = "hypercenter_quotient_adjacency";
inline constexpr const char* kFrobeniusDisconnected = "frobenius_disconnected";
inline constexpr const char* kCommutingConnectivity = "commuting_graph_connectivity";
inline constexpr const char* kFittingComponentDistance = "fitting_component_distance";
inline constexpr const char* kPrimeIndexFittingBound = "prime_index_fitting_bound";
inline constexpr const char* kACGroupDisconnected = "ac_group_disconnected";
inline constexpr const char* kAGroupDiameterBound = "a_group_diameter_bound";
inline constexpr const char* kCyclicByAbelianBound = "cyclic_by_abelian_bound";
inline constexpr const char* kCyclicFittingBound = "cyclic_fitting_bound";
inline constexpr const char* kTwoPrimeBound = "two_prime_bound";
inline constexpr const char* kFittingOracle = "fitting_oracle";
inline constexpr const char* kFrobeniusOracle = "frobenius_oracle";
inline constexpr const char* kUniversalVerticesHypercenter = "universal_vertices_hypercenter";
inline constexpr const char* kTwoFrobeniusPaths = "two_frobenius_paths";
inline constexpr const char* kHypercenterIffNilpotent = "hypercenter_iff_nilpotent";
inline constexpr const char* kNilConjugationEquivariance = "nil_conjugation_equivariance";
inline constexpr const char* kCommutingSubgraph = "commuting_subgraph_when_center_is_hypercenter";
inline constexpr const char* kFrobeniusKernelIsFitting = "frobenius_kernel_is_fitting";

/// Every check name, in report order.
const std::vector<std::string>& all();
/// Resolves a user-supplied name; accepts the full name or the theorem
/// letters theoremA..theoremE. Returns nullopt for unknown names.
std::optional<std::string> resolve(std::string_view name);
}  // namespace checks

/// Frobenius order limit for the malnormal-subgroup oracle.
inline constexpr std::size_t kFrobeniusOracleLimit = 60;

Outcome check_theorem_A(const GroupAnalysis& a);
Outcome check_theorem_B(const GroupAnalysis& a);
Outcome check_theorem_C(const GroupAnalysis& a);
Outcome check_theorem_D(const GroupAnalysis& a);
Outcome check_theorem_E(const GroupAnalysis& a);

/// Statements about nilpotent neighborhoods. `factors`, when present, are the
/// analyses of the two factors of a direct product and enable the product check.
OutcomeMap check_neighborhood_statements(
    const GroupAnalysis& a,
    const std::pair<const GroupAnalysis*, const GroupAnalysis*>* factors = nullptr);

/// Connectivity statements relating G, G/Z_inf(G) and the commuting graph.
OutcomeMap check_connectivity_statements(const GroupAnalysis& a);

/// Diameter bounds under structural hypotheses.
OutcomeMap check_diameter_bounds(const GroupAnalysis& a);

/// Independent-oracle agreements.
OutcomeMap check_oracles(const GroupAnalysis& a);

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
  /// Sorted ascending.
  std::vector<std::uint32_t> diameters;
};

struct ClassificationReport {
  GroupSpec spec;
  std::string label;
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::size_t hypercenter_order = 0;
  std::size_t fitting_order = 0;
  std::vector<std::uint32_t> primes;
  std::map<std::string, bool> flags;
  std::map<std::string, GraphStats> graph_stats;
  OutcomeMap outcomes;
  /// Set when the entry could not be built; all other fields are then empty.
  std::optional<std::string> error;
};

/// Builds and analyzes one spec, running every check.
ClassificationReport analyze_spec(const GroupSpec& spec, const BuildOptions& options, unsigned jobs = 1);
/// Analysis of an already-built group; `factors` as for check_neighborhood_statements.
ClassificationReport classify_group(const GroupSpec& spec, const GroupAnalysis& a,
                                    const std::pair<const GroupAnalysis*, const GroupAnalysis*>* factors);

struct Catalog {
  std::vector<GroupSpec> entries;
  std::size_t cap = 100;
};

/// Every builder-reachable group up to the cap (see README for the families).
Catalog default_catalog(std::size_t cap = 100);
/// JSON list of group specs.
Catalog parse_catalog(const std::string& text, std::size_t cap);

struct CatalogRun {
  std::vector<ClassificationReport> reports;
  std::map<std::string, std::map<std::string, std::size_t>> summary;
  std::size_t failures = 0;
  std::size_t errors = 0;
  std::optional<std::uint32_t> max_reduced_diameter;
  std::string max_reduced_diameter_label;
};

/// Processes entries on up to `jobs` threads; reports keep catalog order.
/// `only`, when non-empty, restricts emitted outcomes to those check names.
CatalogRun run_catalog(const Catalog& catalog, unsigned jobs = 1,
                       const std::vector<std::string>& only = {});

struct WitnessCandidate {
  GroupSpec spec;
  std::string normal_label;
  bool fixed_point_free = false;
  std::size_t fitting_order = 0;
  bool connected = false;
  std::optional<std::uint32_t> diameter;
};

struct WitnessSearch {
  std::optional<GroupSpec> winner;
  std::vector<WitnessCandidate> candidates;
};

/// Searches (order-27 group) x| C2 over every involutory automorphism for a
/// group whose Fitting subgroup has order 27 and whose reduced graph is
/// connected of diameter 3. Stops at the first hit unless `exhaustive`.
WitnessSearch search_order54_witness(bool exhaustive = false);
/// Throws Error when the search is exhausted without a witness.
GroupSpec find_order54_witness();
/// Candidates of the search, one per (order-27 group, fixed-point count,
/// inverted-element count) of the involution.
std::vector<GroupSpec> order54_family();

/// The five groups of order 27.
std::vector<GroupSpec> order27_groups();
/// SL(2,3) as Q8 x| C3.
GroupSpec sl23_spec();

nlohmann::json report_to_json(const ClassificationReport& r);
nlohmann::json run_to_json(const CatalogRun& run);
std::string report_to_text(const ClassificationReport& r);
std::string run_to_text(const CatalogRun& run);

inline constexpr int kReportSchemaVersion = 1;

}  // namespace nilgraph
