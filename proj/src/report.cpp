#include <algorithm>
#include <sstream>

#include "nilgraph/parallel.hpp"
#include "nilgraph/verify.hpp"

namespace nilgraph {

using nlohmann::json;

CatalogRun run_catalog(const Catalog& catalog, unsigned jobs, const std::vector<std::string>& only) {
  BuildOptions options = default_build_options();
  options.order_cap = catalog.cap;
  CatalogRun run;
  run.reports.resize(catalog.entries.size());
  parallel_for(catalog.entries.size(), jobs,
               [&](std::size_t i) { run.reports[i] = analyze_spec(catalog.entries[i], options, 1); });

  for (ClassificationReport& r : run.reports) {
    if (!only.empty())
      std::erase_if(r.outcomes, [&](const auto& kv) {
        return std::find(only.begin(), only.end(), kv.first) == only.end();
      });
    if (r.error) {
      ++run.errors;
      continue;
    }
    for (const auto& [name, o] : r.outcomes) {
      auto& counts = run.summary[name];
      for (CheckStatus s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::not_applicable})
        counts.try_emplace(std::string(to_string(s)), 0);
      ++counts[std::string(to_string(o.status))];
      if (o.status == CheckStatus::fail) ++run.failures;
    }
    const auto it = r.graph_stats.find(std::string(to_string(GraphKind::nilpotent_reduced)));
    if (it != r.graph_stats.end() && !it->second.diameters.empty()) {
      const std::uint32_t d = it->second.diameters.back();
      if (!run.max_reduced_diameter || d > *run.max_reduced_diameter) {
        run.max_reduced_diameter = d;
        run.max_reduced_diameter_label = r.label;
      }
    }
  }
  return run;
}

json report_to_json(const ClassificationReport& r) {
  json j;
  j["spec"] = r.spec;
  j["label"] = r.label;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["order"] = r.order;
  j["center_order"] = r.center_order;
  j["hypercenter_order"] = r.hypercenter_order;
  j["fitting_order"] = r.fitting_order;
  j["primes"] = r.primes;
  j["flags"] = r.flags;
  json stats = json::object();
  for (const auto& [kind, s] : r.graph_stats)
    stats[kind] = {{"vertex_count", s.vertex_count},
                   {"edge_count", s.edge_count},
                   {"component_count", s.component_count},
                   {"diameters", s.diameters}};
  j["graph_stats"] = stats;
  json outcomes = json::object();
  for (const auto& [name, o] : r.outcomes)
    outcomes[name] = {{"status", to_string(o.status)}, {"detail", o.detail}};
  j["outcomes"] = outcomes;
  return j;
}

json run_to_json(const CatalogRun& run) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["entries"] = json::array();
  for (const auto& r : run.reports) j["entries"].push_back(report_to_json(r));
  j["summary"] = run.summary;
  j["failures"] = run.failures;
  j["errors"] = run.errors;
  j["zero_fail"] = run.failures == 0;
  j["max_reduced_diameter"] = run.max_reduced_diameter ? json(*run.max_reduced_diameter) : json(nullptr);
  j["max_reduced_diameter_label"] = run.max_reduced_diameter_label;
  return j;
}

std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << r.label << "\n";
  if (r.error) {
    os << "  error: " << *r.error << "\n";
    return os.str();
  }
  os << "  order " << r.order << ", |Z| " << r.center_order << ", |Z_inf| " << r.hypercenter_order
     << ", |Fit| " << r.fitting_order << ", primes";
  for (auto p : r.primes) os << " " << p;
  os << "\n  flags:";
  for (const auto& [name, v] : r.flags)
    if (v) os << " " << name;
  os << "\n";
  for (const auto& [kind, s] : r.graph_stats) {
    os << "  " << kind << ": " << s.vertex_count << " vertices, " << s.edge_count << " edges, "
       << s.component_count << " components, diameters";
    for (auto d : s.diameters) os << " " << d;
    os << "\n";
  }
  for (const auto& [name, o] : r.outcomes) {
    os << "  " << to_string(o.status) << "  " << name;
    if (!o.detail.empty()) os << ": " << o.detail;
    os << "\n";
  }
  return os.str();
}

std::string run_to_text(const CatalogRun& run) {
  std::ostringstream os;
  for (const auto& r : run.reports) {
    if (r.error) {
      os << r.label << ": error: " << *r.error << "\n";
      continue;
    }
    for (const auto& [name, o] : r.outcomes)
      if (o.status == CheckStatus::fail) os << r.label << ": FAIL " << name << ": " << o.detail << "\n";
  }
  os << "check                                              pass   fail    n/a\n";
  for (const auto& [name, counts] : run.summary) {
    os << name;
    for (std::size_t i = name.size(); i < 48; ++i) os << ' ';
    for (const char* k : {"pass", "fail", "not_applicable"}) {
      const auto it = counts.find(k);
      const std::string v = std::to_string(it == counts.end() ? 0 : it->second);
      os << std::string(v.size() < 7 ? 7 - v.size() : 1, ' ') << v;
    }
    os << "\n";
  }
  os << run.reports.size() << " entries, " << run.errors << " errors, " << run.failures << " failures";
  if (run.max_reduced_diameter)
    os << ", max reduced diameter " << *run.max_reduced_diameter << " (" << run.max_reduced_diameter_label << ")";
  os << "\n";
  return os.str();
}

}  // namespace nilgraph
