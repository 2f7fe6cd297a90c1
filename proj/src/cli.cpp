#include "nilgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "nilgraph/error.hpp"
#include "nilgraph/parallel.hpp"
#include "nilgraph/verify.hpp"

namespace nilgraph {

namespace {

struct Config {
  std::string spec;
  std::string catalog;
  std::string kind = "reduced";
  std::string format = "json";
  std::string output;
  std::size_t order_cap = 0;
  std::string jobs = "1";
  std::vector<std::string> checks;
  bool list_candidates = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupSpec load_spec(const std::string& source) {
  if (source.empty()) throw ArgumentError("--spec is required");
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return parse_group_spec(source);
  return parse_group_spec(read_file(source));
}

unsigned parse_jobs(const std::string& s) {
  if (s == "auto") return resolve_jobs(0);
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size() && v > 0) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw ArgumentError("--jobs must be a positive integer or 'auto'");
}

BuildOptions options_for(const Config& c) {
  BuildOptions o = default_build_options();
  if (c.order_cap != 0) o.order_cap = c.order_cap;
  return o;
}

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw ArgumentError("cannot write '" + c.output + "'");
  f << text;
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.format == a) return;
  throw ArgumentError("format '" + c.format + "' is not valid for this command");
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_build(const Config& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  const GroupSpec spec = load_spec(c.spec);
  const ConcreteGroup g = build_group(spec, options_for(c));
  std::vector<std::uint32_t> orders(g.order());
  for (Element x = 0; x < g.order(); ++x) orders[x] = g.ord(x);
  if (c.format == "text") {
    std::ostringstream os;
    os << g.label() << ": order " << g.order() << ", " << g.generators().size() << " generators\n";
    emit(c, os.str(), out);
  } else {
    nlohmann::json j{{"spec", spec},
                     {"label", g.label()},
                     {"order", g.order()},
                     {"generators", g.generators()},
                     {"element_orders", orders}};
    emit(c, dump(j), out);
  }
  return kExitOk;
}

int report_exit(const ClassificationReport& r) {
  for (const auto& [name, o] : r.outcomes)
    if (o.status == CheckStatus::fail) return kExitVerificationFailure;
  return kExitOk;
}

int cmd_analyze(const Config& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"json", "text"});
  const GroupSpec spec = load_spec(c.spec);
  const ClassificationReport r = analyze_spec(spec, options_for(c), parse_jobs(c.jobs));
  if (r.error) {
    err << "error: " << *r.error << "\n";
    return kExitUsage;
  }
  emit(c, c.format == "text" ? report_to_text(r) : dump(report_to_json(r)), out);
  return report_exit(r);
}

int cmd_graph(const Config& c, std::ostream& out) {
  require_format(c, {"json", "dot"});
  const auto kind = parse_graph_kind(c.kind);
  if (!kind) throw ArgumentError("unknown graph kind '" + c.kind + "'");
  const ConcreteGroup g = build_group(load_spec(c.spec), options_for(c));
  const GroupGraph graph = build_graph(g, *kind, parse_jobs(c.jobs));
  emit(c, export_graph(graph, c.format), out);
  return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"json", "text"});
  std::vector<std::string> only;
  for (const std::string& name : c.checks) {
    const auto resolved = checks::resolve(name);
    if (!resolved) throw ArgumentError("unknown check '" + name + "'");
    only.push_back(*resolved);
  }
  const std::size_t cap = options_for(c).order_cap;
  const Catalog catalog = c.catalog.empty() ? default_catalog(std::min<std::size_t>(100, cap))
                                            : parse_catalog(read_file(c.catalog), cap);
  const CatalogRun run = run_catalog(catalog, parse_jobs(c.jobs), only);
  emit(c, c.format == "text" ? run_to_text(run) : dump(run_to_json(run)), out);
  err << run.reports.size() << " entries, " << run.errors << " errors, " << run.failures << " failures\n";
  return run.failures == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_witness54(const Config& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"json", "text"});
  const BuildOptions options = options_for(c);
  if (options.order_cap < 54) throw ArgumentError("order cap " + std::to_string(options.order_cap) + " is below 54");
  const WitnessSearch search = search_order54_witness(false);
  std::optional<ClassificationReport> report;
  if (search.winner) report = analyze_spec(*search.winner, options, parse_jobs(c.jobs));

  if (c.format == "text") {
    std::ostringstream os;
    if (c.list_candidates)
      for (const auto& k : search.candidates) {
        os << k.spec.display_name() << ": ";
        if (k.fixed_point_free) {
          os << "fixed-point-free, rejected\n";
          continue;
        }
        os << "|Fit| " << k.fitting_order << ", " << (k.connected ? "connected" : "disconnected");
        if (k.diameter) os << ", max diameter " << *k.diameter;
        os << "\n";
      }
    if (report) os << report_to_text(*report);
    emit(c, os.str(), out);
  } else {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["witness"] = search.winner ? nlohmann::json(*search.winner) : nlohmann::json(nullptr);
    if (report) j["report"] = report_to_json(*report);
    if (c.list_candidates) {
      j["candidates"] = nlohmann::json::array();
      for (const auto& k : search.candidates)
        j["candidates"].push_back({{"spec", k.spec},
                                   {"normal", k.normal_label},
                                   {"fixed_point_free", k.fixed_point_free},
                                   {"fitting_order", k.fitting_order},
                                   {"connected", k.connected},
                                   {"diameter", k.diameter ? nlohmann::json(*k.diameter) : nlohmann::json(nullptr)}});
    }
    emit(c, dump(j), out);
  }
  if (!search.winner) {
    err << "error: order-54 witness search exhausted without a match\n";
    return kExitVerificationFailure;
  }
  return report_exit(*report);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent and commuting graphs of finite groups", "nilgraph"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", c.output, "Write to this file instead of standard output");
    sub->add_option("--format", c.format, "json | text | dot");
    sub->add_option("--order-cap", c.order_cap, "Largest group order to construct")->check(CLI::PositiveNumber);
    sub->add_option("--jobs,-j", c.jobs, "Worker threads, or 'auto'");
  };
  CLI::App* build = app.add_subcommand("build", "Construct a group and print its basic data");
  build->add_option("--spec", c.spec, "Group spec: inline JSON or a file path")->required();
  common(build);
  CLI::App* analyze = app.add_subcommand("analyze", "Full classification report for one group");
  analyze->add_option("--spec", c.spec, "Group spec: inline JSON or a file path")->required();
  common(analyze);
  CLI::App* graph = app.add_subcommand("graph", "Export a graph as DOT or JSON");
  graph->add_option("--spec", c.spec, "Group spec: inline JSON or a file path")->required();
  graph->add_option("--kind", c.kind, "nilpotent | reduced | commuting");
  common(graph);
  CLI::App* verify = app.add_subcommand("verify", "Run every check over a catalog");
  verify->add_option("--catalog", c.catalog, "JSON list of group specs (default: built-in catalog)");
  verify->add_option("--check", c.checks, "Restrict output to these checks (repeatable)");
  common(verify);
  CLI::App* witness = app.add_subcommand("witness54", "Search for the order-54 diameter-3 group");
  witness->add_flag("--list-candidates", c.list_candidates, "Include every examined candidate");
  common(witness);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return cmd_build(c, out);
    if (*analyze) return cmd_analyze(c, out, err);
    if (*graph) return cmd_graph(c, out);
    if (*verify) return cmd_verify(c, out, err);
    if (*witness) return cmd_witness54(c, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nilgraph
