#include "nilgraph/group_spec.hpp"

#include <cmath>

#include "nilgraph/error.hpp"

namespace nilgraph {

using nlohmann::json;

GroupSpec GroupSpec::cyclic(std::size_t n) { return {"cyclic", {{"n", n}}, "C" + std::to_string(n)}; }

GroupSpec GroupSpec::dihedral(std::size_t n) {
  return {"dihedral", {{"n", n}}, "D" + std::to_string(2 * n)};
}

GroupSpec GroupSpec::quaternion(std::size_t order) {
  return {"quaternion", {{"order", order}}, order == 8 ? "Q8" : "Dic" + std::to_string(order)};
}

GroupSpec GroupSpec::symmetric(std::size_t degree) {
  return {"symmetric", {{"degree", degree}}, "S" + std::to_string(degree)};
}

GroupSpec GroupSpec::alternating(std::size_t degree) {
  return {"alternating", {{"degree", degree}}, "A" + std::to_string(degree)};
}

GroupSpec GroupSpec::semidirect_cyclic(std::size_t n, std::size_t m, std::int64_t e) {
  return {"semidirect_cyclic",
          {{"n", n}, {"m", m}, {"e", e}},
          "C" + std::to_string(n) + ":C" + std::to_string(m) + "[e=" + std::to_string(e) + "]"};
}

GroupSpec GroupSpec::product(const GroupSpec& left, const GroupSpec& right) {
  return {"direct_product", {{"left", left}, {"right", right}},
          left.display_name() + "x" + right.display_name()};
}

GroupSpec GroupSpec::semidirect_table(const GroupSpec& normal, const GroupSpec& acting,
                                      const std::vector<Permutation>& action) {
  return {"semidirect_table",
          {{"normal", normal}, {"acting", acting}, {"action", action}},
          normal.display_name() + ":" + acting.display_name()};
}

GroupSpec GroupSpec::from_permutations(std::size_t degree, const std::vector<Permutation>& gens) {
  return {"from_permutations", {{"degree", degree}, {"generators", gens}}, ""};
}

std::string GroupSpec::display_name() const {
  if (!label.empty()) return label;
  return constructor + params.dump();
}

void to_json(json& j, const GroupSpec& spec) {
  j = json{{"constructor", spec.constructor}, {"params", spec.params}};
  if (!spec.label.empty()) j["label"] = spec.label;
}

void from_json(const json& j, GroupSpec& spec) {
  if (!j.is_object()) throw SpecError("group spec must be a JSON object");
  if (!j.contains("constructor") || !j["constructor"].is_string())
    throw SpecError("group spec needs a string \"constructor\"");
  spec.constructor = j["constructor"].get<std::string>();
  spec.params = j.value("params", json::object());
  if (!spec.params.is_object()) throw SpecError("group spec \"params\" must be an object");
  spec.label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
}

GroupSpec parse_group_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
  return j.get<GroupSpec>();
}

namespace {

std::uint64_t get_uint(const json& params, const char* key) {
  if (!params.contains(key)) throw SpecError(std::string("missing parameter \"") + key + "\"");
  const json& v = params[key];
  if (!v.is_number_integer()) throw SpecError(std::string("parameter \"") + key + "\" must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0) throw SpecError(std::string("parameter \"") + key + "\" must be non-negative");
  return static_cast<std::uint64_t>(x);
}

std::vector<Permutation> get_perms(const json& v, const char* key) {
  if (!v.is_array()) throw SpecError(std::string("parameter \"") + key + "\" must be an array of arrays");
  std::vector<Permutation> out;
  for (const json& p : v) {
    if (!p.is_array()) throw SpecError(std::string("parameter \"") + key + "\" must be an array of arrays");
    Permutation perm;
    for (const json& x : p) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
        throw SpecError(std::string("parameter \"") + key + "\" entries must be non-negative integers");
      perm.push_back(x.get<std::uint32_t>());
    }
    out.push_back(std::move(perm));
  }
  return out;
}

GroupSpec get_spec(const json& params, const char* key) {
  if (!params.contains(key)) throw SpecError(std::string("missing parameter \"") + key + "\"");
  return params[key].get<GroupSpec>();
}

ConcreteGroup relabel(ConcreteGroup g, const std::string& label) {
  if (label.empty() || label == g.label()) return g;
  return ConcreteGroup::derived(g.order(), g.table(), g.generators(), label);
}

}  // namespace

ConcreteGroup build_group(const GroupSpec& spec, const BuildOptions& options) {
  const json& p = spec.params;
  const std::string& c = spec.constructor;
  ConcreteGroup g = [&]() -> ConcreteGroup {
    if (c == "cyclic") return build_cyclic(get_uint(p, "n"), options);
    if (c == "dihedral") return build_dihedral(get_uint(p, "n"), options);
    if (c == "quaternion") return build_quaternion(get_uint(p, "order"), options);
    if (c == "symmetric") return build_symmetric(get_uint(p, "degree"), options);
    if (c == "alternating") return build_alternating(get_uint(p, "degree"), options);
    if (c == "semidirect_cyclic") {
      if (!p.contains("e") || !p["e"].is_number_integer()) throw SpecError("missing integer parameter \"e\"");
      return build_semidirect_cyclic(get_uint(p, "n"), get_uint(p, "m"), p["e"].get<std::int64_t>(), options);
    }
    if (c == "direct_product") {
      const ConcreteGroup a = build_group(get_spec(p, "left"), options);
      const ConcreteGroup b = build_group(get_spec(p, "right"), options);
      return direct_product(a, b, options);
    }
    if (c == "semidirect_table") {
      const ConcreteGroup n = build_group(get_spec(p, "normal"), options);
      const ConcreteGroup h = build_group(get_spec(p, "acting"), options);
      if (!p.contains("action")) throw SpecError("missing parameter \"action\"");
      return build_semidirect_table(n, h, get_perms(p["action"], "action"), options);
    }
    if (c == "from_permutations") {
      const std::vector<Permutation> gens =
          p.contains("generators") ? get_perms(p["generators"], "generators") : std::vector<Permutation>{};
      return build_from_permutations(get_uint(p, "degree"), gens, options);
    }
    if (c == "from_cayley_table") {
      if (!p.contains("table") || !p["table"].is_array()) throw SpecError("missing array parameter \"table\"");
      std::vector<Element> flat;
      for (const json& row : p["table"]) {
        if (row.is_array()) {
          for (const json& x : row) flat.push_back(x.get<Element>());
        } else if (row.is_number_integer() && row.get<std::int64_t>() >= 0) {
          flat.push_back(row.get<Element>());
        } else {
          throw SpecError("Cayley table entries must be non-negative integers");
        }
      }
      const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
      if (n * n != flat.size()) throw SpecError("Cayley table size is not a perfect square");
      return build_from_cayley_table(n, std::move(flat), "table", options);
    }
    throw SpecError("unknown constructor \"" + c + "\"");
  }();
  return relabel(std::move(g), spec.label);
}

}  // namespace nilgraph
