#include "nodalstab/io.hpp"

namespace nodalstab::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, path + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

Int int_from(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<Int>();
}

std::vector<Int> int_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<Int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_from(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::optional<std::vector<Int>> optional_int_array(const json& j, const std::string& key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return int_array(*it, path + "." + key);
}

std::vector<std::vector<Int>> int_matrix(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integer arrays");
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_array(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json rational_json(const Rational& value) { return to_string(value); }

json rational_array(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Rational rational_from(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<Int>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(path, "expected a rational string \"p/q\" or an integer");
}

CurveData parse_curve(const json& doc) {
  CurveData curve;
  const auto& comps = field(doc, "components", "$");
  if (!comps.is_array()) fail("$.components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "$.components[" + std::to_string(i) + "]";
    Component c;
    c.genus = comps[i].contains("genus") ? int_from(comps[i]["genus"], path + ".genus") : 0;
    c.ell = comps[i].contains("ell") ? int_from(comps[i]["ell"], path + ".ell") : 1;
    curve.components.push_back(c);
  }
  if (doc.contains("marked_pairs")) {
    const auto pairs = int_matrix(doc["marked_pairs"], "$.marked_pairs");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].size() != 2) fail("$.marked_pairs[" + std::to_string(i) + "]", "expected a pair");
      curve.marked_pairs.emplace_back(pairs[i][0], pairs[i][1]);
    }
  }
  if (doc.contains("connected")) {
    if (!doc["connected"].is_boolean()) fail("$.connected", "expected a boolean");
    curve.connected = doc["connected"].get<bool>();
  }
  return curve;
}

SheafData parse_sheaf(const json& j, const std::string& path) {
  SheafData s;
  s.multirank = int_array(field(j, "multirank", path), path + ".multirank");
  s.euler = int_from(field(j, "euler", path), path + ".euler");
  s.node_types = optional_int_array(j, "node_types", path);
  s.gps_types = optional_int_array(j, "gps_types", path);
  return s;
}

SubsheafRecord parse_step(const json& j, const std::string& path) {
  SubsheafRecord s;
  s.multirank = int_array(field(j, "multirank", path), path + ".multirank");
  s.euler = int_from(field(j, "euler", path), path + ".euler");
  if (auto dims = optional_int_array(j, "gps_dims", path)) s.gps_dims = std::move(*dims);
  s.node_types = optional_int_array(j, "node_types", path);
  return s;
}

SwampInstance parse_swamp(const json& doc) {
  SwampInstance inst;
  inst.curve = parse_curve(doc);
  if (doc.contains("ambient")) {
    inst.ambient = parse_sheaf(doc["ambient"], "$.ambient");
  } else if (doc.contains("sheaf")) {
    inst.ambient = parse_sheaf(doc["sheaf"], "$.sheaf");
  } else {
    fail("$", "missing field \"ambient\" (or \"sheaf\")");
  }
  if (doc.contains("kappa")) {
    const auto& k = doc["kappa"];
    if (!k.is_array()) fail("$.kappa", "expected an array");
    std::vector<Rational> entries;
    for (std::size_t i = 0; i < k.size(); ++i) entries.push_back(rational_from(k[i], "$.kappa[" + std::to_string(i) + "]"));
    inst.kappa = KappaVector(std::move(entries));
  }
  if (doc.contains("tensor")) {
    const auto& t = doc["tensor"];
    if (t.contains("a")) inst.tensor.a = int_from(t["a"], "$.tensor.a");
    if (t.contains("b")) inst.tensor.b = int_from(t["b"], "$.tensor.b");
  }
  if (doc.contains("flags")) {
    const auto& flags = doc["flags"];
    if (!flags.is_array()) fail("$.flags", "expected an array");
    for (std::size_t f = 0; f < flags.size(); ++f) {
      const std::string path = "$.flags[" + std::to_string(f) + "]";
      FlagShape shape;
      const auto& steps = field(flags[f], "steps", path);
      if (!steps.is_array()) fail(path + ".steps", "expected an array");
      for (std::size_t i = 0; i < steps.size(); ++i) {
        shape.steps.push_back(parse_step(steps[i], path + ".steps[" + std::to_string(i) + "]"));
      }
      const auto gens = int_matrix(field(flags[f], "support", path), path + ".support");
      shape.support = TensorSupport(inst.tensor.a, static_cast<Int>(shape.steps.size()) + 1, gens);
      inst.flags.push_back(std::move(shape));
    }
  }
  return inst;
}

json to_json(const SheafData& sheaf) {
  json j;
  j["multirank"] = sheaf.multirank;
  j["euler"] = sheaf.euler;
  if (sheaf.node_types) j["node_types"] = *sheaf.node_types;
  if (sheaf.gps_types) j["gps_types"] = *sheaf.gps_types;
  return j;
}

json to_json(const SubsheafRecord& step) {
  json j;
  j["multirank"] = step.multirank;
  j["euler"] = step.euler;
  j["gps_dims"] = step.gps_dims;
  if (step.node_types) j["node_types"] = *step.node_types;
  return j;
}

json to_json(const SwampInstance& inst) {
  json j;
  j["components"] = json::array();
  for (const auto& c : inst.curve.components) j["components"].push_back({{"genus", c.genus}, {"ell", c.ell}});
  j["marked_pairs"] = json::array();
  for (const auto& [a, b] : inst.curve.marked_pairs) j["marked_pairs"].push_back({a, b});
  j["connected"] = inst.curve.connected;
  j["ambient"] = to_json(inst.ambient);
  j["kappa"] = rational_array(inst.kappa.entries());
  j["tensor"] = {{"a", inst.tensor.a}, {"b", inst.tensor.b}};
  j["flags"] = json::array();
  for (const auto& f : inst.flags) {
    json fj;
    fj["steps"] = json::array();
    for (const auto& st : f.steps) fj["steps"].push_back(to_json(st));
    fj["support"] = f.support.minimal_elements();
    j["flags"].push_back(std::move(fj));
  }
  return j;
}

BlockInput parse_blocks(const json& doc) {
  BlockInput out;
  const auto& blocks = field(doc, "blocks", "$");
  if (!blocks.is_array()) fail("$.blocks", "expected an array");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string path = "$.blocks[" + std::to_string(i) + "]";
    out.group.ranks.push_back(int_from(field(blocks[i], "rank", path), path + ".rank"));
    out.group.ells.push_back(blocks[i].contains("ell") ? int_from(blocks[i]["ell"], path + ".ell") : 1);
    out.group.degrees.push_back(int_from(field(blocks[i], "degree", path), path + ".degree"));
    out.support.blocks.push_back(
        blocks[i].contains("support") ? int_matrix(blocks[i]["support"], path + ".support") : std::vector<WeightVector>{});
  }
  return out;
}

json to_json(const ShapeVerdict& v) {
  json j;
  j["pass"] = v.pass;
  j["condition"] = v.condition;
  j["value"] = v.value ? rational_json(*v.value) : json(nullptr);
  j["witness"] = rational_array(v.witness);
  return j;
}

json to_json(const BoundsRecord& b) {
  json j;
  j["alpha"] = b.alpha;
  j["D"] = rational_json(b.D);
  j["K0_squared"] = rational_json(b.K0_squared);
  j["K1"] = rational_json(b.K1);
  j["B_squared"] = rational_json(b.B_squared);
  j["B_ceil"] = b.B_ceil.str();
  j["chi_kappa"] = rational_json(b.chi_kappa);
  j["chibar_kappa_max_bound"] = rational_json(b.chibar_kappa_max_bound);
  j["chibar_max_bound"] = rational_json(b.chibar_max_bound);
  j["K_components"] = rational_array(b.K_components);
  j["K"] = rational_json(b.K);
  j["delta_infinity"] = rational_json(b.delta_infinity);
  j["delta_cap"] = rational_json(b.delta_cap);
  j["family_threshold"] = rational_json(b.family_threshold);
  j["cone_function_count"] = b.cone_function_count;
  j["k0_defined_count"] = b.k0_defined_count;
  json arg;
  arg["ranks"] = b.k0_argmin_ranks;
  arg["support"] = b.k0_argmin_support;
  json ray = json::array();
  for (const auto& n : b.k0_integral_ray) ray.push_back(n.str());
  arg["integral_ray"] = ray;
  j["K0_argmin"] = arg;
  return j;
}

json to_json(const WallReport& w) {
  json j;
  j["walls"] = rational_array(w.walls);
  j["delta_threshold"] = rational_json(w.delta_threshold);
  j["chambers"] = json::array();
  for (const auto& c : w.chambers) {
    j["chambers"].push_back({{"delta", rational_json(c.sample)},
                             {"on_wall", c.on_wall},
                             {"semistable", c.semistable},
                             {"stable", c.stable}});
  }
  j["asymptotic"] = {{"semistable", w.asymptotic_semistable}, {"stable", w.asymptotic_stable}};
  return j;
}

json to_json(const BlockLemmaReport& r) {
  json j;
  j["h_semistable"] = r.h_semistable;
  j["componentwise_semistable"] = r.componentwise;
  j["equivalence_holds"] = r.equivalence_holds;
  j["tested"] = r.tested;
  j["bound_too_small"] = r.bound_too_small;
  j["destabilizer"] = r.destabilizer ? json(r.destabilizer->gammas) : json(nullptr);
  if (r.constructed) {
    j["constructed"] = {{"block", r.constructed->distinguished_block + 1},
                        {"case", r.constructed->zero_block_case ? "zero-block" : "unstable-block"},
                        {"gammas", r.constructed->ops.gammas},
                        {"sign_pattern_ok", r.constructed->sign_pattern_ok}};
  } else {
    j["constructed"] = nullptr;
  }
  return j;
}

}  // namespace nodalstab::io
