#include "nodalstab/cli.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "nodalstab/cone_geometry.hpp"
#include "nodalstab/invariant_calculus.hpp"
#include "nodalstab/io.hpp"
#include "nodalstab/nodal_transfer.hpp"

namespace nodalstab::cli {

namespace {

using io::json;

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open input file " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CommandResult input_error(const std::string& command, const std::vector<Diagnostic>& diags) {
  json j;
  j["command"] = command;
  j["diagnostics"] = json::array();
  std::string err = command + ": input error\n";
  for (const auto& d : diags) {
    j["diagnostics"].push_back({{"code", to_string(d.code)}, {"message", d.message}});
    err += "  " + std::string(to_string(d.code)) + ": " + d.message + "\n";
  }
  return {kExitInput, dump(j), err};
}

std::string verdict_word(bool pass, Strictness s) {
  if (s == Strictness::Semi) return pass ? "semistable" : "not semistable";
  return pass ? "stable" : "not stable";
}

struct InvalidInput {
  std::vector<Diagnostic> diagnostics;
};

// Validated swamp instance; node-side input is evaluated with plain chi.
SwampInstance load_family(const json& doc) {
  auto inst = io::parse_swamp(doc);
  auto diags = validate_swamp(inst);
  if (!diags.empty()) throw InvalidInput{std::move(diags)};
  return inst;
}

CommandResult do_check(const json& doc, const std::optional<std::string>& delta, bool asymptotic, bool stable) {
  if (delta.has_value() == asymptotic) {
    return input_error("check", {{ErrorCode::InvalidArgument, "give exactly one of --delta and --asymptotic"}});
  }
  const auto inst = load_family(doc);
  const Strictness strictness = stable ? Strictness::Stable : Strictness::Semi;
  Mode mode = AsymptoticMode{};
  if (delta) mode = DeltaMode{parse_rational(*delta)};
  const auto verdict = check_semistability(inst, mode, strictness);

  json j;
  j["command"] = "check";
  j["mode"] = asymptotic ? "asymptotic" : "delta";
  if (delta) j["delta"] = to_string(std::get<DeltaMode>(mode).delta);
  j["strictness"] = stable ? "stable" : "semistable";
  j["pass"] = verdict.pass;
  j["verdict"] = verdict_word(verdict.pass, strictness);
  j["shapes"] = json::array();
  for (const auto& s : verdict.shapes) j["shapes"].push_back(io::to_json(s));
  j["witness"] = nullptr;
  std::ostringstream err;
  err << "check: " << verdict_word(verdict.pass, strictness) << " ("
      << (asymptotic ? std::string("asymptotic") : "delta = " + to_string(std::get<DeltaMode>(mode).delta)) << ", "
      << verdict.shapes.size() << " flag shape(s))\n";
  if (verdict.failing_shape) {
    const auto& s = verdict.shapes[*verdict.failing_shape];
    json w = io::to_json(s);
    w["shape"] = *verdict.failing_shape;
    const auto& steps = inst.flags[*verdict.failing_shape].steps;
    w["steps"] = json::array();
    for (const auto& st : steps) w["steps"].push_back(io::to_json(st));
    j["witness"] = w;
    err << "  fails on flag " << *verdict.failing_shape << " (" << s.condition << ") at m = "
        << io::rational_array(s.witness).dump() << ", value " << (s.value ? to_string(*s.value) : "n/a") << "\n";
  }
  return {verdict.pass ? kExitPass : kExitFail, dump(j), err.str()};
}

CommandResult do_walls(const json& doc) {
  const auto inst = load_family(doc);
  const auto report = wall_scan(inst);
  json j = io::to_json(report);
  j["command"] = "walls";
  std::ostringstream err;
  err << "walls: " << report.walls.size() << " wall(s), threshold " << to_string(report.delta_threshold)
      << "; asymptotically " << (report.asymptotic_semistable ? "semistable" : "not semistable") << "\n";
  return {kExitPass, dump(j), err.str()};
}

CommandResult do_transfer(const json& doc) {
  const auto inst = io::parse_swamp(doc);
  std::vector<Diagnostic> diags = validate_instance(inst.curve, inst.ambient).diagnostics;
  if (!diags.empty()) return input_error("transfer", diags);
  const auto gps = transfer_to_normalization(inst);
  std::ostringstream err;
  err << "transfer: chi(F) = " << gps.ambient.euler << ", gps types " << json(*gps.ambient.gps_types).dump() << ", "
      << gps.flags.size() << " flag shape(s)\n";
  return {kExitPass, dump(io::to_json(gps)), err.str()};
}

CommandResult do_constants(const json& doc, std::optional<Int> a, std::uint64_t ceiling) {
  auto inst = io::parse_swamp(doc);
  const auto base = validate_instance(inst.curve, inst.ambient);
  if (!base.ok()) return input_error("constants", base.diagnostics);
  const bool transferred = is_nodal_instance(inst);
  if (transferred) inst = transfer_to_normalization(inst);
  const auto rank = inst.ambient.uniform_rank();
  if (!rank) return input_error("constants", {{ErrorCode::NonUniformRank, "the bounds need a sheaf of uniform rank"}});

  BoundsInput in;
  in.rank = *rank;
  in.chi = inst.ambient.euler;
  in.curve = inst.curve;
  in.a = a.value_or(inst.tensor.a);
  in.ceiling = ceiling;
  const std::size_t c = inst.curve.marked_pairs.size();
  in.gps_types = inst.ambient.gps_types.value_or(std::vector<Int>(c, 0));
  in.kappa = inst.kappa.empty() ? KappaVector::ones(c) : inst.kappa;
  if (!inst.flags.empty()) {
    if (!a || *a == inst.tensor.a) {
      const auto diags = validate_swamp(inst);
      if (!diags.empty()) return input_error("constants", diags);
      in.family = all_shape_forms(inst);
    }
  }
  const auto rec = bounds_pipeline(in);
  json j = io::to_json(rec);
  j["command"] = "constants";
  j["a"] = in.a;
  j["transferred_from_nodal"] = transferred;
  std::ostringstream err;
  err << "constants: alpha = " << rec.alpha << ", D = " << to_string(rec.D) << ", K0^2 = " << to_string(rec.K0_squared)
      << ", K1 = " << to_string(rec.K1) << ", B^2 = " << to_string(rec.B_squared) << ", K = " << to_string(rec.K)
      << ", delta_infinity = " << to_string(rec.delta_infinity) << " (" << rec.cone_function_count
      << " cone functions)\n";
  return {kExitPass, dump(j), err.str()};
}

CommandResult do_verify_git(const json& doc, Int bound) {
  const auto input = io::parse_blocks(doc);
  const auto report = verify_block_lemma(input.group, input.support, bound, Exec::Parallel);
  json j = io::to_json(report);
  j["command"] = "verify-git";
  j["bound"] = bound;
  j["warnings"] = json::array();
  if (report.bound_too_small) {
    j["warnings"].push_back({{"code", "BoundTooSmallWarning"},
                             {"message", "no destabilizer in the weight box; the LP destabilizer is reported"}});
  }
  std::ostringstream err;
  err << "verify-git: H-" << (report.h_semistable ? "semistable" : "unstable") << ", componentwise "
      << (report.componentwise ? "semistable" : "unstable") << "; equivalence "
      << (report.equivalence_holds ? "holds" : "FAILS") << " (" << report.tested << " 1-PS tested)\n";
  if (report.bound_too_small) err << "  warning: bound " << bound << " too small to exhibit the destabilizer\n";
  return {report.equivalence_holds ? kExitPass : kExitFail, dump(j), err.str()};
}

CommandResult do_euler(const json& doc, const std::optional<std::string>& twist) {
  const auto inst = io::parse_swamp(doc);
  const auto v = validate_instance(inst.curve, inst.ambient);
  if (!v.ok()) return input_error("euler", v.diagnostics);
  const auto& curve = inst.curve;
  const auto& sheaf = inst.ambient;
  const auto basic = basic_invariants(curve, sheaf);
  json j;
  j["command"] = "euler";
  j["euler_O"] = curve.euler_structure_sheaf();
  j["arithmetic_genus"] = curve.arithmetic_genus();
  j["total_rank"] = basic.total_rank;
  j["rank_ell"] = to_string(basic.rank_ell);
  j["degree_ell"] = to_string(basic.degree_ell);
  j["uniform_rank"] = sheaf.uniform_rank().has_value();
  j["canonical_degree_sum"] = canonical_degree_sum(curve);
  if (sheaf.gps_types) {
    const KappaVector kappa = inst.kappa.empty() ? KappaVector::ones(curve.marked_pairs.size()) : inst.kappa;
    const Rational ck = chi_kappa(sheaf, kappa);
    j["chi_kappa"] = to_string(ck);
    j["slope_kappa"] = basic.total_rank > 0 ? json(to_string(kappa_slope(ck, basic.total_rank))) : json(nullptr);
    if (sheaf.uniform_rank()) j["D"] = to_string(d_window(curve, sheaf, kappa).width);
  }
  if (sheaf.uniform_rank()) {
    j["dual_euler"] = to_string(dual_euler(curve, sheaf));
    j["omega_dual_euler"] = to_string(omega_dual_euler(curve, sheaf));
    j["dual_iso_criterion"] = dual_iso_criterion(curve, sheaf);
  }
  if (twist) {
    std::vector<Int> degrees;
    for (const auto& r : parse_rational_list(*twist)) {
      if (denominator(r) != 1) throw Error(ErrorCode::InvalidArgument, "twist degrees must be integers");
      degrees.push_back(numerator(r).convert_to<Int>());
    }
    j["twist_degrees"] = degrees;
    j["twist_euler"] = to_string(twist_euler(curve, sheaf, degrees));
  }
  std::ostringstream err;
  err << "euler: chi(O) = " << curve.euler_structure_sheaf() << ", trk = " << basic.total_rank
      << ", deg_ell = " << to_string(basic.degree_ell) << "\n";
  return {kExitPass, dump(j), err.str()};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Exact semistability toolkit for decorated sheaves on nodal curves", "nodalstab"};
  app.require_subcommand(1);
  std::string input;
  std::optional<std::string> delta;
  bool asymptotic = false;
  bool stable = false;
  std::optional<Int> a;
  std::uint64_t ceiling = kDefaultConeCeiling;
  Int bound = 2;
  std::optional<std::string> twist;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input,-i,--input", input, "instance JSON file (default: standard input)");
  };
  auto* constants = app.add_subcommand("constants", "boundedness constants D, K0^2, K1, B^2, K, delta_infinity");
  add_input(constants);
  constants->add_option("--a", a, "tensor arity (default: the instance's tensor.a)");
  constants->add_option("--ceiling", ceiling, "refuse more cone functions than this");
  auto* check = app.add_subcommand("check", "decide (kappa,delta)- or asymptotic (semi)stability");
  add_input(check);
  check->add_option("--delta", delta, "stability parameter p/q");
  check->add_flag("--asymptotic", asymptotic, "asymptotic mode");
  check->add_flag("--stable", stable, "strict inequality");
  auto* walls = app.add_subcommand("walls", "critical delta values and chamber verdicts");
  add_input(walls);
  auto* transfer = app.add_subcommand("transfer", "nodal instance to GPS instance on the normalization");
  add_input(transfer);
  auto* git = app.add_subcommand("verify-git", "block lemma: H-semistability versus the componentwise criterion");
  add_input(git);
  git->add_option("--bound", bound, "weight box [-N, N] for the exhaustive 1-PS scan");
  auto* euler = app.add_subcommand("euler", "rank/degree calculus and Euler characteristic identities");
  add_input(euler);
  euler->add_option("--twist", twist, "comma-separated degrees n_i of a twisting line bundle");

  std::ostringstream help_out, help_err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, help_out, help_err);
    if (code == 0) return {kExitPass, help_out.str(), help_err.str()};
    return input_error("cli", {{ErrorCode::InvalidArgument, e.what()}});
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const json doc = io::parse_text(read_input(input, in));
    if (command == "check") return do_check(doc, delta, asymptotic, stable);
    if (command == "walls") return do_walls(doc);
    if (command == "transfer") return do_transfer(doc);
    if (command == "constants") return do_constants(doc, a, ceiling);
    if (command == "verify-git") return do_verify_git(doc, bound);
    return do_euler(doc, twist);
  } catch (const InvalidInput& bad) {
    return input_error(command, bad.diagnostics);
  } catch (const Error& e) {
    return input_error(command, {{e.code(), e.what()}});
  } catch (const io::json::exception& e) {
    return input_error(command, {{ErrorCode::ParseError, e.what()}});
  }
}

}  // namespace nodalstab::cli
