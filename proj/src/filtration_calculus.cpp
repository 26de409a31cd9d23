#include "nodalstab/filtration_calculus.hpp"

#include <algorithm>
#include <set>

#include "nodalstab/kernels.hpp"
#include "nodalstab/lp.hpp"

namespace nodalstab {

Rational evaluate(const LinearForm& form, std::span<const Rational> m) {
  if (form.size() != m.size()) throw Error(ErrorCode::WeightCountMismatch, "weight vector has the wrong length");
  Rational out;
  for (std::size_t i = 0; i < m.size(); ++i) out += form[i] * m[i];
  return out;
}

// ---------------------------------------------------------------------------
// TensorSupport

namespace {

bool dominates(std::span<const Int> upper, std::span<const Int> lower) {
  for (std::size_t k = 0; k < upper.size(); ++k) {
    if (upper[k] < lower[k]) return false;
  }
  return true;
}

}  // namespace

TensorSupport::TensorSupport(Int arity, Int levels, std::vector<std::vector<Int>> generators)
    : arity_(arity), levels_(levels) {
  if (arity < 1) throw Error(ErrorCode::InvalidArgument, "tensor arity must be >= 1");
  if (levels < 1) throw Error(ErrorCode::InvalidArgument, "a flag has at least one level");
  if (generators.empty()) throw Error(ErrorCode::EmptySupport, "the tensor field must be non-trivial on some product of steps");
  for (const auto& g : generators) {
    if (static_cast<Int>(g.size()) != arity) {
      throw Error(ErrorCode::InvalidSupportTuple, "support tuple length differs from the tensor arity");
    }
    for (auto v : g) {
      if (v < 1 || v > levels) {
        throw Error(ErrorCode::InvalidSupportTuple,
                    "support index " + std::to_string(v) + " outside 1.." + std::to_string(levels));
      }
    }
  }
  // Walk every tuple of {1..levels}^arity in lexicographic order, keeping the
  // ones that dominate a generator.
  std::vector<Int> cur(static_cast<std::size_t>(arity), 1);
  while (true) {
    for (const auto& g : generators) {
      if (dominates(cur, g)) {
        tuples_.push_back(cur);
        break;
      }
    }
    std::size_t k = cur.size();
    while (k > 0 && cur[k - 1] == levels) cur[--k] = 1;
    if (k == 0) break;
    ++cur[k - 1];
  }
}

bool TensorSupport::contains(std::span<const Int> tuple) const {
  std::vector<Int> key(tuple.begin(), tuple.end());
  return std::binary_search(tuples_.begin(), tuples_.end(), key);
}

std::vector<std::vector<Int>> TensorSupport::minimal_elements() const {
  std::vector<std::vector<Int>> out;
  for (const auto& t : tuples_) {
    bool minimal = true;
    for (const auto& u : tuples_) {
      if (u != t && dominates(t, u)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gamma vectors

std::vector<Rational> gamma_generator(Int alpha, Int i) {
  if (i < 0 || i > alpha) throw Error(ErrorCode::StepRankOutOfRange, "Gamma^(i) needs 0 <= i <= alpha");
  std::vector<Rational> out(static_cast<std::size_t>(alpha));
  for (Int k = 0; k < alpha; ++k) out[static_cast<std::size_t>(k)] = k < i ? Rational(i - alpha) : Rational(i);
  return out;
}

namespace {

void check_step_trks(Int alpha, std::span<const Int> step_trks) {
  Int prev = 0;
  for (auto trk : step_trks) {
    if (trk <= prev || trk >= alpha) {
      throw Error(ErrorCode::StepRankOutOfRange,
                  "step total ranks must satisfy 0 < trk(E_1) < ... < trk(E_s) < alpha = " + std::to_string(alpha));
    }
    prev = trk;
  }
}

void check_weights(std::span<const Int> step_trks, std::span<const Rational> m) {
  if (m.size() != step_trks.size()) {
    throw Error(ErrorCode::WeightCountMismatch, "expected " + std::to_string(step_trks.size()) + " weights, got " +
                                                    std::to_string(m.size()));
  }
  for (const auto& w : m) {
    if (w.sign() < 0) throw Error(ErrorCode::NonPositiveWeight, "filtration weights must be nonnegative");
  }
}

}  // namespace

GammaData gamma_data(Int alpha, std::span<const Int> step_trks, std::span<const Rational> m) {
  check_step_trks(alpha, step_trks);
  check_weights(step_trks, m);
  GammaData out;
  out.gamma.assign(static_cast<std::size_t>(alpha), Rational(0));
  for (std::size_t i = 0; i < step_trks.size(); ++i) {
    const auto g = gamma_generator(alpha, step_trks[i]);
    for (std::size_t k = 0; k < g.size(); ++k) out.gamma[k] += m[i] * g[k];
  }
  for (auto trk : step_trks) out.step_weights.push_back(out.gamma[static_cast<std::size_t>(trk - 1)]);
  out.step_weights.push_back(out.gamma.back());
  return out;
}

std::vector<LinearForm> step_weight_forms(Int alpha, std::span<const Int> step_trks) {
  check_step_trks(alpha, step_trks);
  const std::size_t s = step_trks.size();
  std::vector<LinearForm> out(s + 1, LinearForm(s));
  for (std::size_t k = 0; k <= s; ++k) {
    for (std::size_t i = 0; i < s; ++i) {
      out[k][i] = k <= i ? Rational(step_trks[i] - alpha) : Rational(step_trks[i]);
    }
  }
  return out;
}

Rational mu_of_filtration(Int alpha, std::span<const Int> step_trks, std::span<const Rational> m,
                          const TensorSupport& support) {
  if (support.tuples().empty()) throw Error(ErrorCode::EmptySupport, "empty tensor support");
  if (support.levels() != static_cast<Int>(step_trks.size()) + 1) {
    throw Error(ErrorCode::InvalidSupportTuple, "support levels do not match the number of flag steps");
  }
  const auto data = gamma_data(alpha, step_trks, m);
  std::optional<Rational> best;
  for (const auto& tuple : support.tuples()) {
    Rational sum;
    for (auto idx : tuple) sum += data.step_weights[static_cast<std::size_t>(idx - 1)];
    if (!best || sum < *best) best = sum;
  }
  return -*best;
}

Rational effective_chi(Int euler, std::span<const Int> gps_dims, const KappaVector& kappa) {
  if (kappa.empty()) return Rational(euler);
  return chi_kappa(euler, gps_dims, kappa);
}

Rational effective_chi(const SheafData& sheaf, const KappaVector& kappa) {
  if (kappa.empty()) return Rational(sheaf.euler);
  return chi_kappa(sheaf, kappa);
}

LinearForm chi_form(const CurveData& curve, const SheafData& ambient, std::span<const SubsheafRecord> steps,
                    const KappaVector& kappa) {
  const Int trk = total_rank(curve, ambient.multirank);
  const Rational chi = effective_chi(ambient, kappa);
  LinearForm out(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!kappa.empty() && steps[i].gps_dims.size() != kappa.size()) {
      throw Error(ErrorCode::MissingGpsDims, "step " + std::to_string(i + 1) + " lacks gps dimensions");
    }
    const Rational chi_i = effective_chi(steps[i].euler, steps[i].gps_dims, kappa);
    out[i] = chi * total_rank(curve, steps[i].multirank) - chi_i * trk;
  }
  return out;
}

Rational chi_of_filtration(const CurveData& curve, const SheafData& ambient, const WeightedFiltration& filt,
                           const KappaVector& kappa) {
  return evaluate(chi_form(curve, ambient, filt.steps, kappa), filt.m);
}

// ---------------------------------------------------------------------------
// Flag merging

Rational flag_constraint(const CurveData& curve, std::span<const ComponentFlag> flags) {
  if (flags.size() != curve.components.size()) {
    throw Error(ErrorCode::MultirankLengthMismatch, "need one component flag per component");
  }
  Rational total;
  for (std::size_t j = 0; j < flags.size(); ++j) {
    const auto& f = flags[j];
    if (f.dims.size() != f.weights.size()) {
      throw Error(ErrorCode::WeightCountMismatch, "component flag dims and weights differ in length");
    }
    Int prev = 0;
    for (std::size_t k = 0; k < f.dims.size(); ++k) {
      total += curve.components[j].ell * (f.dims[k] - prev) * f.weights[k];
      prev = f.dims[k];
    }
  }
  return total;
}

MergedFiltration merge_flags(const CurveData& curve, std::span<const Int> multirank,
                             std::span<const ComponentFlag> flags) {
  if (multirank.size() != curve.components.size() || flags.size() != curve.components.size()) {
    throw Error(ErrorCode::MultirankLengthMismatch, "need one rank and one flag per component");
  }
  std::set<Rational> levels;
  for (std::size_t j = 0; j < flags.size(); ++j) {
    const auto& f = flags[j];
    if (f.dims.size() != f.weights.size()) {
      throw Error(ErrorCode::WeightCountMismatch, "component flag dims and weights differ in length");
    }
    if (f.dims.empty()) {
      if (multirank[j] != 0) throw Error(ErrorCode::InvalidArgument, "empty flag on a component of positive rank");
      continue;
    }
    Int prev = 0;
    for (std::size_t k = 0; k < f.dims.size(); ++k) {
      if (f.dims[k] <= prev) throw Error(ErrorCode::InvalidArgument, "component flag dimensions must strictly increase");
      if (k > 0 && f.weights[k] <= f.weights[k - 1]) {
        throw Error(ErrorCode::NonIncreasingWeights, "component flag weights must strictly increase");
      }
      prev = f.dims[k];
      levels.insert(f.weights[k]);
    }
    if (f.dims.back() != multirank[j]) {
      throw Error(ErrorCode::InvalidArgument, "component flag must end at the full rank of its component");
    }
  }
  const Rational constraint = flag_constraint(curve, flags);
  if (!constraint.is_zero()) {
    throw Error(ErrorCode::ConstraintViolated, "weighted dimension sum is " + to_string(constraint) + ", expected 0");
  }

  MergedFiltration out;
  out.alpha = total_rank(curve, multirank);
  if (out.alpha == 0) throw Error(ErrorCode::ZeroTotalRank, "cannot merge flags of the zero sheaf");
  out.step_weights.assign(levels.begin(), levels.end());
  const std::size_t s = out.step_weights.size() - 1;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Int> ranks(flags.size(), 0);
    for (std::size_t j = 0; j < flags.size(); ++j) {
      const auto& f = flags[j];
      for (std::size_t k = 0; k < f.dims.size() && f.weights[k] <= out.step_weights[i]; ++k) ranks[j] = f.dims[k];
    }
    out.step_trks.push_back(total_rank(curve, ranks));
    out.step_multiranks.push_back(std::move(ranks));
    out.m.push_back((out.step_weights[i + 1] - out.step_weights[i]) / out.alpha);
  }

  const auto gd = gamma_data(out.alpha, out.step_trks, out.m);
  for (std::size_t i = 0; i <= s; ++i) {
    const Int pos = i < s ? out.step_trks[i] : out.alpha;
    if (gd.gamma[static_cast<std::size_t>(pos - 1)] != out.step_weights[i]) {
      throw Error(ErrorCode::PostconditionFailed, "merged Gamma does not reproduce the step weights");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Instances and shapes

std::vector<Diagnostic> validate_swamp(const SwampInstance& inst) {
  auto base = validate_instance(inst.curve, inst.ambient);
  std::vector<Diagnostic> diag = std::move(base.diagnostics);
  if (!diag.empty()) return diag;

  const std::size_t t = inst.curve.components.size();
  const std::size_t c = inst.curve.marked_pairs.size();
  const bool gps = inst.ambient.gps_types.has_value();
  if (gps && inst.kappa.size() != c) {
    diag.push_back({ErrorCode::KappaLengthMismatch, "kappa must have one entry per marked pair"});
  }
  if (!gps && !inst.kappa.empty()) {
    diag.push_back({ErrorCode::MissingGpsTypes, "kappa given but the ambient sheaf carries no gps_types"});
  }
  if (inst.tensor.a < 1 || inst.tensor.b < 1) {
    diag.push_back({ErrorCode::InvalidArgument, "tensor arity and copies must be >= 1"});
  }
  const Int alpha = total_rank(inst.curve, inst.ambient.multirank);
  if (alpha == 0) diag.push_back({ErrorCode::ZeroTotalRank, "ambient sheaf has total rank 0"});
  if (inst.flags.empty()) diag.push_back({ErrorCode::EmptyFamily, "no flag shapes given"});

  for (std::size_t f = 0; f < inst.flags.size(); ++f) {
    const auto& shape = inst.flags[f];
    const std::string where = "flag " + std::to_string(f) + ": ";
    Int prev_trk = 0;
    const std::vector<Int>* prev_dims = nullptr;
    for (std::size_t i = 0; i < shape.steps.size(); ++i) {
      const auto& st = shape.steps[i];
      const std::string here = where + "step " + std::to_string(i + 1) + ": ";
      if (st.multirank.size() != t) {
        diag.push_back({ErrorCode::MultirankLengthMismatch, here + "multirank length mismatch"});
        continue;
      }
      bool dominated = true;
      for (std::size_t j = 0; j < t; ++j) {
        if (st.multirank[j] < 0 || st.multirank[j] > inst.ambient.multirank[j]) dominated = false;
      }
      if (!dominated) diag.push_back({ErrorCode::StepNotDominatedByAmbient, here + "multirank exceeds the ambient"});
      const Int trk = total_rank(inst.curve, st.multirank);
      if (trk <= prev_trk || trk >= alpha) {
        diag.push_back({ErrorCode::StepRankOutOfRange, here + "total ranks must increase strictly inside (0, trk(E))"});
      }
      prev_trk = trk;
      if (gps) {
        if (st.gps_dims.size() != c) {
          diag.push_back({ErrorCode::MissingGpsDims, here + "needs one gps dimension per marked pair"});
        } else {
          for (std::size_t j = 0; j < c; ++j) {
            if (st.gps_dims[j] < 0 || st.gps_dims[j] > (*inst.ambient.gps_types)[j]) {
              diag.push_back({ErrorCode::StepNotDominatedByAmbient, here + "gps dimension outside [0, t_j]"});
              break;
            }
          }
          if (prev_dims) {
            for (std::size_t j = 0; j < c; ++j) {
              if (st.gps_dims[j] < (*prev_dims)[j]) {
                diag.push_back({ErrorCode::NonMonotoneGpsDims, here + "gps dimensions must be nondecreasing along the flag"});
                break;
              }
            }
          }
          prev_dims = &st.gps_dims;
        }
      }
    }
    if (shape.support.arity() != inst.tensor.a) {
      diag.push_back({ErrorCode::InvalidSupportTuple, where + "support arity differs from the tensor arity"});
    }
    if (shape.support.levels() != static_cast<Int>(shape.steps.size()) + 1) {
      diag.push_back({ErrorCode::InvalidSupportTuple, where + "support levels must equal the number of steps plus one"});
    }
    if (shape.support.tuples().empty()) diag.push_back({ErrorCode::EmptySupport, where + "empty support"});
  }
  return diag;
}

void require_valid_swamp(const SwampInstance& inst) {
  const auto diag = validate_swamp(inst);
  if (!diag.empty()) throw Error(diag.front().code, diag.front().message);
}

Rational ShapeForms::mu(std::span<const Rational> m) const {
  std::optional<Rational> best;
  for (const auto& p : pieces) {
    Rational v = evaluate(p, m);
    if (!best || v > *best) best = std::move(v);
  }
  return best ? *best : Rational(0);
}

ShapeForms make_shape_forms(Int alpha, std::vector<Int> step_trks, LinearForm chi, const TensorSupport& support) {
  if (chi.size() != step_trks.size()) throw Error(ErrorCode::WeightCountMismatch, "chi form length differs from s");
  if (support.levels() != static_cast<Int>(step_trks.size()) + 1) {
    throw Error(ErrorCode::InvalidSupportTuple, "support levels must equal the number of steps plus one");
  }
  const auto weights = step_weight_forms(alpha, step_trks);
  ShapeForms out;
  out.alpha = alpha;
  out.chi = std::move(chi);
  std::set<LinearForm> pieces;
  for (const auto& tuple : support.minimal_elements()) {
    LinearForm form(step_trks.size());
    for (auto idx : tuple) {
      const auto& w = weights[static_cast<std::size_t>(idx - 1)];
      for (std::size_t i = 0; i < form.size(); ++i) form[i] -= w[i];
    }
    pieces.insert(std::move(form));
  }
  out.pieces.assign(pieces.begin(), pieces.end());
  out.step_trks = std::move(step_trks);
  return out;
}

ShapeForms shape_forms(const SwampInstance& inst, std::size_t shape_index) {
  const auto& shape = inst.flags.at(shape_index);
  std::vector<Int> trks;
  for (const auto& st : shape.steps) trks.push_back(total_rank(inst.curve, st.multirank));
  return make_shape_forms(total_rank(inst.curve, inst.ambient.multirank), std::move(trks),
                          chi_form(inst.curve, inst.ambient, shape.steps, inst.kappa), shape.support);
}

std::vector<ShapeForms> all_shape_forms(const SwampInstance& inst) {
  require_valid_swamp(inst);
  std::vector<ShapeForms> out;
  for (std::size_t i = 0; i < inst.flags.size(); ++i) out.push_back(shape_forms(inst, i));
  return out;
}

// ---------------------------------------------------------------------------
// LP decisions

namespace {

using lp::Relation;

std::vector<Rational> unit_row(std::size_t n, std::size_t k) {
  std::vector<Rational> row(n);
  row[k] = 1;
  return row;
}

// Variables m_1..m_s (>= 0) followed by a free epigraph variable z >= every piece.
lp::Problem epigraph_problem(const ShapeForms& f) {
  const std::size_t s = f.dim();
  lp::Problem p(s + 1);
  p.set_free(s);
  for (const auto& piece : f.pieces) {
    std::vector<Rational> row(piece);
    row.push_back(Rational(-1));
    p.add_constraint(std::move(row), Relation::LessEq, Rational(0));
  }
  std::vector<Rational> simplex(s, Rational(1));
  simplex.push_back(Rational(0));
  p.add_constraint(std::move(simplex), Relation::Equal, Rational(1));
  return p;
}

std::vector<Rational> head(const std::vector<Rational>& x, std::size_t n) {
  return std::vector<Rational>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
}

lp::Solution min_combination(const ShapeForms& f, const Rational& delta) {
  auto p = epigraph_problem(f);
  std::vector<Rational> obj(f.chi);
  obj.push_back(delta);
  p.set_objective(std::move(obj));
  auto sol = p.minimize();
  if (sol.status != lp::Status::Optimal) {
    throw Error(ErrorCode::PostconditionFailed, "simplex minimisation of L + delta M did not reach an optimum");
  }
  return sol;
}

lp::Solution min_mu(const ShapeForms& f) {
  auto p = epigraph_problem(f);
  p.set_objective(unit_row(f.dim() + 1, f.dim()));
  auto sol = p.minimize();
  if (sol.status != lp::Status::Optimal) {
    throw Error(ErrorCode::PostconditionFailed, "simplex minimisation of M did not reach an optimum");
  }
  return sol;
}

bool passes(const Rational& value, Strictness strictness) {
  return strictness == Strictness::Semi ? value.sign() >= 0 : value.sign() > 0;
}

}  // namespace

Rational mu_minimum(const ShapeForms& f) {
  if (f.dim() == 0) return Rational(0);
  return min_mu(f).value;
}

ShapeVerdict decide_shape(const ShapeForms& f, const Mode& mode, Strictness strictness) {
  ShapeVerdict out;
  if (f.dim() == 0) return out;
  const std::size_t s = f.dim();

  if (const auto* dm = std::get_if<DeltaMode>(&mode)) {
    if (dm->delta.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
    const auto sol = min_combination(f, dm->delta);
    out.condition = "delta";
    out.value = sol.value;
    out.witness = head(sol.x, s);
    out.pass = passes(sol.value, strictness);
    return out;
  }

  const auto a = min_mu(f);
  if (a.value.sign() < 0) {
    out.condition = "asymptotic-mu";
    out.value = a.value;
    out.witness = head(a.x, s);
    out.pass = false;
    return out;
  }
  lp::Problem p(s);
  for (const auto& piece : f.pieces) p.add_constraint(piece, Relation::LessEq, Rational(0));
  p.add_constraint(std::vector<Rational>(s, Rational(1)), Relation::Equal, Rational(1));
  p.set_objective(f.chi);
  const auto b = p.minimize();
  out.condition = "asymptotic-chi";
  if (b.status == lp::Status::Infeasible) return out;
  out.value = b.value;
  out.witness = b.x;
  out.pass = passes(b.value, strictness);
  return out;
}

Verdict check_semistability(const std::vector<ShapeForms>& family, const Mode& mode, Strictness strictness,
                            Exec exec) {
  if (family.empty()) throw Error(ErrorCode::EmptyFamily, "no flag shapes to test");
  Verdict out;
  out.shapes = exec == Exec::Serial ? kernels::evaluate_shapes_serial(family, mode, strictness)
                                    : kernels::evaluate_shapes_parallel(family, mode, strictness);
  for (std::size_t i = 0; i < out.shapes.size(); ++i) {
    if (!out.shapes[i].pass) {
      out.pass = false;
      out.failing_shape = i;
      break;
    }
  }
  return out;
}

Verdict check_semistability(const SwampInstance& inst, const Mode& mode, Strictness strictness, Exec exec) {
  return check_semistability(all_shape_forms(inst), mode, strictness, exec);
}

// ---------------------------------------------------------------------------
// Walls

ShapeWalls shape_walls(const ShapeForms& f) {
  ShapeWalls out;
  if (f.dim() == 0) return out;
  const std::size_t s = f.dim();
  out.mu_min = min_mu(f).value;

  if (out.mu_min.sign() >= 0) {
    // Semistable exactly for delta >= T = max{-L : m >= 0, M(m) <= 1}.
    lp::Problem p(s);
    for (const auto& piece : f.pieces) p.add_constraint(piece, Relation::LessEq, Rational(1));
    LinearForm neg(f.chi);
    for (auto& v : neg) v = -v;
    p.set_objective(std::move(neg));
    const auto sol = p.maximize();
    if (sol.status == lp::Status::Optimal && sol.value.sign() > 0) out.walls.push_back(sol.value);
    return out;
  }

  // M < 0 somewhere: the semistable set is an interval [lo, hi] or empty.
  lp::Problem upper(s);
  for (const auto& piece : f.pieces) upper.add_constraint(piece, Relation::LessEq, Rational(-1));
  upper.set_objective(f.chi);
  const auto hi_sol = upper.minimize();
  if (hi_sol.status != lp::Status::Optimal || hi_sol.value.sign() <= 0) return out;
  const Rational hi = hi_sol.value;

  // Newton iteration on the concave function f(delta) = min_simplex(L + delta M).
  Rational delta(0);
  while (true) {
    const Rational value = min_combination(f, delta).value;
    if (value.sign() >= 0) break;
    // Among optimal points take the smallest slope M (the right derivative).
    auto p = epigraph_problem(f);
    std::vector<Rational> row(f.chi);
    row.push_back(delta);
    p.add_constraint(std::move(row), Relation::LessEq, value);
    p.set_objective(unit_row(s + 1, s));
    const auto slope_sol = p.minimize();
    if (slope_sol.status != lp::Status::Optimal) {
      throw Error(ErrorCode::PostconditionFailed, "optimal-face slope LP did not reach an optimum");
    }
    const Rational slope = slope_sol.value;
    if (slope.sign() <= 0) return out;
    delta = delta - value / slope;
    if (delta > hi) return out;
  }
  if (delta.sign() > 0) out.walls.push_back(delta);
  if (out.walls.empty() || out.walls.back() != hi) out.walls.push_back(hi);
  return out;
}

WallReport wall_scan(const std::vector<ShapeForms>& family) {
  if (family.empty()) throw Error(ErrorCode::EmptyFamily, "no flag shapes to scan");
  std::set<Rational> walls;
  for (const auto& f : family) {
    for (auto& w : shape_walls(f).walls) walls.insert(w);
  }
  WallReport out;
  out.walls.assign(walls.begin(), walls.end());
  out.delta_threshold = out.walls.empty() ? Rational(0) : out.walls.back();

  std::vector<std::pair<Rational, bool>> samples;
  if (out.walls.empty()) {
    samples.emplace_back(Rational(1), false);
  } else {
    samples.emplace_back(out.walls.front() / 2, false);
    for (std::size_t i = 0; i < out.walls.size(); ++i) {
      samples.emplace_back(out.walls[i], true);
      if (i + 1 < out.walls.size()) samples.emplace_back((out.walls[i] + out.walls[i + 1]) / 2, false);
    }
    samples.emplace_back(out.delta_threshold + 1, false);
  }
  for (auto& [delta, on_wall] : samples) {
    Chamber ch;
    ch.sample = delta;
    ch.on_wall = on_wall;
    ch.semistable = check_semistability(family, DeltaMode{delta}, Strictness::Semi).pass;
    ch.stable = check_semistability(family, DeltaMode{delta}, Strictness::Stable).pass;
    out.chambers.push_back(std::move(ch));
  }
  out.asymptotic_semistable = check_semistability(family, AsymptoticMode{}, Strictness::Semi).pass;
  out.asymptotic_stable = check_semistability(family, AsymptoticMode{}, Strictness::Stable).pass;
  const auto& last = out.chambers.back();
  if (last.semistable != out.asymptotic_semistable || last.stable != out.asymptotic_stable) {
    throw Error(ErrorCode::PostconditionFailed, "delta verdict above the threshold differs from the asymptotic verdict");
  }
  return out;
}

WallReport wall_scan(const SwampInstance& inst) { return wall_scan(all_shape_forms(inst)); }

}  // namespace nodalstab
