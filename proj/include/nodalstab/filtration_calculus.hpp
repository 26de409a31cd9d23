#ifndef NODALSTAB_FILTRATION_CALCULUS_HPP
#define NODALSTAB_FILTRATION_CALCULUS_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nodalstab/core_model.hpp"
#include "nodalstab/exec.hpp"
#include "nodalstab/invariant_calculus.hpp"
#include "nodalstab/rational.hpp"

namespace nodalstab {

/// A linear form in the filtration weights m_1..m_s.
using LinearForm = std::vector<Rational>;

Rational evaluate(const LinearForm& form, std::span<const Rational> m);

struct TensorType {
  Int a = 1;  // arity
  Int b = 1;  // number of copies
};

/// Support pattern P of a tensor field on a flag with `levels` = s+1 steps.
/// Tuples are 1-based. The stored set is the upward closure of the supplied
/// generators in the componentwise order, kept sorted.
class TensorSupport {
 public:
  TensorSupport() = default;
  TensorSupport(Int arity, Int levels, std::vector<std::vector<Int>> generators);

  Int arity() const { return arity_; }
  Int levels() const { return levels_; }
  const std::vector<std::vector<Int>>& tuples() const { return tuples_; }
  bool contains(std::span<const Int> tuple) const;
  /// Minimal tuples of the closed set (these alone determine mu for m >= 0).
  std::vector<std::vector<Int>> minimal_elements() const;

 private:
  Int arity_ = 0;
  Int levels_ = 0;
  std::vector<std::vector<Int>> tuples_;
};

/// Gamma^(i) in Q^alpha: i entries (i - alpha) followed by (alpha - i) entries i.
std::vector<Rational> gamma_generator(Int alpha, Int i);

struct GammaData {
  std::vector<Rational> gamma;         // Gamma_bullet, length alpha
  std::vector<Rational> step_weights;  // Gamma(1..s+1)
};

/// step_trks are trk(E_1) < ... < trk(E_s), all in (0, alpha).
GammaData gamma_data(Int alpha, std::span<const Int> step_trks, std::span<const Rational> m);

/// Gamma(k), k = 1..s+1, as linear forms in m.
std::vector<LinearForm> step_weight_forms(Int alpha, std::span<const Int> step_trks);

/// mu = -min over P of Gamma(i_1) + ... + Gamma(i_a).
Rational mu_of_filtration(Int alpha, std::span<const Int> step_trks, std::span<const Rational> m,
                          const TensorSupport& support);

struct WeightedFiltration {
  std::vector<SubsheafRecord> steps;
  std::vector<Rational> m;
};

/// chi of a step or of the ambient: chi_kappa when kappa is non-empty, plain chi otherwise.
Rational effective_chi(Int euler, std::span<const Int> gps_dims, const KappaVector& kappa);
Rational effective_chi(const SheafData& sheaf, const KappaVector& kappa);

/// sum_i m_i (chi_k(E) trk(E_i) - chi_k(E_i) trk(E)) as a linear form in m.
LinearForm chi_form(const CurveData& curve, const SheafData& ambient, std::span<const SubsheafRecord> steps,
                    const KappaVector& kappa);
Rational chi_of_filtration(const CurveData& curve, const SheafData& ambient, const WeightedFiltration& filt,
                           const KappaVector& kappa);

// ---------------------------------------------------------------------------
// Flag merging

/// Flag 0 < E_1 < ... < E_k = full of one component, with strictly increasing
/// weights. An empty flag is only allowed on a rank-0 component.
struct ComponentFlag {
  std::vector<Int> dims;
  std::vector<Rational> weights;
};

struct MergedFiltration {
  Int alpha = 0;
  std::vector<std::vector<Int>> step_multiranks;  // s proper steps
  std::vector<Int> step_trks;
  std::vector<Rational> m;
  std::vector<Rational> step_weights;  // Gamma(1) < ... < Gamma(s+1)
};

/// Sum_j ell_j * Sum_k (dim jump) * weight_k; merge_flags requires it to vanish.
Rational flag_constraint(const CurveData& curve, std::span<const ComponentFlag> flags);

MergedFiltration merge_flags(const CurveData& curve, std::span<const Int> multirank,
                             std::span<const ComponentFlag> flags);

// ---------------------------------------------------------------------------
// Semistability

struct FlagShape {
  std::vector<SubsheafRecord> steps;
  TensorSupport support;
};

struct SwampInstance {
  CurveData curve;
  SheafData ambient;
  KappaVector kappa;
  TensorType tensor;
  std::vector<FlagShape> flags;
};

/// Collects every consistency problem of the instance. Never throws.
std::vector<Diagnostic> validate_swamp(const SwampInstance& inst);
void require_valid_swamp(const SwampInstance& inst);

/// The data deciding one shape: L(m) = chi form, M(m) = max over pieces.
struct ShapeForms {
  Int alpha = 0;
  std::vector<Int> step_trks;
  LinearForm chi;
  std::vector<LinearForm> pieces;

  std::size_t dim() const { return chi.size(); }
  Rational mu(std::span<const Rational> m) const;
};

ShapeForms shape_forms(const SwampInstance& inst, std::size_t shape_index);
/// Builds forms directly (used for synthetic families); pieces are deduplicated.
ShapeForms make_shape_forms(Int alpha, std::vector<Int> step_trks, LinearForm chi, const TensorSupport& support);

enum class Strictness { Semi, Stable };

struct DeltaMode {
  Rational delta;
};
struct AsymptoticMode {};
using Mode = std::variant<DeltaMode, AsymptoticMode>;

struct ShapeVerdict {
  bool pass = true;
  std::string condition;      // "delta", "asymptotic-mu", "asymptotic-chi" or "" for trivial shapes
  std::optional<Rational> value;  // optimal value of the deciding LP; nullopt when it is infeasible
  std::vector<Rational> witness;  // optimal vertex m
};

/// min of M over the simplex {m >= 0, sum m = 1}.
Rational mu_minimum(const ShapeForms& forms);

ShapeVerdict decide_shape(const ShapeForms& forms, const Mode& mode, Strictness strictness);

struct Verdict {
  bool pass = true;
  std::optional<std::size_t> failing_shape;  // first failing shape in index order
  std::vector<ShapeVerdict> shapes;
};

Verdict check_semistability(const std::vector<ShapeForms>& family, const Mode& mode, Strictness strictness,
                            Exec exec = Exec::Parallel);
Verdict check_semistability(const SwampInstance& inst, const Mode& mode, Strictness strictness,
                            Exec exec = Exec::Parallel);

/// Interval structure of the delta-semistable set {delta > 0 : min_simplex(L + delta M) >= 0}.
struct ShapeWalls {
  Rational mu_min;            // min of M over the simplex
  std::vector<Rational> walls;  // positive critical deltas, sorted
};

ShapeWalls shape_walls(const ShapeForms& forms);

struct Chamber {
  Rational sample;  // a delta inside the chamber (or the wall itself)
  bool on_wall = false;
  bool semistable = false;
  bool stable = false;
};

struct WallReport {
  std::vector<Rational> walls;
  Rational delta_threshold;
  std::vector<Chamber> chambers;
  bool asymptotic_semistable = false;
  bool asymptotic_stable = false;
};

/// Throws PostconditionFailed if the verdict above the threshold differs from
/// the asymptotic verdict.
WallReport wall_scan(const std::vector<ShapeForms>& family);
WallReport wall_scan(const SwampInstance& inst);

std::vector<ShapeForms> all_shape_forms(const SwampInstance& inst);

}  // namespace nodalstab

#endif
