#ifndef NODALSTAB_CONE_GEOMETRY_HPP
#define NODALSTAB_CONE_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "nodalstab/core_model.hpp"
#include "nodalstab/exec.hpp"
#include "nodalstab/filtration_calculus.hpp"
#include "nodalstab/invariant_calculus.hpp"
#include "nodalstab/rational.hpp"

namespace nodalstab {

/// Phi(r, P) on the simplicial cone spanned by Gamma^(r_1), ..., Gamma^(r_s).
struct ConeFunction {
  Int alpha = 0;
  std::vector<Int> ranks;  // r_1 < ... < r_{s+1} = alpha
  TensorSupport support;   // over {1..s+1}^a

  std::size_t s() const { return ranks.size() - 1; }
  std::vector<std::vector<Rational>> generators() const;
  /// Gram matrix of the generators, computed entrywise by dot products.
  std::vector<std::vector<Rational>> gram() const;
  /// Phi(v) = -min over P of v_{r_{i_1}} + ... + v_{r_{i_a}}, for v in Q^alpha.
  Rational phi(const std::vector<Rational>& v) const;
  /// Phi(sum x_k Gamma^(r_k)) as the maximum of these linear forms in x.
  ShapeForms forms() const;
};

/// i * alpha * (alpha - j) for i <= j.
Rational gram_closed_form(Int alpha, Int i, Int j);

/// Number of nonempty upward-closed subsets of {1..n}^a, or nullopt when it
/// exceeds `cap` (only possible for a >= 4, where it is counted by enumeration).
std::optional<Integer> count_upsets(Int n, Int a, std::uint64_t cap);

/// Total number of (rank tuple, P) pairs for (alpha, a), or nullopt beyond cap.
std::optional<Integer> count_cone_functions(Int alpha, Int a, std::uint64_t cap);

constexpr std::uint64_t kDefaultConeCeiling = 1'000'000;

/// All (r, P) pairs, s = 0 included, in canonical order (rank tuples
/// lexicographically, then upsets in enumeration order).
/// Throws CombinatorialExplosionGuard when the count exceeds `ceiling`.
std::vector<ConeFunction> enumerate_cone_functions(Int alpha, Int a, std::uint64_t ceiling = kDefaultConeCeiling);

struct K0Result {
  Rational k0_squared;
  Rational max_norm_squared;           // 1 / k0_squared
  std::vector<Rational> argmax_vertex;  // generator coordinates
  std::vector<Integer> integral_ray;    // argmax_vertex scaled to primitive integers
};

/// nullopt when Phi <= 0 somewhere on the cone. Throws DegenerateCone for s = 0.
std::optional<K0Result> k0_compute(const ConeFunction& cf);

/// Vertices of {x >= 0 : piece(x) <= 1 for every piece}, assuming boundedness.
std::vector<std::vector<Rational>> polytope_vertices(const ShapeForms& forms);

struct BoundsInput {
  Int rank = 1;  // uniform rank r
  Int chi = 0;
  KappaVector kappa;
  std::vector<Int> gps_types;  // t_j
  CurveData curve;
  Int a = 1;
  std::uint64_t ceiling = kDefaultConeCeiling;
  /// Optional family whose own walls enter delta_infinity.
  std::vector<ShapeForms> family;
};

struct BoundsRecord {
  Int alpha = 0;
  Rational D;
  Rational K0_squared;
  Rational K1;
  Rational B_squared;
  Integer B_ceil;                   // ceil(sqrt(B_squared))
  Rational chi_kappa;               // chi_kappa(E)
  Rational chibar_kappa_max_bound;  // chi_kappa(E)/alpha + B_ceil
  Rational chibar_max_bound;        // + D
  std::vector<Rational> K_components;  // ell_i * chibar_max_bound - 1 + g_i
  Rational K;
  Rational delta_infinity;
  Rational delta_cap;
  std::uint64_t cone_function_count = 0;
  std::uint64_t k0_defined_count = 0;
  std::optional<std::size_t> k0_argmin;  // index into the enumeration
  std::vector<Int> k0_argmin_ranks;
  std::vector<std::vector<Int>> k0_argmin_support;
  std::vector<Integer> k0_integral_ray;
  Rational family_threshold;  // wall_scan threshold of the supplied family (0 if none)
};

BoundsRecord bounds_pipeline(const BoundsInput& in, Exec exec = Exec::Parallel);

/// The shape of cf with chi(E_i) = floor(r_i * chibar_max_bound) and zero gps
/// dimensions: the most negative chi form the slope bound permits.
ShapeForms worst_case_forms(const ConeFunction& cf, const Rational& chi_kappa, const Rational& chibar_max_bound);

/// Per-shape threshold max{-L : m >= 0, M(m) <= 1}; nullopt when unbounded.
std::optional<Rational> shape_threshold(const ShapeForms& forms);

}  // namespace nodalstab

#endif
