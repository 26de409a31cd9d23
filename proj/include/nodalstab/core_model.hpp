#ifndef NODALSTAB_CORE_MODEL_HPP
#define NODALSTAB_CORE_MODEL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nodalstab/error.hpp"
#include "nodalstab/rational.hpp"

/// Discrete data model for (possibly reducible) nodal curves, their
/// normalizations with marked point pairs, and the invariants of torsion free
/// sheaves living on them. Sheaves are never represented by sections; every
/// computation in this project consumes only these invariants.
namespace nodalstab {

using Int = std::int64_t;

struct Component {
  Int genus = 0;
  Int ell = 1;  // degree of the polarization on this component
};

/// Dual-graph model of a curve. Each marked pair is either a node of the glued
/// curve or a pair of generalized-parabolic points on the disjoint smooth
/// curve; the same record serves both readings.
struct CurveData {
  std::vector<Component> components;
  std::vector<std::pair<Int, Int>> marked_pairs;
  bool connected = false;

  std::size_t num_components() const { return components.size(); }
  std::size_t num_pairs() const { return marked_pairs.size(); }
  Int ell_sum() const;
  /// chi(O) of the glued curve: sum(1 - g_i) - c.
  Int euler_structure_sheaf() const;
  Int arithmetic_genus() const { return 1 - euler_structure_sheaf(); }
};

struct SheafData {
  std::vector<Int> multirank;
  Int euler = 0;
  std::optional<std::vector<Int>> node_types;  // free rank a_i of the stalk at each node
  std::optional<std::vector<Int>> gps_types;   // t_i = dim R_i at each marked pair

  bool is_nodal() const { return node_types.has_value(); }
  std::optional<Int> uniform_rank() const;
};

struct SubsheafRecord {
  std::vector<Int> multirank;
  Int euler = 0;
  std::vector<Int> gps_dims;                   // s_i = dim S_i (GPS reading)
  std::optional<std::vector<Int>> node_types;  // stalk types (nodal reading)
};

Int total_rank(const CurveData& curve, std::span<const Int> multirank);

struct Diagnostic {
  ErrorCode code;
  std::string message;
};

struct ValidatedInstance {
  CurveData curve;
  SheafData sheaf;
  Int euler_structure_sheaf = 0;
  Int arithmetic_genus = 0;
  Int total_rank = 0;
  bool uniform_rank = false;
};

struct Validation {
  std::optional<ValidatedInstance> instance;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return instance.has_value(); }
};

/// Collects every problem with the pair instead of stopping at the first one.
/// Never throws.
Validation validate_instance(const CurveData& curve, const SheafData& sheaf);

/// Throws Error carrying the first diagnostic if the instance is invalid.
ValidatedInstance require_valid(const CurveData& curve, const SheafData& sheaf);

struct BasicInvariants {
  Int total_rank = 0;
  Rational rank_ell;
  Rational degree_ell;
};

/// Riemann–Roch normalised rank and degree with respect to the polarization:
/// rk = trk / sum(ell), deg = chi - rk * chi(O).
BasicInvariants basic_invariants(const CurveData& curve, std::span<const Int> multirank, Int euler);
BasicInvariants basic_invariants(const CurveData& curve, const SheafData& sheaf);

}  // namespace nodalstab

#endif
