#ifndef NODALSTAB_NODAL_TRANSFER_HPP
#define NODALSTAB_NODAL_TRANSFER_HPP

#include <optional>
#include <set>
#include <vector>

#include "nodalstab/filtration_calculus.hpp"

// Passage from torsion free sheaves on a nodal curve to sheaves with a
// generalized parabolic structure on its normalization. A stalk of type
// O^a + m^(r-a) at a node contributes a GPS quotient of dimension a and raises
// the Euler characteristic by a.
namespace nodalstab {

/// A nodal instance is a SwampInstance whose ambient sheaf carries node_types
/// (and whose steps carry node_types); kappa is empty.
bool is_nodal_instance(const SwampInstance& inst);

/// GPS-side ambient data: chi(F) = chi(E) + sum a_i, t_i = a_i.
SheafData transfer_sheaf(const CurveData& curve, const SheafData& nodal);

/// One step; step node types b_i must satisfy b_i <= ambient a_i and
/// b_i <= min(step rank at both branch components).
SubsheafRecord transfer_step(const CurveData& curve, const SheafData& nodal_ambient, const SubsheafRecord& step);

/// Full instance transfer with kappa = (1, ..., 1). Checks chi_1(F) = chi(E),
/// stepwise trk preservation, equality of the chi forms coefficient by
/// coefficient, and equality of mu on a grid of weights.
SwampInstance transfer_to_normalization(const SwampInstance& nodal);

/// The flag shape on the GPS side for one nodal flag.
FlagShape transfer_filtration(const CurveData& curve, const SheafData& nodal_ambient, const FlagShape& flag);

/// {chi + sum a_i : a in [0, r]^c}.
std::set<Int> possible_normalized_eulers(Int rank, Int chi, Int num_nodes);

/// Per-component weighted flags coming from 1-PS of SL (trace-free weights).
struct ReductionDatum {
  std::vector<ComponentFlag> flags;
};

/// Delegates to merge_flags after checking trace-freeness per component.
/// Throws TrivialReduction when every component flag is constant.
MergedFiltration reduction_to_filtration(const CurveData& curve, const SheafData& sheaf, const ReductionDatum& red);

/// chi(E(beta)_., m(beta)_.) for the reduction, given the Euler characteristics
/// of its steps (multiranks must match the merged flag).
Rational reduction_chi(const CurveData& curve, const SheafData& sheaf, const MergedFiltration& merged,
                       const std::vector<Int>& step_eulers);

}  // namespace nodalstab

#endif
