#ifndef NODALSTAB_INVARIANT_CALCULUS_HPP
#define NODALSTAB_INVARIANT_CALCULUS_HPP

#include <optional>
#include <span>
#include <vector>

#include "nodalstab/core_model.hpp"
#include "nodalstab/rational.hpp"

namespace nodalstab {

/// Positive rational parabolic weights, one per marked pair.
class KappaVector {
 public:
  KappaVector() = default;
  explicit KappaVector(std::vector<Rational> entries);

  static KappaVector ones(std::size_t count);

  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<Rational> entries_;
};

/// chi_kappa = chi - sum kappa_j * dim_j.
Rational chi_kappa(Int euler, std::span<const Int> gps_dims, const KappaVector& kappa);
Rational chi_kappa(const SheafData& sheaf, const KappaVector& kappa);
Rational chi_kappa(const SubsheafRecord& sub, const KappaVector& kappa);

/// chi_kappa / trk; throws ZeroTotalRank when trk == 0.
Rational kappa_slope(const Rational& chi_kappa_value, Int trk);

struct SlopeExtremes {
  Rational mu_max;
  Rational mu_min;
};

/// Declared Harder–Narasimhan slope extremes of E(i) per component;
/// nullopt marks a zero restriction.
struct HNProfile {
  std::vector<std::optional<SlopeExtremes>> components;
};

struct ChiBarExtremes {
  Rational chibar_max;
  Rational chibar_min;
};

ChiBarExtremes hn_extremes(const CurveData& curve, const HNProfile& profile);

/// Reduced-slope extremes of a sheaf with and without its parabolic structure.
struct SlopeQuad {
  Rational chibar_max;
  Rational chibar_kappa_max;
  Rational chibar_min;
  Rational chibar_kappa_min;
};

struct DWindow {
  Rational width;  // D = r * sum(ell) * sum(kappa_j t_j)

  /// max - D <= kappa_max <= max  and  min <= kappa_min <= min + D.
  bool contains(const SlopeQuad& q) const;
};

DWindow d_window(const CurveData& curve, const SheafData& sheaf, const KappaVector& kappa);

// Appendix identities for sheaves of uniform rank on a nodal curve.

/// chi(E ⊗ N) for a line bundle N with degrees n_i on the components.
Rational twist_euler(const CurveData& curve, const SheafData& sheaf, std::span<const Int> twist_degrees);
/// chi(E^dual) = -chi(E) + 2 r chi(O).
Rational dual_euler(const CurveData& curve, const SheafData& sheaf);
/// chi(Hom(E, omega)) = -chi(E).
Rational omega_dual_euler(const CurveData& curve, const SheafData& sheaf);
/// Sum of the degrees of the dualizing sheaf on the components: -2 chi(O).
Int canonical_degree_sum(const CurveData& curve);

/// chi(E) == r * chi(O); cross-checked against deg_ell(E) == 0.
bool dual_iso_criterion(const CurveData& curve, const SheafData& sheaf);

}  // namespace nodalstab

#endif
