#include "nodalstab/invariant_calculus.hpp"

#include <algorithm>

namespace nodalstab {

KappaVector::KappaVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (const auto& k : entries_) {
    if (k.sign() <= 0) throw Error(ErrorCode::NonPositiveKappa, "kappa entries must be positive, got " + to_string(k));
  }
}

KappaVector KappaVector::ones(std::size_t count) { return KappaVector(std::vector<Rational>(count, Rational(1))); }

Rational chi_kappa(Int euler, std::span<const Int> gps_dims, const KappaVector& kappa) {
  if (gps_dims.size() != kappa.size()) {
    throw Error(ErrorCode::KappaLengthMismatch, "kappa has " + std::to_string(kappa.size()) + " entries but " +
                                                    std::to_string(gps_dims.size()) + " gps dimensions were given");
  }
  Rational out(euler);
  for (std::size_t j = 0; j < gps_dims.size(); ++j) out -= kappa[j] * gps_dims[j];
  return out;
}

Rational chi_kappa(const SheafData& sheaf, const KappaVector& kappa) {
  if (!sheaf.gps_types) {
    if (!kappa.empty()) throw Error(ErrorCode::MissingGpsTypes, "sheaf has no gps_types but kappa is non-empty");
    return Rational(sheaf.euler);
  }
  return chi_kappa(sheaf.euler, *sheaf.gps_types, kappa);
}

Rational chi_kappa(const SubsheafRecord& sub, const KappaVector& kappa) {
  if (sub.gps_dims.size() != kappa.size()) {
    throw Error(ErrorCode::MissingGpsDims, "subsheaf record lacks gps dimensions for every marked pair");
  }
  return chi_kappa(sub.euler, sub.gps_dims, kappa);
}

Rational kappa_slope(const Rational& chi_kappa_value, Int trk) {
  if (trk == 0) throw Error(ErrorCode::ZeroTotalRank, "slope of a sheaf with total rank 0");
  return chi_kappa_value / trk;
}

ChiBarExtremes hn_extremes(const CurveData& curve, const HNProfile& profile) {
  if (profile.components.size() != curve.components.size()) {
    throw Error(ErrorCode::MultirankLengthMismatch, "HN profile length does not match the number of components");
  }
  std::optional<ChiBarExtremes> out;
  for (std::size_t i = 0; i < curve.components.size(); ++i) {
    const auto& ext = profile.components[i];
    if (!ext) continue;
    if (ext->mu_max < ext->mu_min) throw Error(ErrorCode::InvalidArgument, "mu_max < mu_min on a component");
    const auto& comp = curve.components[i];
    const Rational hi = (ext->mu_max + 1 - comp.genus) / comp.ell;
    const Rational lo = (ext->mu_min + 1 - comp.genus) / comp.ell;
    if (!out) {
      out = ChiBarExtremes{hi, lo};
    } else {
      out->chibar_max = std::max(out->chibar_max, hi);
      out->chibar_min = std::min(out->chibar_min, lo);
    }
  }
  if (!out) throw Error(ErrorCode::AllComponentsZero, "every component of the sheaf is zero");
  return *out;
}

bool DWindow::contains(const SlopeQuad& q) const {
  return q.chibar_max - width <= q.chibar_kappa_max && q.chibar_kappa_max <= q.chibar_max &&
         q.chibar_min <= q.chibar_kappa_min && q.chibar_kappa_min <= q.chibar_min + width;
}

namespace {

Int require_uniform_rank(const SheafData& sheaf) {
  const auto r = sheaf.uniform_rank();
  if (!r) throw Error(ErrorCode::NonUniformRank, "operation requires a sheaf of uniform rank");
  return *r;
}

}  // namespace

DWindow d_window(const CurveData& curve, const SheafData& sheaf, const KappaVector& kappa) {
  const Int r = require_uniform_rank(sheaf);
  if (!sheaf.gps_types) throw Error(ErrorCode::MissingGpsTypes, "D-window needs the gps type of the sheaf");
  const auto& types = *sheaf.gps_types;
  if (types.size() != kappa.size()) throw Error(ErrorCode::KappaLengthMismatch, "kappa length differs from gps type length");
  Rational weighted;
  for (std::size_t j = 0; j < types.size(); ++j) weighted += kappa[j] * types[j];
  return DWindow{Rational(r * curve.ell_sum()) * weighted};
}

Rational twist_euler(const CurveData& curve, const SheafData& sheaf, std::span<const Int> twist_degrees) {
  const Int r = require_uniform_rank(sheaf);
  if (twist_degrees.size() != curve.components.size()) {
    throw Error(ErrorCode::InvalidArgument, "twist needs one degree per component");
  }
  Int total = 0;
  for (auto n : twist_degrees) total += n;
  return Rational(r * total + sheaf.euler);
}

Rational dual_euler(const CurveData& curve, const SheafData& sheaf) {
  const Int r = require_uniform_rank(sheaf);
  return Rational(-sheaf.euler + 2 * r * curve.euler_structure_sheaf());
}

Rational omega_dual_euler(const CurveData&, const SheafData& sheaf) {
  require_uniform_rank(sheaf);
  return Rational(-sheaf.euler);
}

Int canonical_degree_sum(const CurveData& curve) { return -2 * curve.euler_structure_sheaf(); }

bool dual_iso_criterion(const CurveData& curve, const SheafData& sheaf) {
  const Int r = require_uniform_rank(sheaf);
  const bool by_euler = sheaf.euler == r * curve.euler_structure_sheaf();
  const bool by_degree = basic_invariants(curve, sheaf).degree_ell.is_zero();
  if (by_euler != by_degree) {
    throw Error(ErrorCode::PostconditionFailed, "chi = r chi(O) disagrees with deg_ell = 0");
  }
  return by_euler;
}

}  // namespace nodalstab
