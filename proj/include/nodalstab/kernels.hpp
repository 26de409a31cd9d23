#ifndef NODALSTAB_KERNELS_HPP
#define NODALSTAB_KERNELS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "nodalstab/cone_geometry.hpp"
#include "nodalstab/filtration_calculus.hpp"
#include "nodalstab/git_weights.hpp"

// Embarrassingly parallel hot loops. Each kernel has a serial reference and an
// OpenMP version; both return results in index order, so their outputs are
// identical and the serial one is the test oracle for the parallel one.
namespace nodalstab::kernels {

std::vector<ShapeVerdict> evaluate_shapes_serial(const std::vector<ShapeForms>& family, const Mode& mode,
                                                 Strictness strictness);
std::vector<ShapeVerdict> evaluate_shapes_parallel(const std::vector<ShapeForms>& family, const Mode& mode,
                                                   Strictness strictness);

/// The integer box [-bound, bound]^(sum r_i) of diagonal 1-PS weights.
struct WeightBox {
  std::vector<Int> ranks;
  std::vector<Int> ells;
  std::vector<std::vector<WeightVector>> supports;
  Int bound = 0;
};

constexpr std::uint64_t kMaxBoxPoints = 400'000'000;

struct BoxScan {
  std::uint64_t tested = 0;                        // points satisfying the null relation
  std::optional<std::uint64_t> first_destabilizer;  // smallest linear index with mu < 0
};

/// Throws CombinatorialExplosionGuard above kMaxBoxPoints.
std::uint64_t box_size(const WeightBox& box);
std::vector<std::vector<Int>> decode_box_point(const WeightBox& box, std::uint64_t index);

BoxScan scan_weight_box_serial(const WeightBox& box);
BoxScan scan_weight_box_parallel(const WeightBox& box);

std::vector<std::optional<K0Result>> sweep_k0_serial(const std::vector<ConeFunction>& cfs);
std::vector<std::optional<K0Result>> sweep_k0_parallel(const std::vector<ConeFunction>& cfs);

/// Worst-case threshold of each cone function's shape when every step has the
/// largest Euler characteristic allowed by the slope bound.
std::vector<std::optional<Rational>> sweep_thresholds_serial(const std::vector<ConeFunction>& cfs,
                                                             const Rational& chi_kappa,
                                                             const Rational& chibar_max_bound);
std::vector<std::optional<Rational>> sweep_thresholds_parallel(const std::vector<ConeFunction>& cfs,
                                                               const Rational& chi_kappa,
                                                               const Rational& chibar_max_bound);

}  // namespace nodalstab::kernels

#endif
