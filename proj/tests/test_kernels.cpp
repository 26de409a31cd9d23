#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nodalstab/kernels.hpp"

using namespace nodalstab;
using namespace nodalstab::testing;

namespace {

bool same(const std::optional<K0Result>& a, const std::optional<K0Result>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->k0_squared == b->k0_squared && a->argmax_vertex == b->argmax_vertex && a->integral_ray == b->integral_ray;
}

}  // namespace

TEST_CASE("shape evaluation: serial and parallel agree") {
  std::mt19937_64 rng(11);
  auto uni = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  std::vector<ShapeForms> fam;
  for (int i = 0; i < 64; ++i) {
    const Int alpha = uni(3, 5);
    std::vector<Int> trks{1, uni(2, alpha - 1)};
    if (trks[1] == trks[0]) trks.pop_back();
    LinearForm chi;
    for (std::size_t k = 0; k < trks.size(); ++k) chi.push_back(Q(uni(-5, 5)));
    const Int levels = static_cast<Int>(trks.size()) + 1;
    fam.push_back(make_shape_forms(alpha, trks, chi, TensorSupport(2, levels, {{uni(1, levels), uni(1, levels)}})));
  }
  for (const Mode& mode : {Mode{DeltaMode{Q(3, 2)}}, Mode{AsymptoticMode{}}}) {
    for (auto st : {Strictness::Semi, Strictness::Stable}) {
      const auto a = kernels::evaluate_shapes_serial(fam, mode, st);
      const auto b = kernels::evaluate_shapes_parallel(fam, mode, st);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].condition == b[i].condition);
        CHECK(a[i].value == b[i].value);
        CHECK(a[i].witness == b[i].witness);
      }
    }
  }
}

TEST_CASE("weight box decoding and scans") {
  kernels::WeightBox box{{1, 2}, {1, 1}, {{{1}}, {{1, 0}, {0, 1}}}, 1};
  CHECK(kernels::box_size(box) == 27);
  CHECK(kernels::decode_box_point(box, 0) == std::vector<std::vector<Int>>{{-1}, {-1, -1}});
  CHECK(kernels::decode_box_point(box, 26) == std::vector<std::vector<Int>>{{1}, {1, 1}});
  const auto a = kernels::scan_weight_box_serial(box);
  const auto b = kernels::scan_weight_box_parallel(box);
  CHECK(a.tested == b.tested);
  CHECK(a.first_destabilizer == b.first_destabilizer);
  CHECK(a.tested == 7);  // x + y + z = 0 in {-1,0,1}^3

  kernels::WeightBox huge{{3, 3, 3}, {1, 1, 1}, {{}, {}, {}}, 20};
  CHECK(error_code_of([&] { kernels::box_size(huge); }) == ErrorCode::CombinatorialExplosionGuard);
}

TEST_CASE("cone sweeps: serial and parallel agree") {
  const auto cfs = enumerate_cone_functions(4, 2);
  std::vector<ConeFunction> positive;
  for (const auto& cf : cfs) {
    if (cf.s() > 0) positive.push_back(cf);
  }
  const auto a = kernels::sweep_k0_serial(positive);
  const auto b = kernels::sweep_k0_parallel(positive);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(same(a[i], b[i]));
  const auto ta = kernels::sweep_thresholds_serial(positive, Q(3), Q(7, 2));
  const auto tb = kernels::sweep_thresholds_parallel(positive, Q(3), Q(7, 2));
  CHECK(ta == tb);
}

TEST_CASE("pipeline result does not depend on the execution policy") {
  BoundsInput in;
  in.rank = 1;
  in.chi = 1;
  in.curve = smooth_curves({{0, 1}, {0, 2}});
  in.a = 2;
  const auto s = bounds_pipeline(in, Exec::Serial);
  const auto p = bounds_pipeline(in, Exec::Parallel);
  CHECK(s.K0_squared == p.K0_squared);
  CHECK(s.delta_infinity == p.delta_infinity);
  CHECK(s.k0_argmin == p.k0_argmin);
  CHECK(s.k0_defined_count == p.k0_defined_count);
}
