#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nodalstab/nodal_transfer.hpp"

using namespace nodalstab;
using namespace nodalstab::testing;

namespace {

CurveData glued_lines(Int nodes) {
  CurveData c = smooth_curves({{0, 1}, {0, 1}});
  for (Int j = 0; j < nodes; ++j) c.marked_pairs.push_back({0, 1});
  c.connected = true;
  return c;
}

}  // namespace

TEST_CASE("rank one oracles") {
  const auto c = glued_lines(1);
  const auto f = transfer_sheaf(c, SheafData{{1, 1}, 1, std::vector<Int>{1}, std::nullopt});
  CHECK(f.euler == 2);
  CHECK(f.gps_types == std::optional<std::vector<Int>>{std::vector<Int>{1}});
  CHECK(chi_kappa(f, KappaVector::ones(1)) == Q(1));

  const auto m = transfer_sheaf(c, SheafData{{1, 1}, 0, std::vector<Int>{0}, std::nullopt});
  CHECK(m.euler == 0);
  CHECK(m.gps_types == std::optional<std::vector<Int>>{std::vector<Int>{0}});
}

TEST_CASE("locally free rank two with two nodes") {
  const auto c = glued_lines(2);
  const auto f = transfer_sheaf(c, SheafData{{2, 2}, 3, std::vector<Int>{2, 2}, std::nullopt});
  CHECK(f.euler == 7);
  CHECK(*f.gps_types == std::vector<Int>{2, 2});
}

TEST_CASE("structure sheaf of one component as a step") {
  SwampInstance nodal;
  nodal.curve = glued_lines(1);
  nodal.ambient = SheafData{{1, 1}, 1, std::vector<Int>{1}, std::nullopt};
  nodal.tensor = {1, 1};
  nodal.flags.push_back({{SubsheafRecord{{1, 0}, 1, {}, std::vector<Int>{0}}}, TensorSupport(1, 2, {{1}})});
  const auto gps = transfer_to_normalization(nodal);
  REQUIRE(gps.flags.size() == 1);
  CHECK(gps.flags[0].steps[0].euler == 1);
  CHECK(gps.flags[0].steps[0].gps_dims == std::vector<Int>{0});
  CHECK(gps.kappa.entries() == Qs({1}));
  CHECK(all_shape_forms(nodal)[0].chi == all_shape_forms(gps)[0].chi);
}

TEST_CASE("trivial flag transfers to a trivial flag") {
  SwampInstance nodal;
  nodal.curve = glued_lines(1);
  nodal.ambient = SheafData{{2, 2}, 0, std::vector<Int>{1}, std::nullopt};
  nodal.tensor = {2, 1};
  nodal.flags.push_back({{}, TensorSupport(2, 1, {{1, 1}})});
  const auto gps = transfer_to_normalization(nodal);
  CHECK(gps.flags[0].steps.empty());
  const auto v = check_semistability(gps, DeltaMode{Q(1)}, Strictness::Stable);
  CHECK(v.pass);
}

TEST_CASE("transfer rejects bad step types and missing connectivity") {
  const auto c = glued_lines(1);
  const SheafData amb{{2, 2}, 0, std::vector<Int>{1}, std::nullopt};
  CHECK(error_code_of([&] { transfer_step(c, amb, SubsheafRecord{{1, 1}, 0, {}, std::vector<Int>{2}}); }) ==
        ErrorCode::NodeTypeOutOfRange);
  CHECK(error_code_of([&] { transfer_step(c, SheafData{{2, 2}, 0, std::vector<Int>{0}, std::nullopt},
                                          SubsheafRecord{{1, 1}, 0, {}, std::vector<Int>{1}}); }) ==
        ErrorCode::StepNotDominatedByAmbient);
  SwampInstance nodal;
  nodal.curve = c;
  nodal.curve.connected = false;
  nodal.ambient = amb;
  CHECK(error_code_of([&] { transfer_to_normalization(nodal); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("realized normalized Euler characteristics") {
  CHECK(possible_normalized_eulers(2, 1, 2) == std::set<Int>{1, 2, 3, 4, 5});
  CHECK(possible_normalized_eulers(3, -1, 0) == std::set<Int>{-1});
}

TEST_CASE("reductions of structure group") {
  const CurveData c = smooth_curves({{0, 1}, {0, 1}});
  const SheafData e{{2, 2}, 4, std::nullopt, std::nullopt};
  const ReductionDatum red{{{{1, 2}, {Q(-1), Q(1)}}, {{2}, {Q(0)}}}};
  const auto mf = reduction_to_filtration(c, e, red);
  CHECK(mf.m == std::vector<Rational>{Q(1, 4), Q(1, 4)});
  CHECK(mf.step_trks == std::vector<Int>{1, 3});
  CHECK(reduction_chi(c, e, mf, {1, 3}) == Q(0));
  CHECK(reduction_chi(c, e, mf, {0, 3}) == Q(1));

  const ReductionDatum flat{{{{2}, {Q(0)}}, {{2}, {Q(0)}}}};
  CHECK(error_code_of([&] { reduction_to_filtration(c, e, flat); }) == ErrorCode::TrivialReduction);
  const ReductionDatum skew{{{{1, 2}, {Q(-1), Q(2)}}, {{2}, {Q(0)}}}};
  CHECK(error_code_of([&] { reduction_to_filtration(c, e, skew); }) == ErrorCode::ConstraintViolated);
}

TEST_CASE("property: verdicts agree across the transfer") {
  std::mt19937_64 rng(5);
  auto uni = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  for (int trial = 0; trial < 80; ++trial) {
    SwampInstance nodal;
    const Int r = uni(1, 3);
    nodal.curve = glued_lines(uni(1, 2));
    std::vector<Int> types;
    for (std::size_t j = 0; j < nodal.curve.marked_pairs.size(); ++j) types.push_back(uni(0, r));
    nodal.ambient = SheafData{{r, r}, uni(-3, 3), types, std::nullopt};
    nodal.tensor = {1, 1};
    std::vector<Int> mr{uni(0, r), uni(0, r)};
    const Int trk = mr[0] + mr[1];
    if (trk == 0 || trk == 2 * r) continue;
    std::vector<Int> st;
    for (std::size_t j = 0; j < types.size(); ++j) st.push_back(uni(0, std::min({types[j], mr[0], mr[1]})));
    nodal.flags.push_back({{SubsheafRecord{mr, uni(-3, 3), {}, st}}, TensorSupport(1, 2, {{uni(1, 2)}})});
    const auto gps = transfer_to_normalization(nodal);
    for (const auto& d : {Q(1, 2), Q(1), Q(5), Q(50)}) {
      CHECK(check_semistability(nodal, DeltaMode{d}, Strictness::Semi).pass ==
            check_semistability(gps, DeltaMode{d}, Strictness::Semi).pass);
      CHECK(check_semistability(nodal, DeltaMode{d}, Strictness::Stable).pass ==
            check_semistability(gps, DeltaMode{d}, Strictness::Stable).pass);
    }
  }
}
