#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nodalstab/filtration_calculus.hpp"

using namespace nodalstab;
using namespace nodalstab::testing;

namespace {

// Two rational lines, ambient multirank (1,1), chi 2, one step (1,0) with chi 2:
// L(m) = -2 m_1 and M(m) = m_1.
SwampInstance wall_instance() {
  SwampInstance inst;
  inst.curve = smooth_curves({{0, 1}, {0, 1}});
  inst.ambient = SheafData{{1, 1}, 2, std::nullopt, std::nullopt};
  inst.tensor = {1, 1};
  inst.flags.push_back({{SubsheafRecord{{1, 0}, 2, {}, std::nullopt}}, TensorSupport(1, 2, {{1}})});
  return inst;
}

}  // namespace

TEST_CASE("Gamma generators and the merged example vector") {
  CHECK(gamma_generator(3, 1) == Qs({-2, 1, 1}));
  CHECK(gamma_generator(4, 0) == Qs({0, 0, 0, 0}));
  const std::vector<Int> trks{1, 3};
  const std::vector<Rational> m{Q(1, 4), Q(1, 4)};
  const auto gd = gamma_data(4, trks, m);
  CHECK(gd.gamma == Qs({-1, 0, 0, 1}));
  CHECK(gd.step_weights == Qs({-1, 0, 1}));
}

TEST_CASE("tensor support closure") {
  const TensorSupport p(2, 3, {{2, 1}});
  CHECK(p.tuples() == std::vector<std::vector<Int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}});
  CHECK(p.contains(std::vector<Int>{3, 1}));
  CHECK_FALSE(p.contains(std::vector<Int>{1, 3}));
  CHECK(p.minimal_elements() == std::vector<std::vector<Int>>{{2, 1}});
  CHECK(error_code_of([] { TensorSupport(1, 2, {}); }) == ErrorCode::EmptySupport);
  CHECK(error_code_of([] { TensorSupport(1, 2, {{3}}); }) == ErrorCode::InvalidSupportTuple);
  CHECK(error_code_of([] { TensorSupport(2, 2, {{1}}); }) == ErrorCode::InvalidSupportTuple);
}

TEST_CASE("mu of a filtration") {
  const std::vector<Int> none;
  CHECK(mu_of_filtration(3, none, std::vector<Rational>{}, TensorSupport(2, 1, {{1, 1}})) == Q(0));
  const std::vector<Int> trk{1};
  const std::vector<Rational> m{Q(1)};
  CHECK(mu_of_filtration(2, trk, m, TensorSupport(1, 2, {{1}})) == Q(1));
  CHECK(mu_of_filtration(2, trk, m, TensorSupport(2, 2, {{1, 2}})) == Q(0));
  CHECK(error_code_of([&] { mu_of_filtration(2, trk, std::vector<Rational>{Q(-1)}, TensorSupport(1, 2, {{1}})); }) ==
        ErrorCode::NonPositiveWeight);
  CHECK(error_code_of([&] { mu_of_filtration(2, std::vector<Int>{2}, m, TensorSupport(1, 2, {{1}})); }) ==
        ErrorCode::StepRankOutOfRange);
}

TEST_CASE("chi of a filtration") {
  const auto inst = wall_instance();
  CHECK(chi_form(inst.curve, inst.ambient, inst.flags[0].steps, inst.kappa) == Qs({-2}));
  WeightedFiltration filt{inst.flags[0].steps, {Q(1)}};
  CHECK(chi_of_filtration(inst.curve, inst.ambient, filt, inst.kappa) == Q(-2));
  WeightedFiltration trivial{{}, {}};
  CHECK(chi_of_filtration(inst.curve, inst.ambient, trivial, inst.kappa) == Q(0));
}

TEST_CASE("merge_flags worked example") {
  const CurveData c = smooth_curves({{0, 1}, {0, 1}});
  const std::vector<Int> ranks{2, 2};
  const std::vector<ComponentFlag> flags{{{1, 2}, {Q(-1), Q(1)}}, {{2}, {Q(0)}}};
  const auto mf = merge_flags(c, ranks, flags);
  CHECK(mf.alpha == 4);
  CHECK(mf.step_weights == Qs({-1, 0, 1}));
  CHECK(mf.step_multiranks == std::vector<std::vector<Int>>{{1, 0}, {1, 2}});
  CHECK(mf.step_trks == std::vector<Int>{1, 3});
  CHECK(mf.m == std::vector<Rational>{Q(1, 4), Q(1, 4)});
  const auto gd = gamma_data(mf.alpha, mf.step_trks, mf.m);
  CHECK(gd.gamma == Qs({-1, 0, 0, 1}));
  CHECK(gd.gamma[0] == mf.step_weights[0]);
  CHECK(gd.gamma[2] == mf.step_weights[1]);
  CHECK(gd.gamma[3] == mf.step_weights[2]);
}

TEST_CASE("merge_flags trivial and invalid inputs") {
  const CurveData c = smooth_curves({{0, 1}, {0, 1}});
  const std::vector<Int> ranks{2, 2};
  const std::vector<ComponentFlag> trivial{{{2}, {Q(0)}}, {{2}, {Q(0)}}};
  const auto mf = merge_flags(c, ranks, trivial);
  CHECK(mf.step_trks.empty());
  CHECK(mf.m.empty());
  const std::vector<ComponentFlag> bad{{{1, 2}, {Q(-1), Q(2)}}, {{2}, {Q(0)}}};
  CHECK(error_code_of([&] { merge_flags(c, ranks, bad); }) == ErrorCode::ConstraintViolated);
  const std::vector<ComponentFlag> dec{{{1, 2}, {Q(1), Q(-1)}}, {{2}, {Q(0)}}};
  CHECK(error_code_of([&] { merge_flags(c, ranks, dec); }) == ErrorCode::NonIncreasingWeights);
}

TEST_CASE("delta-mode decisions on the single-wall shape") {
  const auto fam = all_shape_forms(wall_instance());
  REQUIRE(fam.size() == 1);
  CHECK(fam[0].chi == Qs({-2}));
  CHECK(fam[0].pieces == std::vector<LinearForm>{Qs({1})});

  const auto pass = check_semistability(fam, DeltaMode{Q(3)}, Strictness::Semi);
  CHECK(pass.pass);
  CHECK(pass.shapes[0].value == Q(1));

  const auto fail = check_semistability(fam, DeltaMode{Q(1)}, Strictness::Semi);
  CHECK_FALSE(fail.pass);
  CHECK(fail.failing_shape == std::optional<std::size_t>{0});
  CHECK(fail.shapes[0].witness == Qs({1}));
  CHECK(fail.shapes[0].value == Q(-1));

  CHECK(check_semistability(fam, DeltaMode{Q(2)}, Strictness::Semi).pass);
  CHECK_FALSE(check_semistability(fam, DeltaMode{Q(2)}, Strictness::Stable).pass);
}

TEST_CASE("asymptotic mode fails condition (a) when Phi is negative on the cone") {
  const auto f = make_shape_forms(2, {1}, Qs({5}), TensorSupport(1, 2, {{2}}));
  CHECK(f.pieces == std::vector<LinearForm>{Qs({-1})});
  CHECK(mu_minimum(f) == Q(-1));
  const auto v = decide_shape(f, AsymptoticMode{}, Strictness::Semi);
  CHECK_FALSE(v.pass);
  CHECK(v.condition == "asymptotic-mu");
}

TEST_CASE("asymptotic mode falls back to chi on the zero set of M") {
  // M = max(m1 - m2, m2 - m1) vanishes at (1/2,1/2); L = m1 - m2 is 0 there.
  ShapeForms f;
  f.alpha = 3;
  f.step_trks = {1, 2};
  f.chi = Qs({1, -1});
  f.pieces = {Qs({1, -1}), Qs({-1, 1})};
  CHECK(decide_shape(f, AsymptoticMode{}, Strictness::Semi).pass);
  const auto st = decide_shape(f, AsymptoticMode{}, Strictness::Stable);
  CHECK_FALSE(st.pass);
  CHECK(st.condition == "asymptotic-chi");
}

TEST_CASE("walls") {
  const auto report = wall_scan(wall_instance());
  CHECK(report.walls == Qs({2}));
  CHECK(report.delta_threshold == Q(2));
  CHECK(report.asymptotic_semistable);
  CHECK(report.asymptotic_stable);
  REQUIRE(report.chambers.size() == 3);
  CHECK_FALSE(report.chambers[0].semistable);
  CHECK(report.chambers[1].on_wall);
  CHECK(report.chambers[1].semistable);
  CHECK_FALSE(report.chambers[1].stable);
  CHECK(report.chambers[2].stable);

  const auto nonneg = make_shape_forms(2, {1}, Qs({3}), TensorSupport(1, 2, {{1}}));
  const auto none = wall_scan(std::vector<ShapeForms>{nonneg});
  CHECK(none.walls.empty());
  CHECK(none.delta_threshold == Q(0));

  const auto w2 = make_shape_forms(2, {1}, Qs({-2}), TensorSupport(1, 2, {{1}}));
  const auto w52 = make_shape_forms(2, {1}, {Q(-5, 2)}, TensorSupport(1, 2, {{1}}));
  const auto both = wall_scan(std::vector<ShapeForms>{w52, w2});
  CHECK(both.walls == std::vector<Rational>{Q(2), Q(5, 2)});
  CHECK(both.delta_threshold == Q(5, 2));
}

TEST_CASE("validate_swamp reports step problems") {
  auto inst = wall_instance();
  inst.flags[0].steps[0].multirank = {1, 1};
  auto diag = validate_swamp(inst);
  REQUIRE_FALSE(diag.empty());
  CHECK(diag.front().code == ErrorCode::StepRankOutOfRange);

  inst = wall_instance();
  inst.flags[0].steps[0].multirank = {2, 0};
  CHECK(validate_swamp(inst).front().code == ErrorCode::StepNotDominatedByAmbient);

  inst = wall_instance();
  inst.flags.clear();
  CHECK(validate_swamp(inst).front().code == ErrorCode::EmptyFamily);

  inst = wall_instance();
  inst.tensor.a = 2;
  CHECK(validate_swamp(inst).front().code == ErrorCode::InvalidSupportTuple);
}

TEST_CASE("property: forms reproduce mu_of_filtration and LP beats every grid point") {
  std::mt19937_64 rng(2024);
  auto uni = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  for (int trial = 0; trial < 150; ++trial) {
    const Int alpha = uni(2, 6);
    std::vector<Int> trks;
    for (Int k = 1; k < alpha; ++k) {
      if (uni(0, 2) == 0 && trks.size() < 2) trks.push_back(k);
    }
    const std::size_t s = trks.size();
    const Int a = uni(1, 2);
    std::vector<std::vector<Int>> gens;
    for (int g = 0, n = static_cast<int>(uni(1, 2)); g < n; ++g) {
      std::vector<Int> t;
      for (Int q = 0; q < a; ++q) t.push_back(uni(1, static_cast<Int>(s) + 1));
      gens.push_back(t);
    }
    const TensorSupport P(a, static_cast<Int>(s) + 1, gens);
    LinearForm chi;
    for (std::size_t i = 0; i < s; ++i) chi.push_back(Q(uni(-6, 6)));
    const auto f = make_shape_forms(alpha, trks, chi, P);
    const Rational delta(uni(1, 8), uni(1, 3));
    const auto v = decide_shape(f, DeltaMode{delta}, Strictness::Semi);

    const int den = 12;
    std::vector<int> num(s, 0);
    auto visit = [&](const std::vector<Rational>& m) {
      CHECK(f.mu(m) == mu_of_filtration(alpha, trks, m, P));
      if (s > 0) CHECK(evaluate(f.chi, m) + delta * f.mu(m) >= *v.value);
    };
    if (s == 0) {
      CHECK(v.pass);
      continue;
    }
    if (s == 1) {
      visit({Q(1)});
    } else {
      for (int i = 0; i <= den; ++i) visit({Q(i, den), Q(den - i, den)});
    }
  }
}
