#include "doctest.h"
#include "helpers.hpp"
#include "nodalstab/invariant_calculus.hpp"

using namespace nodalstab;
using namespace nodalstab::testing;

TEST_CASE("chi_kappa and kappa_slope") {
  const KappaVector kappa({Q(1), Q(1, 2)});
  const std::vector<Int> dims{2, 2};
  CHECK(chi_kappa(5, dims, kappa) == Q(2));
  CHECK(chi_kappa(5, std::vector<Int>{}, KappaVector{}) == Q(5));
  CHECK(kappa_slope(Q(2), 4) == Q(1, 2));
  CHECK(error_code_of([] { kappa_slope(Q(1), 0); }) == ErrorCode::ZeroTotalRank);
  CHECK(error_code_of([&] { chi_kappa(5, std::vector<Int>{1}, kappa); }) == ErrorCode::KappaLengthMismatch);
  CHECK(error_code_of([] { KappaVector({Q(0)}); }) == ErrorCode::NonPositiveKappa);
  const SheafData no_gps{{1}, 3, std::nullopt, std::nullopt};
  CHECK(error_code_of([&] { chi_kappa(no_gps, KappaVector::ones(1)); }) == ErrorCode::MissingGpsTypes);
}

TEST_CASE("hn_extremes") {
  {
    const CurveData c = smooth_curves({{0, 1}});
    HNProfile p{{SlopeExtremes{Q(3), Q(1)}}};
    CHECK(hn_extremes(c, p).chibar_max == Q(4));
    CHECK(hn_extremes(c, p).chibar_min == Q(2));
  }
  {
    const CurveData c = smooth_curves({{0, 1}, {1, 2}});
    HNProfile p{{SlopeExtremes{Q(1), Q(1)}, SlopeExtremes{Q(4), Q(4)}}};
    CHECK(hn_extremes(c, p).chibar_max == Q(2));
  }
  {
    // equal reduced slopes on both components of a semistable sheaf
    const CurveData c = smooth_curves({{0, 1}, {0, 2}});
    HNProfile p{{SlopeExtremes{Q(1), Q(1)}, SlopeExtremes{Q(3), Q(3)}}};
    const auto e = hn_extremes(c, p);
    CHECK(e.chibar_max == Q(2));
    CHECK(e.chibar_min == Q(2));
  }
  {
    const CurveData c = smooth_curves({{0, 1}, {0, 1}});
    HNProfile p{{std::nullopt, SlopeExtremes{Q(0), Q(-1)}}};
    CHECK(hn_extremes(c, p).chibar_max == Q(1));
    HNProfile none{{std::nullopt, std::nullopt}};
    CHECK(error_code_of([&] { hn_extremes(c, none); }) == ErrorCode::AllComponentsZero);
  }
}

TEST_CASE("D window") {
  CurveData c = smooth_curves({{0, 1}, {0, 1}});
  c.marked_pairs = {{0, 1}};
  const SheafData s{{2, 2}, 2, std::nullopt, std::vector<Int>{2}};
  CHECK(d_window(c, s, KappaVector::ones(1)).width == Q(8));

  const SheafData s0{{2, 2}, 2, std::nullopt, std::vector<Int>{0}};
  const auto w0 = d_window(c, s0, KappaVector::ones(1));
  CHECK(w0.width == Q(0));
  CHECK(w0.contains({Q(3), Q(3), Q(1), Q(1)}));
  CHECK_FALSE(w0.contains({Q(3), Q(5, 2), Q(1), Q(1)}));

  CurveData one = smooth_curves({{0, 1}});
  one.marked_pairs = {{0, 0}};
  const SheafData line{{1}, 0, std::nullopt, std::vector<Int>{1}};
  CHECK(d_window(one, line, KappaVector({Q(1, 2)})).width == Q(1, 2));
}

TEST_CASE("twist, duals, canonical degree and the dual isomorphism criterion") {
  CurveData c = smooth_curves({{0, 1}, {0, 1}});
  c.marked_pairs = {{0, 1}};
  CHECK(twist_euler(c, SheafData{{2, 2}, 3, std::nullopt, std::nullopt}, std::vector<Int>{2, 1}) == Q(9));
  CHECK(twist_euler(c, SheafData{{2, 2}, 3, std::nullopt, std::nullopt}, std::vector<Int>{1, -1}) == Q(3));
  CHECK(dual_euler(c, SheafData{{2, 2}, 2, std::nullopt, std::nullopt}) == Q(2));
  CHECK(dual_iso_criterion(c, SheafData{{3, 3}, 3, std::nullopt, std::nullopt}));
  CHECK_FALSE(dual_iso_criterion(c, SheafData{{3, 3}, 2, std::nullopt, std::nullopt}));
  CHECK(canonical_degree_sum(c) == -2);
  CHECK(error_code_of([&] { dual_euler(c, SheafData{{1, 2}, 0, std::nullopt, std::nullopt}); }) ==
        ErrorCode::NonUniformRank);
}

TEST_CASE("property: twist additivity and double duals") {
  std::uint64_t state = 7;
  auto next = [&](Int n) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<Int>((state >> 33) % static_cast<std::uint64_t>(n));
  };
  for (int trial = 0; trial < 300; ++trial) {
    CurveData c;
    const Int t = 1 + next(3);
    for (Int i = 0; i < t; ++i) c.components.push_back({next(3), 1 + next(2)});
    for (Int j = next(3); j > 0; --j) c.marked_pairs.push_back({next(t), next(t)});
    const Int r = 1 + next(3);
    const SheafData e{std::vector<Int>(static_cast<std::size_t>(t), r), next(13) - 6, std::nullopt, std::nullopt};
    std::vector<Int> n1, n2, n12;
    for (Int i = 0; i < t; ++i) {
      n1.push_back(next(7) - 3);
      n2.push_back(next(7) - 3);
      n12.push_back(n1.back() + n2.back());
    }
    SheafData e1 = e;
    e1.euler = static_cast<Int>(numerator(twist_euler(c, e, n1)).convert_to<long long>());
    CHECK(twist_euler(c, e1, n2) == twist_euler(c, e, n12));
    SheafData dual = e;
    dual.euler = static_cast<Int>(numerator(dual_euler(c, e)).convert_to<long long>());
    CHECK(dual_euler(c, dual) == Q(e.euler));
    CHECK(omega_dual_euler(c, e) == -Q(e.euler));
    CHECK(dual_iso_criterion(c, e) == basic_invariants(c, e).degree_ell.is_zero());
  }
}
