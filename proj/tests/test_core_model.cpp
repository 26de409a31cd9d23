#include "doctest.h"
#include "helpers.hpp"

using namespace nodalstab;
using namespace nodalstab::testing;

TEST_CASE("structure sheaf Euler characteristic and arithmetic genus") {
  CurveData two = smooth_curves({{0, 1}, {0, 1}});
  two.marked_pairs = {{0, 1}};
  CHECK(two.euler_structure_sheaf() == 1);
  CHECK(two.arithmetic_genus() == 0);

  for (Int g0 : {0, 1, 5}) {
    const CurveData one = smooth_curves({{g0, 1}});
    CHECK(one.euler_structure_sheaf() == 1 - g0);
    CHECK(one.arithmetic_genus() == g0);
  }
}

TEST_CASE("dangling marked pair is diagnosed") {
  CurveData c = smooth_curves({{0, 1}, {0, 1}});
  c.marked_pairs = {{0, 5}};
  SheafData s{{1, 1}, 0, std::nullopt, std::nullopt};
  const auto v = validate_instance(c, s);
  REQUIRE_FALSE(v.ok());
  CHECK(v.diagnostics.front().code == ErrorCode::DanglingMarkedPoint);
}

TEST_CASE("validation collects several diagnostics at once") {
  CurveData c = smooth_curves({{-1, 0}});
  SheafData s{{1, 2}, 0, std::nullopt, std::nullopt};
  const auto v = validate_instance(c, s);
  std::vector<ErrorCode> codes;
  for (const auto& d : v.diagnostics) codes.push_back(d.code);
  CHECK(codes == std::vector<ErrorCode>{ErrorCode::NonPositivePolarization, ErrorCode::NegativeGenus,
                                        ErrorCode::MultirankLengthMismatch});
  CHECK(error_code_of([&] { require_valid(c, s); }) == ErrorCode::NonPositivePolarization);
}

TEST_CASE("connectivity assertion is checked against the dual graph") {
  CurveData c = smooth_curves({{0, 1}, {0, 1}, {0, 1}});
  c.marked_pairs = {{0, 1}};
  c.connected = true;
  SheafData s{{1, 1, 1}, 0, std::nullopt, std::nullopt};
  CHECK(validate_instance(c, s).diagnostics.front().code == ErrorCode::DisconnectedButAssertedConnected);
  c.marked_pairs.push_back({1, 2});
  s.node_types = std::vector<Int>{1, 1};
  CHECK(validate_instance(c, s).ok());
}

TEST_CASE("type vectors are range checked") {
  CurveData c = smooth_curves({{0, 1}, {0, 1}});
  c.marked_pairs = {{0, 1}};
  SheafData nodal{{2, 2}, 0, std::vector<Int>{3}, std::nullopt};
  CHECK(validate_instance(c, nodal).diagnostics.front().code == ErrorCode::NodeTypeOutOfRange);
  SheafData skew{{1, 2}, 0, std::vector<Int>{1}, std::nullopt};
  CHECK(validate_instance(c, skew).diagnostics.front().code == ErrorCode::NonUniformRank);
  SheafData gps{{1, 2}, 0, std::nullopt, std::vector<Int>{4}};
  CHECK(validate_instance(c, gps).diagnostics.front().code == ErrorCode::GpsTypeOutOfRange);
  SheafData both{{1, 1}, 0, std::vector<Int>{1}, std::vector<Int>{1}};
  CHECK(validate_instance(c, both).diagnostics.front().code == ErrorCode::ConflictingInterpretation);
  SheafData short_types{{1, 1}, 0, std::nullopt, std::vector<Int>{}};
  CHECK(validate_instance(c, short_types).diagnostics.front().code == ErrorCode::TypesLengthMismatch);
}

TEST_CASE("basic invariants of the documented two-component sheaf") {
  CurveData c = smooth_curves({{0, 1}, {0, 2}});
  c.marked_pairs = {{0, 1}};
  const SheafData s{{2, 2}, 2, std::nullopt, std::nullopt};
  const auto inv = basic_invariants(c, s);
  CHECK(inv.total_rank == 6);
  CHECK(inv.rank_ell == Q(2));
  CHECK(inv.degree_ell == Q(0));
}

TEST_CASE("uniform rank gives rank_ell = r, zero sheaf gives zeros") {
  for (Int r : {1, 2, 5}) {
    CurveData c = smooth_curves({{0, 3}, {2, 1}, {1, 4}});
    const auto inv = basic_invariants(c, std::vector<Int>{r, r, r}, 7);
    CHECK(inv.rank_ell == Q(r));
  }
  const CurveData c = smooth_curves({{0, 1}, {1, 1}});
  const auto zero = basic_invariants(c, std::vector<Int>{0, 0}, 0);
  CHECK(zero.total_rank == 0);
  CHECK(zero.rank_ell == Q(0));
  CHECK(zero.degree_ell == Q(0));
}

TEST_CASE("property: deg_ell is additive and Riemann-Roch consistent") {
  std::uint64_t state = 99;
  auto next = [&](Int n) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<Int>((state >> 33) % static_cast<std::uint64_t>(n));
  };
  for (int trial = 0; trial < 200; ++trial) {
    CurveData c;
    const Int t = 1 + next(3);
    for (Int i = 0; i < t; ++i) c.components.push_back({next(3), 1 + next(3)});
    std::vector<Int> r1, r2;
    for (Int i = 0; i < t; ++i) {
      r1.push_back(next(4));
      r2.push_back(next(4));
    }
    const Int e1 = next(11) - 5, e2 = next(11) - 5;
    std::vector<Int> sum(r1.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = r1[i] + r2[i];
    const auto a = basic_invariants(c, r1, e1);
    const auto b = basic_invariants(c, r2, e2);
    const auto ab = basic_invariants(c, sum, e1 + e2);
    CHECK(ab.degree_ell == a.degree_ell + b.degree_ell);
    CHECK(ab.rank_ell * c.ell_sum() == Q(ab.total_rank));
    CHECK(Q(e1) == a.degree_ell + a.rank_ell * c.euler_structure_sheaf());
  }
}
