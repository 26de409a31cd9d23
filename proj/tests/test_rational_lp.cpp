#include "doctest.h"
#include "helpers.hpp"
#include "nodalstab/lp.hpp"

using namespace nodalstab;
using namespace nodalstab::testing;

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2/1")) == "-2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational_list("1,1/2,-3") == std::vector<Rational>{Q(1), Q(1, 2), Q(-3)});
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "1/0", "3/-6", "a", "1//2", "1/2/3", " ", "1.5"}) {
    CAPTURE(bad);
    CHECK(error_code_of([&] { parse_rational(bad); }) == ErrorCode::InvalidRational);
  }
}

TEST_CASE("floor, ceil_sqrt and lcm") {
  CHECK(floor_of(Q(7, 2)) == 3);
  CHECK(floor_of(Q(-7, 2)) == -4);
  CHECK(floor_of(Q(-4)) == -4);
  CHECK(ceil_sqrt(Q(0)) == 0);
  CHECK(ceil_sqrt(Q(242)) == 16);  // 15^2 = 225 < 242 <= 256
  CHECK(ceil_sqrt(Q(225)) == 15);
  CHECK(ceil_sqrt(Q(1, 4)) == 1);
  CHECK(lcm_of_denominators({Q(1, 4), Q(1, 6), Q(2)}) == 12);
}

TEST_CASE("lp: bounded optimum at a vertex") {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6
  lp::Problem p(2);
  p.add_constraint({Q(1), Q(2)}, lp::Relation::LessEq, Q(4));
  p.add_constraint({Q(3), Q(1)}, lp::Relation::LessEq, Q(6));
  p.set_objective({Q(1), Q(1)});
  const auto s = p.maximize();
  REQUIRE(s.status == lp::Status::Optimal);
  CHECK(s.value == Q(14, 5));
  CHECK(s.x == std::vector<Rational>{Q(8, 5), Q(6, 5)});
}

TEST_CASE("lp: infeasible and unbounded are distinguished") {
  lp::Problem inf(1);
  inf.add_constraint({Q(1)}, lp::Relation::LessEq, Q(-1));
  CHECK(inf.minimize().status == lp::Status::Infeasible);

  lp::Problem unb(2);
  unb.add_constraint({Q(1), Q(-1)}, lp::Relation::LessEq, Q(1));
  unb.set_objective({Q(-1), Q(0)});
  CHECK(unb.minimize().status == lp::Status::Unbounded);
}

TEST_CASE("lp: free variables and equalities") {
  // min x s.t. x free, x >= -3 written as -x <= 3, x + y = 2
  lp::Problem p(2);
  p.set_free(0);
  p.add_constraint({Q(-1), Q(0)}, lp::Relation::LessEq, Q(3));
  p.add_constraint({Q(1), Q(1)}, lp::Relation::Equal, Q(2));
  p.set_objective({Q(1), Q(0)});
  const auto s = p.minimize();
  REQUIRE(s.status == lp::Status::Optimal);
  CHECK(s.value == Q(-3));
  CHECK(s.x[1] == Q(5));
}

TEST_CASE("lp: degenerate problem terminates (Bland)") {
  // Classic cycling example (Beale) in minimisation form.
  lp::Problem p(4);
  p.add_constraint({Q(1, 4), Q(-8), Q(-1), Q(9)}, lp::Relation::LessEq, Q(0));
  p.add_constraint({Q(1, 2), Q(-12), Q(-1, 2), Q(3)}, lp::Relation::LessEq, Q(0));
  p.add_constraint({Q(0), Q(0), Q(1), Q(0)}, lp::Relation::LessEq, Q(1));
  p.set_objective({Q(-3, 4), Q(20), Q(-1, 2), Q(6)});
  const auto s = p.minimize();
  REQUIRE(s.status == lp::Status::Optimal);
  CHECK(s.value == Q(-5, 4));
}

TEST_CASE("lp property: optimum never beaten by feasible grid points") {
  // min c.x over x >= 0, a.x <= b on small random data, compared with a grid.
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<Int>((state >> 33) % 7) - 3;
  };
  for (int trial = 0; trial < 60; ++trial) {
    lp::Problem p(2);
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int k = 0; k < 3; ++k) {
      rows.push_back({Q(next()), Q(next())});
      rhs.push_back(Q(next() + 4));
      p.add_constraint(rows.back(), lp::Relation::LessEq, rhs.back());
    }
    p.add_constraint({Q(1), Q(1)}, lp::Relation::LessEq, Q(6));
    const std::vector<Rational> c{Q(next()), Q(next())};
    p.set_objective(c);
    const auto s = p.minimize();
    if (s.status != lp::Status::Optimal) continue;
    for (int i = 0; i <= 24; ++i) {
      for (int j = 0; i + j <= 24; ++j) {
        const Rational x(i, 4), y(j, 4);
        bool feasible = true;
        for (int k = 0; k < 3; ++k) feasible = feasible && rows[k][0] * x + rows[k][1] * y <= rhs[k];
        if (feasible) CHECK(c[0] * x + c[1] * y >= s.value);
      }
    }
  }
}
