#ifndef NODALSTAB_TESTS_HELPERS_HPP
#define NODALSTAB_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "nodalstab/core_model.hpp"
#include "nodalstab/rational.hpp"

namespace nodalstab::testing {

inline Rational Qs(const char* text) { return parse_rational(text); }
inline Rational Q(long long p, long long q = 1) { return Rational(p, q); }

inline std::vector<Rational> Qs(std::initializer_list<long long> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

inline CurveData smooth_curves(std::initializer_list<std::pair<Int, Int>> genus_ell) {
  CurveData c;
  for (auto [g, l] : genus_ell) c.components.push_back({g, l});
  return c;
}

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::PostconditionFailed;  // sentinel: nothing was thrown
}

}  // namespace nodalstab::testing

#endif
