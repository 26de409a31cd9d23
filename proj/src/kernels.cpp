#include "nodalstab/kernels.hpp"

#include <exception>
#include <limits>

#include <omp.h>

namespace nodalstab::kernels {

namespace {

// Runs fn(i) for i in [0, n) and stores the results by index. Exceptions are
// captured per iteration; the one with the smallest index is rethrown, which
// matches what the serial loop would have thrown.
template <class T, class Fn>
std::vector<T> map_indexed(std::size_t n, Fn fn, bool parallel) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<ShapeVerdict> evaluate_shapes(const std::vector<ShapeForms>& family, const Mode& mode,
                                          Strictness strictness, bool parallel) {
  return map_indexed<ShapeVerdict>(
      family.size(), [&](std::size_t i) { return decide_shape(family[i], mode, strictness); }, parallel);
}

struct FlatBox {
  std::vector<std::size_t> offset;  // block start in the flat weight vector
  std::vector<Int> ells;
  std::vector<std::vector<WeightVector>> supports;
  std::size_t dim = 0;
  Int base = 1;
  Int bound = 0;
  std::uint64_t size = 1;
};

FlatBox flatten(const WeightBox& box) {
  FlatBox f;
  f.offset.push_back(0);
  for (auto r : box.ranks) f.offset.push_back(f.offset.back() + static_cast<std::size_t>(r));
  f.dim = f.offset.back();
  f.ells = box.ells;
  f.supports = box.supports;
  f.bound = box.bound;
  f.base = 2 * box.bound + 1;
  f.size = box_size(box);
  return f;
}

void decode(const FlatBox& f, std::uint64_t index, Int* gamma) {
  for (std::size_t k = f.dim; k-- > 0;) {
    gamma[k] = static_cast<Int>(index % static_cast<std::uint64_t>(f.base)) - f.bound;
    index /= static_cast<std::uint64_t>(f.base);
  }
}

// 0: violates the null relation, 1: in H and not destabilizing, 2: destabilizing.
int classify(const FlatBox& f, const Int* gamma) {
  Int null = 0;
  for (std::size_t i = 0; i + 1 < f.offset.size(); ++i) {
    Int sum = 0;
    for (std::size_t j = f.offset[i]; j < f.offset[i + 1]; ++j) sum += gamma[j];
    null += f.ells[i] * sum;
  }
  if (null != 0) return 0;
  for (std::size_t i = 0; i + 1 < f.offset.size(); ++i) {
    for (const auto& m : f.supports[i]) {
      Int pairing = 0;
      for (std::size_t j = 0; j < m.size(); ++j) pairing += m[j] * gamma[f.offset[i] + j];
      if (pairing <= 0) return 1;
    }
  }
  return 2;
}

BoxScan scan(const WeightBox& box, bool parallel) {
  const FlatBox f = flatten(box);
  BoxScan out;
  std::uint64_t tested = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  const auto n = static_cast<std::int64_t>(f.size);
#pragma omp parallel if (parallel)
  {
    std::vector<Int> gamma(f.dim);
#pragma omp for schedule(static) reduction(+ : tested) reduction(min : first)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      decode(f, static_cast<std::uint64_t>(idx), gamma.data());
      const int c = classify(f, gamma.data());
      if (c > 0) ++tested;
      if (c == 2 && static_cast<std::uint64_t>(idx) < first) first = static_cast<std::uint64_t>(idx);
    }
  }
  out.tested = tested;
  if (first != std::numeric_limits<std::uint64_t>::max()) out.first_destabilizer = first;
  return out;
}

}  // namespace

std::vector<ShapeVerdict> evaluate_shapes_serial(const std::vector<ShapeForms>& family, const Mode& mode,
                                                 Strictness strictness) {
  return evaluate_shapes(family, mode, strictness, false);
}

std::vector<ShapeVerdict> evaluate_shapes_parallel(const std::vector<ShapeForms>& family, const Mode& mode,
                                                   Strictness strictness) {
  return evaluate_shapes(family, mode, strictness, true);
}

std::uint64_t box_size(const WeightBox& box) {
  const auto base = static_cast<std::uint64_t>(2 * box.bound + 1);
  std::uint64_t size = 1;
  for (auto r : box.ranks) {
    for (Int k = 0; k < r; ++k) {
      if (size > kMaxBoxPoints / base) {
        throw Error(ErrorCode::CombinatorialExplosionGuard,
                    "weight box exceeds " + std::to_string(kMaxBoxPoints) + " points; lower --bound");
      }
      size *= base;
    }
  }
  return size;
}

std::vector<std::vector<Int>> decode_box_point(const WeightBox& box, std::uint64_t index) {
  const FlatBox f = flatten(box);
  std::vector<Int> flat(f.dim);
  decode(f, index, flat.data());
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i + 1 < f.offset.size(); ++i) {
    out.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(f.offset[i]),
                     flat.begin() + static_cast<std::ptrdiff_t>(f.offset[i + 1]));
  }
  return out;
}

BoxScan scan_weight_box_serial(const WeightBox& box) { return scan(box, false); }
BoxScan scan_weight_box_parallel(const WeightBox& box) { return scan(box, true); }

std::vector<std::optional<K0Result>> sweep_k0_serial(const std::vector<ConeFunction>& cfs) {
  return map_indexed<std::optional<K0Result>>(
      cfs.size(), [&](std::size_t i) { return cfs[i].s() == 0 ? std::nullopt : k0_compute(cfs[i]); }, false);
}

std::vector<std::optional<K0Result>> sweep_k0_parallel(const std::vector<ConeFunction>& cfs) {
  return map_indexed<std::optional<K0Result>>(
      cfs.size(), [&](std::size_t i) { return cfs[i].s() == 0 ? std::nullopt : k0_compute(cfs[i]); }, true);
}

namespace {

std::vector<std::optional<Rational>> sweep_thresholds(const std::vector<ConeFunction>& cfs, const Rational& chi_kappa,
                                                      const Rational& chibar_max_bound, bool parallel) {
  return map_indexed<std::optional<Rational>>(
      cfs.size(),
      [&](std::size_t i) -> std::optional<Rational> {
        if (cfs[i].s() == 0) return std::nullopt;
        return shape_threshold(worst_case_forms(cfs[i], chi_kappa, chibar_max_bound));
      },
      parallel);
}

}  // namespace

std::vector<std::optional<Rational>> sweep_thresholds_serial(const std::vector<ConeFunction>& cfs,
                                                             const Rational& chi_kappa,
                                                             const Rational& chibar_max_bound) {
  return sweep_thresholds(cfs, chi_kappa, chibar_max_bound, false);
}

std::vector<std::optional<Rational>> sweep_thresholds_parallel(const std::vector<ConeFunction>& cfs,
                                                               const Rational& chi_kappa,
                                                               const Rational& chibar_max_bound) {
  return sweep_thresholds(cfs, chi_kappa, chibar_max_bound, true);
}

}  // namespace nodalstab::kernels
