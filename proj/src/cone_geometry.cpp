#include "nodalstab/cone_geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "nodalstab/kernels.hpp"
#include "nodalstab/lp.hpp"

namespace nodalstab {

std::vector<std::vector<Rational>> ConeFunction::generators() const {
  std::vector<std::vector<Rational>> out;
  for (std::size_t k = 0; k < s(); ++k) out.push_back(gamma_generator(alpha, ranks[k]));
  return out;
}

std::vector<std::vector<Rational>> ConeFunction::gram() const {
  const auto gens = generators();
  std::vector<std::vector<Rational>> out(gens.size(), std::vector<Rational>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t k = 0; k < gens[i].size(); ++k) out[i][j] += gens[i][k] * gens[j][k];
    }
  }
  return out;
}

Rational ConeFunction::phi(const std::vector<Rational>& v) const {
  if (static_cast<Int>(v.size()) != alpha) throw Error(ErrorCode::InvalidArgument, "Phi expects a vector of length alpha");
  std::optional<Rational> best;
  for (const auto& tuple : support.tuples()) {
    Rational sum;
    for (auto idx : tuple) sum += v[static_cast<std::size_t>(ranks[static_cast<std::size_t>(idx - 1)] - 1)];
    if (!best || sum < *best) best = sum;
  }
  return -*best;
}

ShapeForms ConeFunction::forms() const {
  std::vector<Int> trks(ranks.begin(), ranks.end() - 1);
  return make_shape_forms(alpha, std::move(trks), LinearForm(s()), support);
}

Rational gram_closed_form(Int alpha, Int i, Int j) {
  if (i > j) std::swap(i, j);
  return Rational(i * alpha * (alpha - j));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using Tuple = std::vector<Int>;

// Elements of {1..n}^a ordered so that every element comes after all elements above it.
std::vector<Tuple> top_down_order(Int n, Int a) {
  std::vector<Tuple> all;
  Tuple cur(static_cast<std::size_t>(a), 1);
  while (true) {
    all.push_back(cur);
    std::size_t k = cur.size();
    while (k > 0 && cur[k - 1] == n) cur[--k] = 1;
    if (k == 0) break;
    ++cur[k - 1];
  }
  std::stable_sort(all.begin(), all.end(), [](const Tuple& x, const Tuple& y) {
    Int sx = 0, sy = 0;
    for (auto v : x) sx += v;
    for (auto v : y) sy += v;
    if (sx != sy) return sx > sy;
    return x > y;
  });
  return all;
}

// Depth-first enumeration of upsets; visit returns false to stop early.
void for_each_upset(Int n, Int a, const std::function<bool(const std::vector<Tuple>&)>& visit) {
  const auto order = top_down_order(n, a);
  std::set<Tuple> chosen;
  std::vector<Tuple> current;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (stop) return;
    if (pos == order.size()) {
      if (!current.empty() && !visit(current)) stop = true;
      return;
    }
    const Tuple& x = order[pos];
    rec(pos + 1);  // exclude
    bool covers_in = true;
    for (std::size_t k = 0; k < x.size() && covers_in; ++k) {
      if (x[k] < n) {
        Tuple up = x;
        ++up[k];
        covers_in = chosen.count(up) > 0;
      }
    }
    if (covers_in && !stop) {
      chosen.insert(x);
      current.push_back(x);
      rec(pos + 1);
      current.pop_back();
      chosen.erase(x);
    }
  };
  rec(0);
}

Integer binomial(Int n, Int k) {
  Integer out = 1;
  for (Int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

std::optional<Integer> count_upsets(Int n, Int a, std::uint64_t cap) {
  if (n < 1 || a < 1) throw Error(ErrorCode::InvalidArgument, "count_upsets needs n, a >= 1");
  Integer total;
  if (a == 1) {
    total = n + 1;
  } else if (a == 2) {
    total = binomial(2 * n, n);
  } else if (a == 3) {
    // MacMahon's box formula for plane partitions in an n x n x n box.
    Rational product(1);
    for (Int i = 1; i <= n; ++i) {
      for (Int j = 1; j <= n; ++j) {
        for (Int k = 1; k <= n; ++k) product *= Rational(i + j + k - 1, i + j + k - 2);
      }
    }
    total = numerator(product);
  } else {
    std::uint64_t count = 0;
    bool over = false;
    for_each_upset(n, a, [&](const std::vector<Tuple>&) {
      if (++count > cap) {
        over = true;
        return false;
      }
      return true;
    });
    if (over) return std::nullopt;
    return Integer(count);
  }
  return total - 1;  // drop the empty set
}

std::optional<Integer> count_cone_functions(Int alpha, Int a, std::uint64_t cap) {
  if (alpha < 1) throw Error(ErrorCode::InvalidArgument, "alpha must be >= 1");
  Integer total;
  for (Int s = 0; s <= alpha - 1; ++s) {
    const auto per = count_upsets(s + 1, a, cap);
    if (!per) return std::nullopt;
    total += binomial(alpha - 1, s) * *per;
  }
  return total;
}

std::vector<ConeFunction> enumerate_cone_functions(Int alpha, Int a, std::uint64_t ceiling) {
  if (alpha < 1) throw Error(ErrorCode::InvalidArgument, "alpha must be >= 1");
  if (a < 1) throw Error(ErrorCode::InvalidArgument, "tensor arity must be >= 1");
  const auto count = count_cone_functions(alpha, a, ceiling);
  if (!count || *count > ceiling) {
    throw Error(ErrorCode::CombinatorialExplosionGuard,
                "alpha=" + std::to_string(alpha) + ", a=" + std::to_string(a) + " gives " +
                    (count ? count->str() : std::string("more than ") + std::to_string(ceiling)) +
                    " cone functions, above the ceiling " + std::to_string(ceiling));
  }
  std::vector<std::vector<Int>> rank_tuples;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (alpha - 1)); ++mask) {
    std::vector<Int> r;
    for (Int i = 1; i < alpha; ++i) {
      if (mask & (std::uint64_t{1} << (i - 1))) r.push_back(i);
    }
    r.push_back(alpha);
    rank_tuples.push_back(std::move(r));
  }
  std::sort(rank_tuples.begin(), rank_tuples.end());

  std::vector<ConeFunction> out;
  for (const auto& r : rank_tuples) {
    const auto levels = static_cast<Int>(r.size());
    for_each_upset(levels, a, [&](const std::vector<Tuple>& up) {
      out.push_back(ConeFunction{alpha, r, TensorSupport(a, levels, up)});
      return true;
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// K0

namespace {

// Solves A x = b exactly; nullopt if A is singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

Rational quadratic(const std::vector<std::vector<Rational>>& g, const std::vector<Rational>& x) {
  Rational out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out += x[i] * g[i][j] * x[j];
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> polytope_vertices(const ShapeForms& f) {
  const std::size_t s = f.dim();
  // rows: -x_k <= 0 for each k, then piece . x <= 1
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t k = 0; k < s; ++k) {
    std::vector<Rational> row(s);
    row[k] = -1;
    rows.push_back(std::move(row));
    rhs.emplace_back(0);
  }
  for (const auto& p : f.pieces) {
    rows.push_back(p);
    rhs.emplace_back(1);
  }
  std::set<std::vector<Rational>> vertices;
  std::vector<std::size_t> pick(s);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
    if (depth == s) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (auto i : pick) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
      auto x = solve_square(std::move(a), std::move(b));
      if (!x) return;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Rational lhs;
        for (std::size_t k = 0; k < s; ++k) lhs += rows[i][k] * (*x)[k];
        if (lhs > rhs[i]) return;
      }
      vertices.insert(std::move(*x));
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      pick[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return {vertices.begin(), vertices.end()};
}

std::optional<K0Result> k0_compute(const ConeFunction& cf) {
  if (cf.s() == 0) throw Error(ErrorCode::DegenerateCone, "rank tuple (alpha) spans no cone");
  const auto f = cf.forms();
  if (mu_minimum(f).sign() <= 0) return std::nullopt;

  const auto g = cf.gram();
  std::optional<K0Result> out;
  for (auto& x : polytope_vertices(f)) {
    Rational n2 = quadratic(g, x);
    if (!out || n2 > out->max_norm_squared) {
      K0Result r;
      r.max_norm_squared = std::move(n2);
      r.argmax_vertex = std::move(x);
      out = std::move(r);
    }
  }
  if (!out || out->max_norm_squared.is_zero()) {
    throw Error(ErrorCode::PostconditionFailed, "bounded polytope without a nonzero vertex");
  }
  out->k0_squared = 1 / out->max_norm_squared;
  const Integer scale = lcm_of_denominators(out->argmax_vertex);
  Integer common = 0;
  for (const auto& v : out->argmax_vertex) {
    Integer n = numerator(v) * (scale / denominator(v));
    common = boost::multiprecision::gcd(common, n);
    out->integral_ray.push_back(std::move(n));
  }
  if (common > 1) {
    for (auto& n : out->integral_ray) n /= common;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounds

ShapeForms worst_case_forms(const ConeFunction& cf, const Rational& chi_kappa, const Rational& chibar_max_bound) {
  LinearForm chi(cf.s());
  for (std::size_t i = 0; i < cf.s(); ++i) {
    const Int r = cf.ranks[i];
    chi[i] = chi_kappa * r - Rational(floor_of(chibar_max_bound * r)) * cf.alpha;
  }
  std::vector<Int> trks(cf.ranks.begin(), cf.ranks.end() - 1);
  return make_shape_forms(cf.alpha, std::move(trks), std::move(chi), cf.support);
}

std::optional<Rational> shape_threshold(const ShapeForms& f) {
  if (f.dim() == 0) return Rational(0);
  lp::Problem p(f.dim());
  for (const auto& piece : f.pieces) p.add_constraint(piece, lp::Relation::LessEq, Rational(1));
  LinearForm neg(f.chi);
  for (auto& v : neg) v = -v;
  p.set_objective(std::move(neg));
  const auto sol = p.maximize();
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  return sol.value;
}

BoundsRecord bounds_pipeline(const BoundsInput& in, Exec exec) {
  if (in.rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be >= 1");
  if (in.a < 1) throw Error(ErrorCode::InvalidArgument, "tensor arity must be >= 1");
  if (in.curve.components.empty()) throw Error(ErrorCode::EmptyCurve, "curve has no components");
  const std::size_t c = in.curve.marked_pairs.size();
  if (in.kappa.size() != in.gps_types.size() || in.gps_types.size() != c) {
    throw Error(ErrorCode::KappaLengthMismatch, "kappa and gps types need one entry per marked pair");
  }

  BoundsRecord out;
  out.alpha = in.rank * in.curve.ell_sum();
  Rational weighted;
  for (std::size_t j = 0; j < c; ++j) weighted += in.kappa[j] * in.gps_types[j];
  out.D = Rational(out.alpha) * weighted;
  out.chi_kappa = Rational(in.chi) - weighted;

  const auto cfs = enumerate_cone_functions(out.alpha, in.a, in.ceiling);
  out.cone_function_count = cfs.size();
  const auto k0s = exec == Exec::Serial ? kernels::sweep_k0_serial(cfs) : kernels::sweep_k0_parallel(cfs);
  for (std::size_t i = 0; i < k0s.size(); ++i) {
    if (!k0s[i]) continue;
    ++out.k0_defined_count;
    if (!out.k0_argmin || k0s[i]->k0_squared < out.K0_squared) {
      out.k0_argmin = i;
      out.K0_squared = k0s[i]->k0_squared;
    }
  }
  if (!out.k0_argmin) {
    throw Error(ErrorCode::NoPositiveConeFunction,
                "no cone function is positive on its cone (alpha = " + std::to_string(out.alpha) + ")");
  }
  const auto& best = cfs[*out.k0_argmin];
  out.k0_argmin_ranks = best.ranks;
  out.k0_argmin_support = best.support.minimal_elements();
  out.k0_integral_ray = k0s[*out.k0_argmin]->integral_ray;

  out.K1 = Rational(in.a) * (Rational(in.chi) + out.D + 1);
  out.B_squared = Rational(out.alpha) * out.K1 * out.K1 / out.K0_squared;
  out.B_ceil = ceil_sqrt(out.B_squared);
  out.chibar_kappa_max_bound = out.chi_kappa / out.alpha + Rational(out.B_ceil);
  out.chibar_max_bound = out.chibar_kappa_max_bound + out.D;
  for (std::size_t i = 0; i < in.curve.components.size(); ++i) {
    const auto& comp = in.curve.components[i];
    Rational k = out.chibar_max_bound * comp.ell - 1 + comp.genus;
    if (i == 0 || k > out.K) out.K = k;
    out.K_components.push_back(std::move(k));
  }

  const auto thresholds = exec == Exec::Serial
                              ? kernels::sweep_thresholds_serial(cfs, out.chi_kappa, out.chibar_max_bound)
                              : kernels::sweep_thresholds_parallel(cfs, out.chi_kappa, out.chibar_max_bound);
  Rational delta_inf(0);
  for (const auto& t : thresholds) {
    if (t && *t > delta_inf) delta_inf = *t;
  }
  if (!in.family.empty()) out.family_threshold = wall_scan(in.family).delta_threshold;
  out.delta_infinity = std::max(delta_inf, out.family_threshold);

  const Rational abs_chi = in.chi < 0 ? Rational(-in.chi) : Rational(in.chi);
  const Rational abs_bound = out.chibar_max_bound.sign() < 0 ? Rational(-out.chibar_max_bound) : out.chibar_max_bound;
  out.delta_cap = Rational(out.alpha * out.alpha) * (abs_chi + Rational(out.alpha) * (abs_bound + out.D));
  return out;
}

}  // namespace nodalstab
