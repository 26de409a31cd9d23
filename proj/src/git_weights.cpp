#include "nodalstab/git_weights.hpp"

#include <numeric>

#include "nodalstab/kernels.hpp"
#include "nodalstab/lp.hpp"

namespace nodalstab {

Int BlockGroupData::big_rank() const {
  Int total = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) total += ells[i] * ranks[i];
  return total;
}

void validate_blocks(const BlockGroupData& group, const WeightSupport& w) {
  const std::size_t t = group.ranks.size();
  if (t == 0) throw Error(ErrorCode::InvalidBlockData, "no blocks given");
  if (group.ells.size() != t || group.degrees.size() != t || w.blocks.size() != t) {
    throw Error(ErrorCode::InvalidBlockData, "ranks, multiplicities, degrees and supports differ in length");
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (group.ranks[i] < 1) throw Error(ErrorCode::InvalidBlockData, "block ranks must be >= 1");
    if (group.ells[i] < 1) throw Error(ErrorCode::InvalidBlockData, "block multiplicities must be >= 1");
    if (group.degrees[i] == 0) throw Error(ErrorCode::InvalidBlockData, "representation degrees must be nonzero");
    if ((group.degrees[i] > 0) != (group.degrees[0] > 0)) {
      throw Error(ErrorCode::MixedDegreeSigns, "representation degrees must all have the same sign");
    }
    for (const auto& m : w.blocks[i]) {
      if (static_cast<Int>(m.size()) != group.ranks[i]) {
        throw Error(ErrorCode::InvalidBlockData, "support weight length differs from the block rank");
      }
      if (std::accumulate(m.begin(), m.end(), Int{0}) != group.degrees[i]) {
        throw Error(ErrorCode::NonHomogeneousWeight,
                    "support weight of block " + std::to_string(i + 1) + " does not sum to its degree");
      }
    }
  }
}

bool satisfies_null_relation(const BlockGroupData& group, const OneParamData& ops) {
  if (ops.gammas.size() != group.ranks.size()) return false;
  Int total = 0;
  for (std::size_t i = 0; i < ops.gammas.size(); ++i) {
    if (static_cast<Int>(ops.gammas[i].size()) != group.ranks[i]) return false;
    total += group.ells[i] * std::accumulate(ops.gammas[i].begin(), ops.gammas[i].end(), Int{0});
  }
  return total == 0;
}

Rational torus_mu(const std::vector<WeightVector>& support, const std::vector<Rational>& gamma) {
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "mu of the zero vector is undefined");
  std::optional<Rational> best;
  for (const auto& m : support) {
    Rational pairing;
    for (std::size_t j = 0; j < m.size(); ++j) pairing += m[j] * gamma[j];
    if (!best || pairing < *best) best = pairing;
  }
  return -*best;
}

namespace {

std::vector<Rational> to_rational(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

std::vector<Int> to_integral(const std::vector<Rational>& v) {
  const Integer scale = lcm_of_denominators(v);
  std::vector<Int> out;
  for (const auto& x : v) {
    const Integer n = numerator(x) * (scale / denominator(x));
    out.push_back(n.convert_to<Int>());
  }
  return out;
}

}  // namespace

MuPairing mu_pairing_block(const BlockGroupData& group, const OneParamData& ops, const WeightSupport& w) {
  validate_blocks(group, w);
  if (!satisfies_null_relation(group, ops)) {
    throw Error(ErrorCode::InvalidBlockData, "the weight vectors do not define a 1-PS of H (null relation fails)");
  }
  MuPairing out;
  std::optional<Int> best;
  for (std::size_t i = 0; i < group.ranks.size(); ++i) {
    if (w.block_zero(i)) {
      out.per_block.push_back(std::nullopt);
      out.splits.emplace_back();
      continue;
    }
    const auto gamma = to_rational(ops.gammas[i]);
    const Rational mu = torus_mu(w.blocks[i], gamma);
    const Int mu_int = numerator(mu).convert_to<Int>();
    out.per_block.push_back(mu_int);
    if (!best || mu_int > *best) best = mu_int;

    SplitCheck sc;
    sc.delta = std::accumulate(gamma.begin(), gamma.end(), Rational(0)) / group.ranks[i];
    sc.delta_hat = -sc.delta;
    auto reduced = gamma;
    for (auto& g : reduced) g -= sc.delta;
    sc.mu_full = mu;
    sc.mu_trace_free = torus_mu(w.blocks[i], reduced);
    sc.holds = sc.mu_full == sc.mu_trace_free + group.degrees[i] * sc.delta_hat;
    out.splits.emplace_back(std::move(sc));
  }
  if (!best) throw Error(ErrorCode::AllBlocksZero, "w = 0 has no Hilbert–Mumford weight");
  out.mu = *best;
  return out;
}

namespace {

// gamma with <m, gamma> >= 1 for all m (and sum gamma = 0 for SL).
std::optional<std::vector<Rational>> destabilizer_lp(Int rank, const std::vector<WeightVector>& support,
                                                     TorusGroup group) {
  const auto n = static_cast<std::size_t>(rank);
  lp::Problem p(n);
  for (std::size_t j = 0; j < n; ++j) p.set_free(j);
  for (const auto& m : support) p.add_constraint(to_rational(m), lp::Relation::GreaterEq, Rational(1));
  if (group == TorusGroup::SL) p.add_constraint(std::vector<Rational>(n, Rational(1)), lp::Relation::Equal, Rational(0));
  const auto sol = p.minimize();
  if (sol.status == lp::Status::Infeasible) return std::nullopt;
  return sol.x;
}

// lambda >= 0, sum lambda = 1, sum lambda m = c * (1..1) (c free for SL, c = 0 for GL).
bool hull_contains_diagonal(Int rank, const std::vector<WeightVector>& support, TorusGroup group) {
  const std::size_t k = support.size();
  const auto n = static_cast<std::size_t>(rank);
  lp::Problem p(k + 1);
  p.set_free(k);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(k + 1);
    for (std::size_t q = 0; q < k; ++q) row[q] = support[q][j];
    row[k] = group == TorusGroup::SL ? Rational(-1) : Rational(0);
    p.add_constraint(std::move(row), lp::Relation::Equal, Rational(0));
  }
  std::vector<Rational> ones(k + 1, Rational(1));
  ones[k] = 0;
  p.add_constraint(std::move(ones), lp::Relation::Equal, Rational(1));
  return p.minimize().status == lp::Status::Optimal;
}

}  // namespace

bool torus_semistable(Int rank, const std::vector<WeightVector>& support, TorusGroup group) {
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "torus semistability of the zero vector");
  const bool by_lp = !destabilizer_lp(rank, support, group).has_value();
  const bool by_hull = hull_contains_diagonal(rank, support, group);
  if (by_lp != by_hull) throw Error(ErrorCode::PostconditionFailed, "destabilizer LP and hull membership disagree");
  return by_lp;
}

std::optional<std::vector<Int>> torus_destabilizer(Int rank, const std::vector<WeightVector>& support,
                                                   TorusGroup group) {
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "torus semistability of the zero vector");
  const auto sol = destabilizer_lp(rank, support, group);
  if (!sol) return std::nullopt;
  return to_integral(*sol);
}

std::optional<OneParamData> h_destabilizer(const BlockGroupData& group, const WeightSupport& w) {
  validate_blocks(group, w);
  const std::size_t t = group.ranks.size();
  std::vector<std::size_t> offset(t + 1, 0);
  for (std::size_t i = 0; i < t; ++i) offset[i + 1] = offset[i] + static_cast<std::size_t>(group.ranks[i]);
  const std::size_t n = offset[t];
  bool any_nonzero = false;
  lp::Problem p(n);
  for (std::size_t v = 0; v < n; ++v) p.set_free(v);
  std::vector<Rational> null_row(n);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = offset[i]; j < offset[i + 1]; ++j) null_row[j] = group.ells[i];
    for (const auto& m : w.blocks[i]) {
      any_nonzero = true;
      std::vector<Rational> row(n);
      for (std::size_t j = 0; j < m.size(); ++j) row[offset[i] + j] = m[j];
      p.add_constraint(std::move(row), lp::Relation::GreaterEq, Rational(1));
    }
  }
  if (!any_nonzero) throw Error(ErrorCode::AllBlocksZero, "w = 0 is excluded");
  p.add_constraint(std::move(null_row), lp::Relation::Equal, Rational(0));
  const auto sol = p.minimize();
  if (sol.status == lp::Status::Infeasible) return std::nullopt;
  const auto flat = to_integral(sol.x);
  OneParamData out;
  for (std::size_t i = 0; i < t; ++i) {
    out.gammas.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(offset[i]),
                            flat.begin() + static_cast<std::ptrdiff_t>(offset[i + 1]));
  }
  return out;
}

bool componentwise_semistable(const BlockGroupData& group, const WeightSupport& w) {
  validate_blocks(group, w);
  for (std::size_t i = 0; i < group.ranks.size(); ++i) {
    if (w.block_zero(i)) return false;
    if (!torus_semistable(group.ranks[i], w.blocks[i], TorusGroup::SL)) return false;
  }
  return true;
}

std::optional<ConstructedDestabilizer> construct_destabilizer(const BlockGroupData& group, const WeightSupport& w) {
  validate_blocks(group, w);
  const std::size_t t = group.ranks.size();
  const Int sgn = group.degrees[0] > 0 ? 1 : -1;
  ConstructedDestabilizer out;
  out.ops.gammas.resize(t);
  auto scalar = [&](std::size_t i, Int d) { out.ops.gammas[i].assign(static_cast<std::size_t>(group.ranks[i]), d); };

  std::optional<std::size_t> zero_block;
  for (std::size_t i = 0; i < t && !zero_block; ++i) {
    if (w.block_zero(i)) zero_block = i;
  }
  if (zero_block) {
    const std::size_t z = *zero_block;
    Int nonzero_weight = 0;
    for (std::size_t i = 0; i < t; ++i) {
      if (w.block_zero(i)) {
        scalar(i, 0);
      } else {
        scalar(i, sgn * group.ells[z] * group.ranks[z]);
        nonzero_weight += group.ells[i] * group.ranks[i];
      }
    }
    if (nonzero_weight == 0) throw Error(ErrorCode::AllBlocksZero, "w = 0 is excluded");
    scalar(z, -sgn * nonzero_weight);
    out.distinguished_block = z;
    out.zero_block_case = true;
  } else {
    std::optional<std::size_t> unstable;
    std::vector<Int> reduced;
    for (std::size_t i = 0; i < t && !unstable; ++i) {
      if (auto g = torus_destabilizer(group.ranks[i], w.blocks[i], TorusGroup::SL)) {
        unstable = i;
        reduced = std::move(*g);
      }
    }
    if (!unstable) return std::nullopt;
    const std::size_t u = *unstable;
    Int others = 0;
    for (std::size_t i = 0; i < t; ++i) {
      if (i == u) continue;
      scalar(i, sgn * group.ells[u] * group.ranks[u]);
      others += group.ells[i] * group.ranks[i];
    }
    const Int delta_u = -sgn * others;
    const Int stretch = std::abs(group.degrees[u]) * others + 1;
    out.ops.gammas[u].clear();
    for (auto g : reduced) out.ops.gammas[u].push_back(stretch * g + delta_u);
    out.distinguished_block = u;
  }

  if (!satisfies_null_relation(group, out.ops)) {
    throw Error(ErrorCode::PostconditionFailed, "constructed destabilizer violates the null relation");
  }
  if (mu_pairing_block(group, out.ops, w).mu >= 0) {
    throw Error(ErrorCode::PostconditionFailed, "constructed 1-PS does not destabilize");
  }
  out.sign_pattern_ok = true;
  if (t > 1) {
    for (std::size_t i = 0; i < t; ++i) {
      const auto& g = out.ops.gammas[i];
      const Int det = std::accumulate(g.begin(), g.end(), Int{0});
      if (i == out.distinguished_block) {
        if (det * sgn >= 0) out.sign_pattern_ok = false;
      } else if (!w.block_zero(i) && det * sgn <= 0) {
        out.sign_pattern_ok = false;
      }
    }
  }
  return out;
}

BlockLemmaReport verify_block_lemma(const BlockGroupData& group, const WeightSupport& w, Int bound, Exec exec) {
  validate_blocks(group, w);
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "enumeration bound must be nonnegative");
  BlockLemmaReport out;
  const auto lp_destab = h_destabilizer(group, w);
  out.h_semistable = !lp_destab.has_value();
  out.componentwise = componentwise_semistable(group, w);
  out.equivalence_holds = out.h_semistable == out.componentwise;
  if (!out.componentwise) out.constructed = construct_destabilizer(group, w);

  kernels::WeightBox box{group.ranks, group.ells, w.blocks, bound};
  const auto scan = exec == Exec::Serial ? kernels::scan_weight_box_serial(box) : kernels::scan_weight_box_parallel(box);
  out.tested = scan.tested;
  if (scan.first_destabilizer) {
    if (out.h_semistable) throw Error(ErrorCode::PostconditionFailed, "box scan found a destabilizer the LP missed");
    out.destabilizer = OneParamData{kernels::decode_box_point(box, *scan.first_destabilizer)};
  } else if (!out.h_semistable) {
    out.bound_too_small = true;
    out.destabilizer = lp_destab;
  }
  if (out.destabilizer && mu_pairing_block(group, *out.destabilizer, w).mu >= 0) {
    throw Error(ErrorCode::PostconditionFailed, "reported destabilizer has mu >= 0");
  }
  return out;
}

}  // namespace nodalstab
