#ifndef NODALSTAB_GIT_WEIGHTS_HPP
#define NODALSTAB_GIT_WEIGHTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "nodalstab/core_model.hpp"
#include "nodalstab/exec.hpp"
#include "nodalstab/rational.hpp"

// Hilbert–Mumford weights for the block-diagonal group H inside SL_R.
//
// Convention: for a weight support S and a diagonal 1-PS with weights gamma,
//   mu(gamma) = -min{ <m, gamma> : m in S }.
// A point is semistable iff mu >= 0 for every 1-PS; a destabilizer has mu < 0.
namespace nodalstab {

struct BlockGroupData {
  std::vector<Int> ranks;    // r_i >= 1
  std::vector<Int> ells;     // multiplicities ell_i >= 1
  std::vector<Int> degrees;  // h_i != 0, all of one sign

  std::size_t num_blocks() const { return ranks.size(); }
  Int big_rank() const;  // R = sum ell_i r_i
};

using WeightVector = std::vector<Int>;

/// Per block the representation weights carried by the nonzero coordinates of w_i.
struct WeightSupport {
  std::vector<std::vector<WeightVector>> blocks;

  bool block_zero(std::size_t i) const { return blocks[i].empty(); }
};

/// One integer weight vector per block.
struct OneParamData {
  std::vector<std::vector<Int>> gammas;
};

/// Throws InvalidBlockData, MixedDegreeSigns or NonHomogeneousWeight.
void validate_blocks(const BlockGroupData& group, const WeightSupport& w);

/// sum_i ell_i * sum_j gamma^i_j == 0.
bool satisfies_null_relation(const BlockGroupData& group, const OneParamData& ops);

/// -min <m, gamma> over a nonempty support (rational weights allowed).
Rational torus_mu(const std::vector<WeightVector>& support, const std::vector<Rational>& gamma);

struct SplitCheck {
  Rational delta;      // sum(gamma) / r
  Rational delta_hat;  // -delta under the fixed convention
  Rational mu_full;    // mu(gamma)
  Rational mu_trace_free;  // mu(gamma - delta * 1)
  bool holds = false;      // mu_full == mu_trace_free + h * delta_hat
};

struct MuPairing {
  Int mu = 0;
  std::vector<std::optional<Int>> per_block;  // nullopt for zero blocks
  std::vector<std::optional<SplitCheck>> splits;
};

/// Requires the 1-PS to lie in H and w != 0.
MuPairing mu_pairing_block(const BlockGroupData& group, const OneParamData& ops, const WeightSupport& w);

enum class TorusGroup { SL, GL };

/// Decided by the destabilizer LP and cross-checked against hull membership.
bool torus_semistable(Int rank, const std::vector<WeightVector>& support, TorusGroup group);

/// An integral weight vector gamma with <m, gamma> >= 1 on the support
/// (trace-free for SL), or nullopt when the support is semistable.
std::optional<std::vector<Int>> torus_destabilizer(Int rank, const std::vector<WeightVector>& support,
                                                   TorusGroup group);

/// Integral 1-PS of H with mu < 0, found by exact LP, or nullopt if w is H-semistable.
std::optional<OneParamData> h_destabilizer(const BlockGroupData& group, const WeightSupport& w);

/// Every block nonzero and SL-semistable.
bool componentwise_semistable(const BlockGroupData& group, const WeightSupport& w);

struct ConstructedDestabilizer {
  OneParamData ops;
  std::size_t distinguished_block = 0;  // the zero block or the SL-unstable block
  bool zero_block_case = false;
  bool sign_pattern_ok = false;  // distinguished block weight sign -sign(h), other nonzero blocks +sign(h)
};

/// The explicit destabilizer of the block lemma when the componentwise
/// criterion fails; nullopt when it holds. The result is checked to have mu < 0.
std::optional<ConstructedDestabilizer> construct_destabilizer(const BlockGroupData& group, const WeightSupport& w);

struct BlockLemmaReport {
  bool h_semistable = false;             // LP decision (authoritative)
  bool componentwise = false;            // right-hand side of the equivalence
  bool equivalence_holds = false;
  std::optional<OneParamData> destabilizer;  // from the box scan, else from the LP
  std::optional<ConstructedDestabilizer> constructed;
  std::uint64_t tested = 0;              // box points satisfying the null relation
  bool bound_too_small = false;          // LP found a destabilizer, the box did not
};

BlockLemmaReport verify_block_lemma(const BlockGroupData& group, const WeightSupport& w, Int bound, Exec exec);

}  // namespace nodalstab

#endif
