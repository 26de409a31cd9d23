#include "nodalstab/nodal_transfer.hpp"

#include <numeric>

namespace nodalstab {

bool is_nodal_instance(const SwampInstance& inst) { return inst.ambient.node_types.has_value(); }

SheafData transfer_sheaf(const CurveData& curve, const SheafData& nodal) {
  if (!nodal.node_types) throw Error(ErrorCode::InvalidArgument, "sheaf carries no node types");
  const auto v = validate_instance(curve, nodal);
  if (!v.ok()) throw Error(v.diagnostics.front().code, v.diagnostics.front().message);
  if (!nodal.uniform_rank()) throw Error(ErrorCode::NonUniformRank, "nodal sheaves must have uniform rank");
  SheafData out;
  out.multirank = nodal.multirank;
  out.gps_types = *nodal.node_types;
  out.euler = nodal.euler + std::accumulate(nodal.node_types->begin(), nodal.node_types->end(), Int{0});
  const KappaVector ones = KappaVector::ones(curve.marked_pairs.size());
  if (chi_kappa(out, ones) != Rational(nodal.euler)) {
    throw Error(ErrorCode::PostconditionFailed, "chi_1(F) differs from chi(E)");
  }
  return out;
}

SubsheafRecord transfer_step(const CurveData& curve, const SheafData& nodal_ambient, const SubsheafRecord& step) {
  const std::size_t c = curve.marked_pairs.size();
  const std::vector<Int> none;
  const auto& types = step.node_types ? *step.node_types : none;
  if (types.size() != c) throw Error(ErrorCode::TypesLengthMismatch, "step needs one node type per node");
  if (step.multirank.size() != curve.components.size()) {
    throw Error(ErrorCode::MultirankLengthMismatch, "step multirank length mismatch");
  }
  SubsheafRecord out;
  out.multirank = step.multirank;
  out.euler = step.euler;
  for (std::size_t j = 0; j < c; ++j) {
    const auto [mu, nu] = curve.marked_pairs[j];
    const Int branch_min = std::min(step.multirank[static_cast<std::size_t>(mu)], step.multirank[static_cast<std::size_t>(nu)]);
    if (types[j] < 0 || types[j] > branch_min) {
      throw Error(ErrorCode::NodeTypeOutOfRange, "step node type exceeds the step rank at node " + std::to_string(j));
    }
    if (types[j] > (*nodal_ambient.node_types)[j]) {
      throw Error(ErrorCode::StepNotDominatedByAmbient, "step node type exceeds the ambient type at node " + std::to_string(j));
    }
    out.euler += types[j];
    out.gps_dims.push_back(types[j]);
  }
  return out;
}

FlagShape transfer_filtration(const CurveData& curve, const SheafData& nodal_ambient, const FlagShape& flag) {
  FlagShape out;
  out.support = flag.support;
  for (std::size_t i = 0; i < flag.steps.size(); ++i) {
    out.steps.push_back(transfer_step(curve, nodal_ambient, flag.steps[i]));
    if (i > 0) {
      const auto& prev = out.steps[i - 1].gps_dims;
      for (std::size_t j = 0; j < prev.size(); ++j) {
        if (out.steps[i].gps_dims[j] < prev[j]) {
          throw Error(ErrorCode::NonMonotoneGpsDims, "step node types must be nondecreasing along the flag");
        }
      }
    }
  }
  return out;
}

namespace {

// Every m in {1, 2, 3}^s.
std::vector<std::vector<Rational>> weight_grid(std::size_t s) {
  std::vector<std::vector<Rational>> out;
  std::vector<Int> cur(s, 1);
  while (true) {
    out.emplace_back(cur.begin(), cur.end());
    std::size_t k = s;
    while (k > 0 && cur[k - 1] == 3) cur[--k] = 1;
    if (k == 0) break;
    ++cur[k - 1];
  }
  return out;
}

}  // namespace

SwampInstance transfer_to_normalization(const SwampInstance& nodal) {
  if (!is_nodal_instance(nodal)) throw Error(ErrorCode::InvalidArgument, "instance is not on a nodal curve (no node_types)");
  if (!nodal.curve.connected) {
    throw Error(ErrorCode::InvalidArgument, "a nodal instance must assert that its curve is connected");
  }
  if (!nodal.kappa.empty()) throw Error(ErrorCode::ConflictingInterpretation, "kappa is meaningless on the nodal side");

  SwampInstance out;
  out.curve = nodal.curve;
  out.ambient = transfer_sheaf(nodal.curve, nodal.ambient);
  out.kappa = KappaVector::ones(nodal.curve.marked_pairs.size());
  out.tensor = nodal.tensor;
  for (const auto& flag : nodal.flags) out.flags.push_back(transfer_filtration(nodal.curve, nodal.ambient, flag));
  if (nodal.flags.empty()) return out;

  const auto nodal_forms = all_shape_forms(nodal);
  const auto gps_forms = all_shape_forms(out);
  const Int alpha = total_rank(nodal.curve, nodal.ambient.multirank);
  for (std::size_t f = 0; f < nodal_forms.size(); ++f) {
    if (nodal_forms[f].step_trks != gps_forms[f].step_trks) {
      throw Error(ErrorCode::PostconditionFailed, "transfer changed a step total rank");
    }
    if (nodal_forms[f].chi != gps_forms[f].chi) {
      throw Error(ErrorCode::PostconditionFailed, "chi(E_., m_.) and chi_1(F_., m_.) differ");
    }
    for (const auto& m : weight_grid(nodal_forms[f].dim())) {
      if (nodal_forms[f].dim() == 0) break;
      const Rational lhs = mu_of_filtration(alpha, nodal_forms[f].step_trks, m, nodal.flags[f].support);
      const Rational rhs = mu_of_filtration(alpha, gps_forms[f].step_trks, m, out.flags[f].support);
      if (lhs != rhs) throw Error(ErrorCode::PostconditionFailed, "mu differs across the transfer");
    }
  }
  return out;
}

std::set<Int> possible_normalized_eulers(Int rank, Int chi, Int num_nodes) {
  if (rank < 0 || num_nodes < 0) throw Error(ErrorCode::InvalidArgument, "rank and node count must be nonnegative");
  std::set<Int> sums{0};
  for (Int j = 0; j < num_nodes; ++j) {
    std::set<Int> next;
    for (auto s : sums) {
      for (Int a = 0; a <= rank; ++a) next.insert(s + a);
    }
    sums = std::move(next);
  }
  std::set<Int> out;
  for (auto s : sums) out.insert(chi + s);
  return out;
}

MergedFiltration reduction_to_filtration(const CurveData& curve, const SheafData& sheaf, const ReductionDatum& red) {
  if (red.flags.size() != curve.components.size()) {
    throw Error(ErrorCode::MultirankLengthMismatch, "need one weighted flag per component");
  }
  bool nontrivial = false;
  for (std::size_t j = 0; j < red.flags.size(); ++j) {
    const auto& f = red.flags[j];
    if (f.dims.size() != f.weights.size()) {
      throw Error(ErrorCode::WeightCountMismatch, "component flag dims and weights differ in length");
    }
    Rational trace;
    Int prev = 0;
    for (std::size_t k = 0; k < f.dims.size(); ++k) {
      trace += (f.dims[k] - prev) * f.weights[k];
      prev = f.dims[k];
    }
    if (!trace.is_zero()) {
      throw Error(ErrorCode::ConstraintViolated,
                  "weights on component " + std::to_string(j) + " are not trace free (sum " + to_string(trace) + ")");
    }
    if (f.dims.size() > 1) nontrivial = true;
  }
  if (!nontrivial) throw Error(ErrorCode::TrivialReduction, "every component 1-PS is constant");
  return merge_flags(curve, sheaf.multirank, red.flags);
}

Rational reduction_chi(const CurveData& curve, const SheafData& sheaf, const MergedFiltration& merged,
                       const std::vector<Int>& step_eulers) {
  if (step_eulers.size() != merged.step_multiranks.size()) {
    throw Error(ErrorCode::WeightCountMismatch, "need one Euler characteristic per merged step");
  }
  WeightedFiltration filt;
  for (std::size_t i = 0; i < step_eulers.size(); ++i) {
    SubsheafRecord rec;
    rec.multirank = merged.step_multiranks[i];
    rec.euler = step_eulers[i];
    filt.steps.push_back(std::move(rec));
  }
  filt.m = merged.m;
  return chi_of_filtration(curve, sheaf, filt, KappaVector{});
}

}  // namespace nodalstab
