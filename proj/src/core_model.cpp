#include "nodalstab/core_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nodalstab {

Int CurveData::ell_sum() const {
  Int sum = 0;
  for (const auto& c : components) sum += c.ell;
  return sum;
}

Int CurveData::euler_structure_sheaf() const {
  Int sum = 0;
  for (const auto& c : components) sum += 1 - c.genus;
  return sum - static_cast<Int>(marked_pairs.size());
}

std::optional<Int> SheafData::uniform_rank() const {
  if (multirank.empty()) return std::nullopt;
  for (auto r : multirank) {
    if (r != multirank.front()) return std::nullopt;
  }
  return multirank.front();
}

Int total_rank(const CurveData& curve, std::span<const Int> multirank) {
  if (multirank.size() != curve.components.size()) {
    throw Error(ErrorCode::MultirankLengthMismatch, "multirank length does not match the number of components");
  }
  Int trk = 0;
  for (std::size_t i = 0; i < multirank.size(); ++i) trk += curve.components[i].ell * multirank[i];
  return trk;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

bool graph_connected(const CurveData& curve) {
  const std::size_t n = curve.components.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : curve.marked_pairs) {
    parent[find_root(parent, static_cast<std::size_t>(a))] = find_root(parent, static_cast<std::size_t>(b));
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (find_root(parent, i) != find_root(parent, 0)) return false;
  }
  return true;
}

std::string describe(const char* what, std::size_t index) {
  std::ostringstream os;
  os << what << " " << index;
  return os.str();
}

}  // namespace

Validation validate_instance(const CurveData& curve, const SheafData& sheaf) {
  Validation out;
  auto& diag = out.diagnostics;
  const std::size_t t = curve.components.size();
  const std::size_t c = curve.marked_pairs.size();

  if (t == 0) diag.push_back({ErrorCode::EmptyCurve, "curve has no components"});
  for (std::size_t i = 0; i < t; ++i) {
    if (curve.components[i].ell < 1) {
      diag.push_back({ErrorCode::NonPositivePolarization, describe("polarization degree must be >= 1 on component", i)});
    }
    if (curve.components[i].genus < 0) {
      diag.push_back({ErrorCode::NegativeGenus, describe("negative genus on component", i)});
    }
  }
  bool pairs_ok = true;
  for (std::size_t j = 0; j < c; ++j) {
    const auto [a, b] = curve.marked_pairs[j];
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= t || static_cast<std::size_t>(b) >= t) {
      diag.push_back({ErrorCode::DanglingMarkedPoint, describe("marked pair references a missing component: pair", j)});
      pairs_ok = false;
    }
  }
  if (pairs_ok && t > 0 && curve.connected && !graph_connected(curve)) {
    diag.push_back({ErrorCode::DisconnectedButAssertedConnected, "curve is asserted connected but its dual graph is not"});
  }

  bool ranks_ok = sheaf.multirank.size() == t;
  if (!ranks_ok) {
    diag.push_back({ErrorCode::MultirankLengthMismatch, "multirank length does not match the number of components"});
  }
  for (std::size_t i = 0; i < sheaf.multirank.size(); ++i) {
    if (sheaf.multirank[i] < 0) {
      diag.push_back({ErrorCode::NegativeRank, describe("negative rank on component", i)});
      ranks_ok = false;
    }
  }

  if (sheaf.node_types && sheaf.gps_types) {
    diag.push_back({ErrorCode::ConflictingInterpretation, "sheaf carries both node_types and gps_types"});
  }
  if (sheaf.node_types) {
    const auto& types = *sheaf.node_types;
    if (types.size() != c) {
      diag.push_back({ErrorCode::TypesLengthMismatch, "node_types length does not match the number of marked pairs"});
    }
    const auto r = sheaf.uniform_rank();
    if (!r) {
      diag.push_back({ErrorCode::NonUniformRank, "node types require a sheaf of uniform rank"});
    } else {
      for (std::size_t j = 0; j < types.size(); ++j) {
        if (types[j] < 0 || types[j] > *r) {
          diag.push_back({ErrorCode::NodeTypeOutOfRange, describe("node type outside [0, r] at node", j)});
        }
      }
    }
  }
  if (sheaf.gps_types) {
    const auto& types = *sheaf.gps_types;
    if (types.size() != c) {
      diag.push_back({ErrorCode::TypesLengthMismatch, "gps_types length does not match the number of marked pairs"});
    }
    if (ranks_ok && pairs_ok) {
      for (std::size_t j = 0; j < std::min(types.size(), c); ++j) {
        const auto [a, b] = curve.marked_pairs[j];
        const Int bound = sheaf.multirank[static_cast<std::size_t>(a)] + sheaf.multirank[static_cast<std::size_t>(b)];
        if (types[j] < 0 || types[j] > bound) {
          diag.push_back({ErrorCode::GpsTypeOutOfRange, describe("gps type outside [0, r(mu)+r(nu)] at pair", j)});
        }
      }
    }
  }

  if (!diag.empty()) return out;

  ValidatedInstance v;
  v.curve = curve;
  v.sheaf = sheaf;
  v.euler_structure_sheaf = curve.euler_structure_sheaf();
  v.arithmetic_genus = curve.arithmetic_genus();
  v.total_rank = total_rank(curve, sheaf.multirank);
  v.uniform_rank = sheaf.uniform_rank().has_value();
  out.instance = std::move(v);
  return out;
}

ValidatedInstance require_valid(const CurveData& curve, const SheafData& sheaf) {
  auto v = validate_instance(curve, sheaf);
  if (!v.ok()) throw Error(v.diagnostics.front().code, v.diagnostics.front().message);
  return std::move(*v.instance);
}

BasicInvariants basic_invariants(const CurveData& curve, std::span<const Int> multirank, Int euler) {
  BasicInvariants out;
  out.total_rank = total_rank(curve, multirank);
  out.rank_ell = Rational(out.total_rank, curve.ell_sum());
  out.degree_ell = Rational(euler) - out.rank_ell * curve.euler_structure_sheaf();
  return out;
}

BasicInvariants basic_invariants(const CurveData& curve, const SheafData& sheaf) {
  return basic_invariants(curve, sheaf.multirank, sheaf.euler);
}

}  // namespace nodalstab
