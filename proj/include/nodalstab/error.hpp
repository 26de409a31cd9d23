#ifndef NODALSTAB_ERROR_HPP
#define NODALSTAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nodalstab {

enum class ErrorCode {
  // input parsing
  ParseError,
  InvalidRational,
  InvalidArgument,
  // core_model
  EmptyCurve,
  NonPositivePolarization,
  NegativeGenus,
  DanglingMarkedPoint,
  DisconnectedButAssertedConnected,
  MultirankLengthMismatch,
  NegativeRank,
  TypesLengthMismatch,
  NodeTypeOutOfRange,
  GpsTypeOutOfRange,
  ConflictingInterpretation,
  // invariant_calculus
  KappaLengthMismatch,
  NonPositiveKappa,
  ZeroTotalRank,
  AllComponentsZero,
  NonUniformRank,
  MissingGpsTypes,
  // filtration_calculus
  StepRankOutOfRange,
  StepNotDominatedByAmbient,
  NonMonotoneGpsDims,
  MissingGpsDims,
  EmptySupport,
  InvalidSupportTuple,
  WeightCountMismatch,
  NonPositiveWeight,
  ConstraintViolated,
  NonIncreasingWeights,
  EmptyFamily,
  // git_weights
  InvalidBlockData,
  MixedDegreeSigns,
  NonHomogeneousWeight,
  AllBlocksZero,
  // cone_geometry
  DegenerateCone,
  CombinatorialExplosionGuard,
  NoPositiveConeFunction,
  // nodal_transfer
  TrivialReduction,
  // internal consistency (a checked postcondition failed)
  PostconditionFailed,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nodalstab

#endif
