#include "nodalstab/error.hpp"

namespace nodalstab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidRational: return "InvalidRational";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyCurve: return "EmptyCurve";
    case ErrorCode::NonPositivePolarization: return "NonPositivePolarization";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::DanglingMarkedPoint: return "DanglingMarkedPoint";
    case ErrorCode::DisconnectedButAssertedConnected: return "DisconnectedButAssertedConnected";
    case ErrorCode::MultirankLengthMismatch: return "MultirankLengthMismatch";
    case ErrorCode::NegativeRank: return "NegativeRank";
    case ErrorCode::TypesLengthMismatch: return "TypesLengthMismatch";
    case ErrorCode::NodeTypeOutOfRange: return "NodeTypeOutOfRange";
    case ErrorCode::GpsTypeOutOfRange: return "GpsTypeOutOfRange";
    case ErrorCode::ConflictingInterpretation: return "ConflictingInterpretation";
    case ErrorCode::KappaLengthMismatch: return "KappaLengthMismatch";
    case ErrorCode::NonPositiveKappa: return "NonPositiveKappa";
    case ErrorCode::ZeroTotalRank: return "ZeroTotalRank";
    case ErrorCode::AllComponentsZero: return "AllComponentsZero";
    case ErrorCode::NonUniformRank: return "NonUniformRank";
    case ErrorCode::MissingGpsTypes: return "MissingGpsTypes";
    case ErrorCode::StepRankOutOfRange: return "StepRankOutOfRange";
    case ErrorCode::StepNotDominatedByAmbient: return "StepNotDominatedByAmbient";
    case ErrorCode::NonMonotoneGpsDims: return "NonMonotoneGpsDims";
    case ErrorCode::MissingGpsDims: return "MissingGpsDims";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::InvalidSupportTuple: return "InvalidSupportTuple";
    case ErrorCode::WeightCountMismatch: return "WeightCountMismatch";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::NonIncreasingWeights: return "NonIncreasingWeights";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::InvalidBlockData: return "InvalidBlockData";
    case ErrorCode::MixedDegreeSigns: return "MixedDegreeSigns";
    case ErrorCode::NonHomogeneousWeight: return "NonHomogeneousWeight";
    case ErrorCode::AllBlocksZero: return "AllBlocksZero";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::CombinatorialExplosionGuard: return "CombinatorialExplosionGuard";
    case ErrorCode::NoPositiveConeFunction: return "NoPositiveConeFunction";
    case ErrorCode::TrivialReduction: return "TrivialReduction";
    case ErrorCode::PostconditionFailed: return "PostconditionFailed";
  }
  return "Unknown";
}

}  // namespace nodalstab
