#include "wittstab/errors.hpp"

namespace wittstab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::OddRank: return "OddRank";
    case ErrorCode::NoUnitPivot: return "NoUnitPivot";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::OracleInconclusive: return "OracleInconclusive";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::IllFormed: return "IllFormed";
    case ErrorCode::NotCatalogued: return "NotCatalogued";
    case ErrorCode::NonUnitAssignment: return "NonUnitAssignment";
    case ErrorCode::NotALift: return "NotALift";
    case ErrorCode::NotUnitaryMod: return "NotUnitaryMod";
    case ErrorCode::NotCongruent: return "NotCongruent";
  }
  return "Unknown";
}

}  // namespace wittstab
