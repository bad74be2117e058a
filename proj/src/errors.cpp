#include "posetdegen/errors.hpp"

namespace posetdegen {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::cycle_detected: return "CycleDetected";
    case ErrorCode::size_bound_exceeded: return "SizeBoundExceeded";
    case ErrorCode::condition_violated: return "ConditionViolated";
    case ErrorCode::not_a_sublattice: return "NotASublattice";
    case ErrorCode::height_deficient: return "HeightDeficient";
    case ErrorCode::invalid_structure: return "InvalidStructure";
    case ErrorCode::not_a_lattice_point: return "NotALatticePoint";
    case ErrorCode::not_in_order_polytope: return "NotInOrderPolytope";
    case ErrorCode::kind_mismatch: return "KindMismatch";
    case ErrorCode::outside_cone: return "OutsideCone";
    case ErrorCode::internal_closure_failure: return "InternalClosureFailure";
    case ErrorCode::not_dominant: return "NotDominant";
    case ErrorCode::not_a_partition: return "NotAPartition";
    case ErrorCode::theorem_violation: return "TheoremViolation";
    case ErrorCode::invalid_dims: return "InvalidDims";
    case ErrorCode::mode_dims_mismatch: return "ModeDimsMismatch";
    case ErrorCode::invalid_index: return "InvalidIndex";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::weaker: return "i";
    case Condition::star_closed: return "ii";
    case Condition::marked_top: return "iii";
    case Condition::minmax: return "minmax";
    case Condition::dominance: return "dominance";
  }
  return "?";
}

std::string Diagnostic::message() const {
  return "condition (" + std::string(to_string(condition)) + ") violated: " + witness;
}

}  // namespace posetdegen
