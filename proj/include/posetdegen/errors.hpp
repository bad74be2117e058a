#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetdegen {

enum class ErrorCode {
  duplicate_label,
  unknown_label,
  cycle_detected,
  size_bound_exceeded,
  condition_violated,
  not_a_sublattice,
  height_deficient,
  invalid_structure,
  not_a_lattice_point,
  not_in_order_polytope,
  kind_mismatch,
  outside_cone,
  internal_closure_failure,
  not_dominant,
  not_a_partition,
  theorem_violation,
  invalid_dims,
  mode_dims_mismatch,
  invalid_index,
  parse_error,
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

// Which requirement of a relative structure failed.
enum class Condition {
  weaker,        // (i)   p <' q implies p < q
  star_closed,   // (ii)  J(P,<) closed under *_{P,<'}
  marked_top,    // (iii) no marked p with p <' q
  minmax,        // marked set holds every minimal and maximal element
  dominance,     // p < q in P* implies lambda_p >= lambda_q
};

std::string_view to_string(Condition c);

struct Diagnostic {
  Condition condition;
  std::string witness;

  std::string message() const;
};

class ConditionViolated : public Error {
 public:
  explicit ConditionViolated(Diagnostic d)
      : Error(ErrorCode::condition_violated, d.message()), diagnostic_(std::move(d)) {}

  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

// Incomparable pair of lattice positions (J1, J2).
using IdealPair = std::pair<std::size_t, std::size_t>;

class OutsideCone : public Error {
 public:
  OutsideCone(std::vector<IdealPair> violations, const std::string& message)
      : Error(ErrorCode::outside_cone, message), violations_(std::move(violations)) {}

  const std::vector<IdealPair>& violations() const noexcept { return violations_; }

 private:
  std::vector<IdealPair> violations_;
};

}  // namespace posetdegen
