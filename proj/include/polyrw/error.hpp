#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyrw {

enum class errc {
  invalid_polygraph,
  unknown_rule,
  unknown_cell,
  redex_mismatch,
  step_budget_exceeded,
  orientation_failure,
  budget_exceeded,
  not_locally_confluent,
  not_parallel,
  not_collapsible,
  substitution_out_of_scope,
  table_not_associative,
  no_unit,
  invalid_order,
  not_a_divisor,
  normalization_failure,
  unclassified_branching,
  ambiguous_classification,
  sphere_check_failed,
  mismatch_with_gar3,
  bad_parameter,
  invalid_datum,
  parse_error,
};

constexpr std::string_view errc_name(errc c) noexcept {
  switch (c) {
    case errc::invalid_polygraph: return "InvalidPolygraph";
    case errc::unknown_rule: return "UnknownRule";
    case errc::unknown_cell: return "UnknownCell";
    case errc::redex_mismatch: return "RedexMismatch";
    case errc::step_budget_exceeded: return "StepBudgetExceeded";
    case errc::orientation_failure: return "OrientationFailure";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_locally_confluent: return "NotLocallyConfluent";
    case errc::not_parallel: return "NotParallel";
    case errc::not_collapsible: return "NotCollapsible";
    case errc::substitution_out_of_scope: return "SubstitutionOutOfScope";
    case errc::table_not_associative: return "TableNotAssociative";
    case errc::no_unit: return "NoUnit";
    case errc::invalid_order: return "InvalidOrder";
    case errc::not_a_divisor: return "NotADivisor";
    case errc::normalization_failure: return "NormalizationFailure";
    case errc::unclassified_branching: return "UnclassifiedBranching";
    case errc::ambiguous_classification: return "AmbiguousClassification";
    case errc::sphere_check_failed: return "SphereCheckFailed";
    case errc::mismatch_with_gar3: return "MismatchWithGar3";
    case errc::bad_parameter: return "BadParameter";
    case errc::invalid_datum: return "InvalidDatum";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library.  `code()` tells the kinds apart.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class parse_error : public error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : error(errc::parse_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polyrw
