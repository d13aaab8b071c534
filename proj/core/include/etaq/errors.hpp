#pragma once

#include <stdexcept>
#include <string>

namespace etaq {

/// A coefficient was requested at or beyond the precision of a truncated series.
class InsufficientPrecision : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The hypothesis of a formula does not hold for the given input.
class FormulaNotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input (r-strings, TSV rows).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace etaq
