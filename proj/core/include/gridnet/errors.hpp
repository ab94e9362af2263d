#ifndef GRIDNET_ERRORS_HPP
#define GRIDNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gridnet {

/// Base class for all gridnet errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input data (bad CSV row, duplicate id,
/// dangling endpoint, invalid interval). Carries a line number when the
/// problem is tied to a specific input row (0 = not row-specific).
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// A requested snapshot contains no active elements.
class EmptyGraphError : public Error {
public:
  using Error::Error;
};

/// A metric or statistic is undefined for the given input
/// (too few nodes, no edges, constant series, zero baseline).
class UndefinedMetricError : public Error {
public:
  using Error::Error;
};

/// A model fit cannot be performed (fewer than two support points).
class FitError : public Error {
public:
  using Error::Error;
};

/// A removal scenario cannot run even after capping rules.
class InfeasibleScenarioError : public Error {
public:
  using Error::Error;
};

/// An exhaustive search would exceed the configured evaluation budget.
class BudgetExceededError : public Error {
public:
  using Error::Error;
};

}  // namespace gridnet

#endif
