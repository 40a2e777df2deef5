#pragma once

#include <stdexcept>
#include <string>

namespace apoly {

// Exact arithmetic refuses to guess: every operation that could silently lose
// information throws one of these instead.  All of them derive from
// std::runtime_error so callers can catch coarsely or precisely as needed.

struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeExponent : std::runtime_error {
  explicit NegativeExponent(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDenominator : std::runtime_error {
  explicit ZeroDenominator(const std::string& what) : std::runtime_error(what) {}
};

struct DenominatorShape : std::runtime_error {
  explicit DenominatorShape(const std::string& what) : std::runtime_error(what) {}
};

struct NotPolynomial : std::runtime_error {
  explicit NotPolynomial(const std::string& what) : std::runtime_error(what) {}
};

struct RedundantFactor : std::runtime_error {
  explicit RedundantFactor(const std::string& what) : std::runtime_error(what) {}
};

struct DivisibilityFailure : std::runtime_error {
  explicit DivisibilityFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ReductionFailure : std::runtime_error {
  explicit ReductionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct CacheDivergence : std::runtime_error {
  explicit CacheDivergence(const std::string& what) : std::runtime_error(what) {}
};

struct BadInput : std::runtime_error {
  explicit BadInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace apoly
