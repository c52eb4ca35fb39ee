#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace betadigits {

/// Coarse failure class; the CLI maps each one to an exit code.
enum class ErrorCategory {
  input,       // malformed input, parse failures
  domain,      // well-formed input outside the domain of an operation
  hypothesis,  // an instance violates a hypothesis of the bound
  identity,    // an exact identity failed (a bug or inconsistent data)
  numeric,     // certified numerics could not conclude within limits
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define BETADIGITS_DEFINE_ERROR(Name, Category)                      \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(Category, what) {} \
  }

BETADIGITS_DEFINE_ERROR(ParseError, ErrorCategory::input);
BETADIGITS_DEFINE_ERROR(NotMonic, ErrorCategory::input);
BETADIGITS_DEFINE_ERROR(NotSquarefree, ErrorCategory::input);
BETADIGITS_DEFINE_ERROR(InsufficientDigits, ErrorCategory::input);
BETADIGITS_DEFINE_ERROR(AllZero, ErrorCategory::input);
BETADIGITS_DEFINE_ERROR(NotReduced, ErrorCategory::input);
BETADIGITS_DEFINE_ERROR(HorizonExceeded, ErrorCategory::input);
BETADIGITS_DEFINE_ERROR(NotInGapInterior, ErrorCategory::input);
BETADIGITS_DEFINE_ERROR(DivisionByZero, ErrorCategory::domain);
BETADIGITS_DEFINE_ERROR(OutOfRange, ErrorCategory::domain);
BETADIGITS_DEFINE_ERROR(NoRootOutsideUnitDisk, ErrorCategory::domain);
BETADIGITS_DEFINE_ERROR(PrecisionExhausted, ErrorCategory::numeric);
BETADIGITS_DEFINE_ERROR(ThresholdTieUnresolved, ErrorCategory::numeric);
BETADIGITS_DEFINE_ERROR(IdentityFailure, ErrorCategory::identity);
/// The instance breaks a standing assumption (base class, integrality of A_k and pi, the relation for xi).
BETADIGITS_DEFINE_ERROR(HypothesisViolated, ErrorCategory::hypothesis);

#undef BETADIGITS_DEFINE_ERROR

/// Extended Euclid hit a nontrivial factor of the defining polynomial.
class ReducibleDetected : public Error {
 public:
  ReducibleDetected(const std::string& what, std::string factor)
      : Error(ErrorCategory::domain, what), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

/// Coefficient condition failed: B_k = A_k (beta-1)^(D-k) / pi is not in Z[beta].
class HypothesisIIViolated : public Error {
 public:
  explicit HypothesisIIViolated(int k)
      : Error(ErrorCategory::hypothesis,
              "coefficient B_" + std::to_string(k) + " is not in Z[beta]"),
        k_(k) {}
  int k() const noexcept { return k_; }

 private:
  int k_;
};

/// Non-integrality condition failed: B_0 beta^n is in Z[beta] for the witness n.
class HypothesisIIIViolated : public Error {
 public:
  explicit HypothesisIIIViolated(std::int64_t witness)
      : Error(ErrorCategory::hypothesis,
              "B_0 * beta^" + std::to_string(witness) + " lies in Z[beta]"),
        witness_(witness) {}
  std::int64_t witness() const noexcept { return witness_; }

 private:
  std::int64_t witness_;
};

}  // namespace betadigits
