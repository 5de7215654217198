#pragma once

#include <stdexcept>
#include <string>

namespace sgr {

// Base class for all input-validation failures raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a computation's own consistency checks fail. This never
// indicates bad input; it indicates a bug in the library (or a broken
// mathematical assumption) and is deliberately not an sgr::Error.
struct InternalCheckFailure : std::logic_error {
  using std::logic_error::logic_error;
};

// --- semigroup construction ---
struct EmptyGenerators : Error {
  EmptyGenerators() : Error("generator list is empty") {}
};
struct NonPositiveGenerator : Error {
  explicit NonPositiveGenerator(long long value)
      : Error("generator " + std::to_string(value) + " is not positive") {}
};
struct GcdNotOne : Error {
  explicit GcdNotOne(long long gcd)
      : Error("gcd of generators is " + std::to_string(gcd) + ", expected 1") {}
};
struct SieveOverflow : Error {
  using Error::Error;
};
struct NotAMember : Error {
  explicit NotAMember(long long value)
      : Error(std::to_string(value) + " is not a member of the semigroup") {}
};

// --- ideals ---
struct MixedSemigroups : Error {
  MixedSemigroups() : Error("operands live over different semigroups") {}
};
struct NotIntegral : Error {
  using Error::Error;
};
struct UnitIdeal : Error {
  UnitIdeal() : Error("the unit ideal has an empty quotient") {}
};

// --- catalog ---
struct NotSymmetric : Error {
  using Error::Error;
};
struct NotInCatalog : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};

// --- gluing ---
struct D1NotInH2 : Error {
  explicit D1NotInH2(long long d)
      : Error("d1 = " + std::to_string(d) + " is not a member of H2") {}
};
struct D2NotInH1 : Error {
  explicit D2NotInH1(long long d)
      : Error("d2 = " + std::to_string(d) + " is not a member of H1") {}
};
struct DIsMinimalGenerator : Error {
  explicit DIsMinimalGenerator(long long d)
      : Error(std::to_string(d) +
              " is a minimal generator of the factor it must embed into") {}
};
struct NotCoprime : Error {
  NotCoprime(long long x, long long y)
      : Error(std::to_string(x) + " and " + std::to_string(y) +
              " are not coprime") {}
};
struct CNotInSemigroup : Error {
  explicit CNotInSemigroup(long long c)
      : Error("c = " + std::to_string(c) +
              " is not a member of the base semigroup") {}
};

}  // namespace sgr
