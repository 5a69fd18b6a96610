#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isb {

using Element = std::uint32_t;

// A counterexample tuple, always the lexicographically first failing one.
using Witness = std::vector<Element>;

struct Check {
  bool holds = true;
  std::optional<Witness> witness;

  static Check pass() { return {}; }
  static Check fail(Witness w) { return {false, std::move(w)}; }

  explicit operator bool() const noexcept { return holds; }
};

enum class ErrorKind {
  MalformedTable,
  DimensionMismatch,
  NotAssociative,
  NotRegular,
  NonUniqueInverse,
  OrderExceedsCap,
  NotAssociativeAdd,
  NotInverseMul,
  LeftAxiomFails,
  NotLeftSemibrace,
  ElementNotIdempotent,
  NotClifford,
  NotSemilattice,
  NotBijective,
  IdentityConditionFails,
  CompositionConditionFails,
  MorphismNotHomomorphism,
  MatchedSystemInvalid,
  SigmaNotHomomorphism,
  SigmaNotSemibraceAutomorphism,
  DeltaNotAntiHomomorphism,
  DeltaNotEndomorphism,
  DoubleSemidirectCompatibilityFails,
  CocycleFails,
  AsymmetricCompatibilityFails,
  Timeout,
  InternalError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, std::string const& message, Witness witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  Witness const& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  Witness witness_;
};

}  // namespace isb
