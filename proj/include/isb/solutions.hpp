#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "isb/magma.hpp"
#include "isb/pairmap.hpp"
#include "isb/semibrace.hpp"

namespace isb {

enum class Equation { Braid, Qybe, Pentagon };

std::string_view to_string(Equation e) noexcept;

// (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r); witness (a,b,c).
Check check_braid(PairMap const& r);
// Qybe: r12 r13 r23 = r23 r13 r12. Pentagon: r23 r13 r12 = r12 r23.
// Compositions act right to left; r13(x,y,z) = (lambda_x(z), y, rho_z(x)).
Check check_equation(PairMap const& r, Equation which);

// tau after r: (a,b) -> (rho_b(a), lambda_a(b)).
PairMap flip_compose(PairMap const& r);

inline constexpr std::size_t kPowerCap = 4096;

struct PowerProfile {
  std::size_t index = 0;
  std::size_t period = 1;
  bool is_idempotent = false;
  bool is_cubic = false;
  bool is_involutive = false;
};

// Iterates id, r, r^2, ... as tables on the n^2 points until a repeat.
// Throws OrderExceedsCap if no repeat occurs within max_power steps.
PowerProfile power_profile(PairMap const& r, std::size_t max_power = kPowerCap);

struct DegeneracyProfile {
  Check left_nondegenerate;   // witness (a, b, c): lambda_a(b) = lambda_a(c)
  Check right_nondegenerate;  // witness (b, a, c): rho_b(a) = rho_b(c)
  Check bijective;            // witness (a, b, c, d): r(a,b) = r(c,d)

  std::string_view degeneracy_class() const noexcept;
};

DegeneracyProfile degeneracy_profile(PairMap const& r);

struct SolutionReport {
  Check braid;
  Check qybe;
  Check pentagon;
  PowerProfile power;
  DegeneracyProfile degeneracy;
};

SolutionReport solution_report(PairMap const& r);

inline constexpr std::size_t kIsomorphismCap = 8;

// First permutation phi (lexicographic) with (phi x phi) r1 = r2 (phi x phi).
std::optional<CarrierMap> solutions_isomorphic(PairMap const& r1, PairMap const& r2,
                                               std::size_t cap = kIsomorphismCap);

struct SufficientConditionsReport {
  // (a+b)(a+b)^-1(a+bc) = a+bc
  Check idempotent_absorption;
  // lambda_a(b)^-1 + lambda_{rho_b(a)}(c) = lambda_a(b)^-1 + lambda_{(a^-1+b)^-1} lambda_b(c)
  Check lambda_shift;
  // rho_b(a)^-1 + c = (b^-1+c)(rho_{lambda_b(c)}(a)^-1 + rho_c(b))
  Check rho_factorization;

  // The braid relation split into its three coordinates.
  Check lambda_lambda;
  Check lambda_rho_mixed;
  Check rho_rho;
  Check braid;

  bool conditions_hold() const noexcept {
    return idempotent_absorption.holds && lambda_shift.holds && rho_factorization.holds;
  }
  bool identities_hold() const noexcept {
    return lambda_lambda.holds && lambda_rho_mixed.holds && rho_rho.holds;
  }
  // conditions => identities <=> braid
  bool chain_consistent() const noexcept {
    return (!conditions_hold() || identities_hold()) && identities_hold() == braid.holds;
  }
};

SufficientConditionsReport check_sufficient_conditions(InverseSemiBrace const& s);

struct CondSolutionVerdict {
  Check condition;  // a + lambda_b(c)(1 + rho_c(b)) = a + b(1 + c); witness (a,b,c)
  Check braid;
  bool agrees() const noexcept { return condition.holds == braid.holds; }
};

// Requires a left semi-brace; throws NotLeftSemibrace otherwise.
CondSolutionVerdict check_condsolution(InverseSemiBrace const& s);

}  // namespace isb
