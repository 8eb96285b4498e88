#pragma once

#include "harbourne/profile.hpp"
#include "harbourne/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace harbourne {

struct PrimePower {
  std::int64_t p = 0;
  int r = 0;
  std::int64_t value() const;
};

/// p^r with p prime and r >= 1; nullopt otherwise (including n = 1).
std::optional<PrimePower> prime_power(std::int64_t n);
inline bool is_prime_power(std::int64_t n) { return prime_power(n).has_value(); }
bool is_prime(std::int64_t n);

/// Least prime power q with d <= q^2 + q + 1.
std::int64_t q_of(std::int64_t d);
/// Largest prime power r with r^2 + r + 1 <= d. Throws std::domain_error for d < 7.
std::int64_t r_of(std::int64_t d);

enum class Provenance { kConjecture, kNaiveUpper, kGeneric, kConstruction, kPencil };
std::string_view to_string(Provenance p);

struct SyntheticProfile {
  Profile profile;
  Provenance provenance;
};

/// A value together with a profile that attains it (if realizable).
struct BoundWitness {
  Rational value;
  SyntheticProfile witness;
};

/// All quantities entering the conjectured value h(d).
struct ConjectureData {
  std::int64_t d = 0;
  std::int64_t q = 0;
  std::int64_t i = 0;
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  int eps1 = 0;
  int eps2 = 0;
  std::int64_t tq_minus = 0;
  std::int64_t tq = 0;
  std::int64_t tq_plus = 0;

  bool in_generic_range() const { return i <= 2 * q - 2; }
  bool in_closing_case() const { return i == 2 * q - 1; }
  bool in_domain() const { return i <= 2 * q - 1; }
};

ConjectureData conjecture_data(std::int64_t d);

struct ConjectureValue {
  Rational h;
  SyntheticProfile witness;
  /// False when the displayed formula and the witness profile's quotient
  /// disagree, which happens for d = 4 (q = 2 in the closing case).
  bool witness_consistent = true;
};

/// h(d), or nullopt when i > 2q - 1.
std::optional<ConjectureValue> conjectured_h(std::int64_t d);

/// x >= (1 - sqrt(4d - 3)) / 2, decided in exact arithmetic.
bool lower_bound_holds(const Rational& x, std::int64_t d);
/// x == (1 - sqrt(4d - 3)) / 2 exactly (only possible when 4d - 3 is a square).
bool lower_bound_equality(const Rational& x, std::int64_t d);

/// d/s - 1/2 - sqrt(1 + (4d^2 - 4d)/s) / 2. Diagnostics only.
double lower_bound_function(std::int64_t d, std::int64_t s);

/// Full plane PG(2, r(d)) plus d - (r^2+r+1) general lines. Requires d >= 7.
BoundWitness naive_upper_bound(std::int64_t d);
/// Closed form of the naive bound, -2(r^4+r^3-r-(d-1)^2)/(r^4+2r^3-r-d^2+d-2).
Rational naive_upper_bound_formula(std::int64_t d);

/// d lines in general position: t_2 = C(d,2), value -2(d-2)/(d-1).
BoundWitness generic_profile(std::int64_t d);

BoundWitness pencil_profile(std::int64_t d);

/// Minimum over the conjecture witness (when consistent), the naive bound,
/// the generic arrangement and the pencil.
BoundWitness best_known_upper(std::int64_t d);

}  // namespace harbourne
