#include "doctest.h"
#include "oracles.hpp"

#include "harbourne/bounds.hpp"

#include <cmath>
#include <random>

using namespace harbourne;

namespace {

bool brute_prime_power(std::int64_t n) {
  if (n < 2) return false;
  std::int64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST_CASE("prime powers") {
  CHECK(is_prime_power(9));
  CHECK(prime_power(9)->p == 3);
  CHECK(prime_power(9)->r == 2);
  CHECK_FALSE(is_prime_power(6));
  CHECK(prime_power(7)->r == 1);
  CHECK_FALSE(is_prime_power(1));
  CHECK_FALSE(is_prime_power(0));
  for (std::int64_t n = 0; n < 3000; ++n) {
    CHECK(is_prime_power(n) == brute_prime_power(n));
    if (auto pp = prime_power(n)) CHECK(pp->value() == n);
  }
}

TEST_CASE("q(d) and r(d)") {
  CHECK(q_of(32) == 7);
  CHECK(q_of(10) == 3);
  CHECK(q_of(7) == 2);
  CHECK(r_of(14) == 3);
  CHECK(r_of(7) == 2);
  CHECK_THROWS_AS(r_of(6), std::domain_error);
  for (std::int64_t d = 2; d <= 500; ++d) {
    const auto q = q_of(d);
    CHECK(is_prime_power(q));
    CHECK(d <= q * q + q + 1);
    for (std::int64_t n = 2; n < q; ++n)
      if (is_prime_power(n)) CHECK(d > n * n + n + 1);
    if (d >= 7) {
      const auto r = r_of(d);
      CHECK(r * r + r + 1 <= d);
      for (std::int64_t n = r + 1; n * n + n + 1 <= d; ++n) CHECK_FALSE(is_prime_power(n));
    }
  }
}

TEST_CASE("conjectured values") {
  auto h10 = conjectured_h(10);
  REQUIRE(h10);
  CHECK(h10->h == Rational(-29, 12));
  CHECK(h10->witness.profile == Profile::from_counts(10, {{3, 9}, {4, 3}}));
  CHECK(conjectured_h(14)->h == Rational(-54, 19));
  CHECK(conjectured_h(23)->h == Rational(-115, 30));
  CHECK(conjectured_h(7)->h == Rational(-2));
  CHECK(conjectured_h(7)->witness.profile == Profile::from_counts(7, {{3, 7}}));
  CHECK(conjectured_h(4)->h == Rational(-6, 5));
  CHECK_FALSE(conjectured_h(4)->witness_consistent);
}

TEST_CASE("conjecture matches the tabulated values for d = 5..31") {
  for (int d = 5; d <= 31; ++d) {
    const auto h = conjectured_h(d);
    REQUIRE(h);
    CHECK_MESSAGE(h->h == oracle::table(d), "d=" << d);
    CHECK(h->witness_consistent);
    CHECK(combinatorial_quotient(h->witness.profile) == h->h);
  }
}

TEST_CASE("conjecture witnesses are valid profiles in the whole domain") {
  for (std::int64_t d = 5; d <= 400; ++d) {
    const auto data = conjecture_data(d);
    const auto h = conjectured_h(d);
    CHECK(h.has_value() == data.in_domain());
    if (!h) continue;
    CHECK(h->witness.profile.d() == d);
    CHECK(h->witness_consistent);
    CHECK(combinatorial_quotient(h->witness.profile) == h->h);
  }
}

TEST_CASE("lower bound") {
  CHECK(lower_bound_holds(Rational(-2), 7));
  CHECK(lower_bound_equality(Rational(-2), 7));
  CHECK(lower_bound_holds(Rational(-3), 13));
  CHECK(lower_bound_equality(Rational(-3), 13));
  CHECK(lower_bound_holds(Rational(-12, 7), 6));
  CHECK_FALSE(lower_bound_equality(Rational(-12, 7), 6));
  CHECK_FALSE(lower_bound_holds(Rational(-21, 10), 7));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-4000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  std::uniform_int_distribution<std::int64_t> dd(6, 200);
  for (int n = 0; n < 3000; ++n) {
    const Rational x(num(rng), den(rng));
    const auto d = dd(rng);
    const long double bound = (1.0L - std::sqrt(4.0L * d - 3.0L)) / 2.0L;
    const long double xv = x.to_double();
    if (std::fabs(xv - bound) < 1e-9L) continue;
    CHECK(lower_bound_holds(x, d) == (xv >= bound));
  }
}

TEST_CASE("table values respect the lower bound") {
  for (int d = 6; d <= 31; ++d) CHECK(lower_bound_holds(oracle::table(d), d));
}

TEST_CASE("lower bound function") {
  CHECK(lower_bound_function(5, 1) == doctest::Approx(0.0));
  CHECK(lower_bound_function(7, 7) == doctest::Approx(-2.0));
  CHECK(lower_bound_function(7, 8) > lower_bound_function(7, 7));
  for (std::int64_t d = 6; d <= 60; ++d) {
    double prev = lower_bound_function(d, 1);
    for (std::int64_t s = 2; s <= 400; ++s) {
      const double cur = lower_bound_function(d, s);
      // strictly increasing from s = d on
      if (s > d) CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("naive upper bound") {
  CHECK(naive_upper_bound(7).value == Rational(-2));
  CHECK(naive_upper_bound(8).value == Rational(-27, 14));
  CHECK(naive_upper_bound(13).value == Rational(-3));
  for (std::int64_t d = 7; d <= 100; ++d) {
    const auto b = naive_upper_bound(d);
    CHECK(b.value == naive_upper_bound_formula(d));
    CHECK(combinatorial_quotient(b.witness.profile) == b.value);
    CHECK(b.witness.provenance == Provenance::kNaiveUpper);
  }
  for (int d = 7; d <= 31; ++d) CHECK(oracle::table(d) <= naive_upper_bound(d).value);
}

TEST_CASE("generic and best known") {
  CHECK(generic_profile(4).value == Rational(-4, 3));
  CHECK(generic_profile(2).value == Rational(0));
  CHECK(generic_profile(5).value == Rational(-3, 2));
  CHECK(best_known_upper(4).value == Rational(-4, 3));
  CHECK(best_known_upper(4).witness.provenance == Provenance::kGeneric);
  CHECK(best_known_upper(31).value == Rational(-5));
  CHECK(best_known_upper(22).value == Rational(-108, 29));
  for (int d = 2; d <= 31; ++d) {
    const auto b = best_known_upper(d);
    CHECK_MESSAGE(b.value == oracle::table(d), "d=" << d);
    CHECK(combinatorial_quotient(b.witness.profile) == b.value);
  }
  for (std::int64_t d = 2; d <= 200; ++d) {
    const auto b = best_known_upper(d);
    CHECK(b.value <= generic_profile(d).value);
    if (d >= 7) CHECK(b.value <= naive_upper_bound(d).value);
    if (d >= 6) CHECK(lower_bound_holds(b.value, d));
  }
}
