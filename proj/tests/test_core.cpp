#include "doctest.h"
#include "oracles.hpp"

#include "harbourne/profile.hpp"
#include "harbourne/rational.hpp"

#include <random>

using harbourne::MultiplicityMultiset;
using harbourne::Profile;
using harbourne::ProfileError;
using harbourne::Rational;

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("-29/12") == Rational(-29, 12));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("10/4").to_string() == "5/2");
  CHECK(Rational(-3).to_string() == "-3");
  CHECK(Rational(-3).to_fraction_string() == "-3/1");
  CHECK_THROWS_AS(Rational::parse("-2.4166"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  try {
    Rational::parse("-2.5");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("-29/12") != std::string::npos);
  }
}

TEST_CASE("rational round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> den(1, 100000);
  for (int n = 0; n < 2000; ++n) {
    const Rational r(num(rng), den(rng));
    CHECK(Rational::parse(r.to_string()) == r);
    CHECK(Rational::parse(r.to_fraction_string()) == r);
    CHECK(r.denominator() > 0);
  }
}

TEST_CASE("profile validation") {
  const auto p = Profile::from_counts(10, {{3, 7}, {4, 4}});
  CHECK(p.num_points() == 11);
  CHECK(p.incidences() == 37);
  CHECK(Profile::from_counts(3, {{2, 3}}).num_points() == 3);

  try {
    Profile::from_counts(5, {{3, 3}});
    FAIL("expected identity violation");
  } catch (const ProfileError& e) {
    CHECK(e.kind() == ProfileError::Kind::kIdentityViolation);
    const std::string what = e.what();
    CHECK(what.find("10") != std::string::npos);
    CHECK(what.find("9") != std::string::npos);
  }
  try {
    Profile::from_counts(5, {});
    FAIL("expected empty singular set");
  } catch (const ProfileError& e) {
    CHECK(e.kind() == ProfileError::Kind::kEmptySingularSet);
  }
  CHECK_THROWS_AS(Profile::from_counts(2, {{3, 1}}), ProfileError);
  CHECK_THROWS_AS(Profile::from_counts(4, {{2, -1}, {3, 3}}), ProfileError);
  CHECK_THROWS_AS(Profile::from_counts(1, {{2, 1}}), ProfileError);
}

TEST_CASE("canonical text") {
  const auto p = Profile::from_counts(10, {{4, 4}, {3, 7}});
  CHECK(p.canonical() == "d=10; t3=7,t4=4");
  CHECK(Profile::parse(p.canonical()) == p);
  CHECK(Profile::parse("d=7;t3=7") == Profile::from_counts(7, {{3, 7}}));
  CHECK_THROWS(Profile::parse("d=7; t3=6"));
  CHECK_THROWS(Profile::parse("seven lines"));
}

TEST_CASE("combinatorial quotient examples") {
  CHECK(combinatorial_quotient(Profile::from_counts(13, {{4, 13}})) == Rational(-3));
  CHECK(combinatorial_quotient(Profile::from_counts(9, {{9, 1}})) == Rational(0));
  CHECK(combinatorial_quotient(Profile::from_counts(10, {{3, 7}, {4, 4}})) == Rational(-27, 11));
}

TEST_CASE("harbourne constant of a multiset") {
  CHECK(harbourne_of_multiset(3, MultiplicityMultiset{{2, 2, 2}}) == Rational(-1));
  CHECK(harbourne_of_multiset(2, MultiplicityMultiset{{2}}) == Rational(0));
  CHECK(harbourne_of_multiset(8, MultiplicityMultiset{{4, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2}}) == Rational(-2));
  CHECK_THROWS(harbourne_of_multiset(3, MultiplicityMultiset{}));
  CHECK_THROWS(harbourne_of_multiset(3, MultiplicityMultiset{{1}}));
}

TEST_CASE("quotient forms agree on every profile") {
  for (int d = 3; d <= 14; ++d) {
    for (const auto& t : oracle::all_profiles(d)) {
      const auto p = Profile::from_dense(d, t);
      const auto q = combinatorial_quotient(p);
      CHECK(q == simplified_quotient(p));
      const auto [n, den] = oracle::quotient(d, t);
      CHECK(q == Rational(n, den));
      CHECK(harbourne_of_multiset(d, p.to_multiset()) == q);
    }
  }
}

TEST_CASE("profile and multiset are inverse") {
  for (int d = 3; d <= 12; ++d) {
    for (const auto& t : oracle::all_profiles(d)) {
      const auto p = Profile::from_dense(d, t);
      const auto m = p.to_multiset();
      CHECK(std::is_sorted(m.entries.rbegin(), m.entries.rend()));
      CHECK(m.size() == p.num_points());
      CHECK(Profile::from_multiset(d, m) == p);
      CHECK(p.dense() == t);
    }
  }
}
