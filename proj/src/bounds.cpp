#include "harbourne/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace harbourne {

std::int64_t PrimePower::value() const {
  std::int64_t v = 1;
  for (int k = 0; k < r; ++k) v *= p;
  return v;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::optional<PrimePower> prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  PrimePower out{p, 0};
  while (n % p == 0) {
    n /= p;
    ++out.r;
  }
  if (n != 1) return std::nullopt;
  return out;
}

std::int64_t q_of(std::int64_t d) {
  if (d < 2) throw std::domain_error("q(d) requires d >= 2");
  for (std::int64_t q = 2;; ++q)
    if (is_prime_power(q) && d <= q * q + q + 1) return q;
}

std::int64_t r_of(std::int64_t d) {
  if (d < 7) throw std::domain_error("r(d) is undefined for d < 7");
  std::int64_t best = 0;
  for (std::int64_t r = 2; r * r + r + 1 <= d; ++r)
    if (is_prime_power(r)) best = r;
  return best;
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kConjecture: return "conjecture";
    case Provenance::kNaiveUpper: return "naive-upper";
    case Provenance::kGeneric: return "generic";
    case Provenance::kConstruction: return "construction";
    case Provenance::kPencil: return "pencil";
  }
  return "?";
}

ConjectureData conjecture_data(std::int64_t d) {
  ConjectureData c;
  c.d = d;
  c.q = q_of(d);
  const std::int64_t q = c.q;
  const std::int64_t i = q * q + q + 1 - d;
  c.i = i;
  c.m1 = q + 1 - i;
  c.m2 = 2 * q + 1 - i;
  c.eps1 = (0 <= i && i <= q - 1) ? 1 : 0;
  c.eps2 = i > q + 1 ? 1 : 0;
  c.tq_minus = i > q + 1 ? q * i - q * q - q : 0;
  c.tq = i <= q + 1 ? q * i : 2 * q * q - (i - 2) * q - 1;
  c.tq_plus = i <= q + 1 ? q * q + q - i * q : 0;
  return c;
}

namespace {

// Multiplicities <= 1 are not singular points and are dropped.
Profile assemble(std::int64_t d, const std::vector<Profile::Entry>& counts) {
  std::vector<Profile::Entry> kept;
  for (const auto& [k, t] : counts)
    if (k >= 2 && t > 0) kept.emplace_back(k, t);
  return Profile::from_counts(static_cast<int>(d), kept);
}

}  // namespace

std::optional<ConjectureValue> conjectured_h(std::int64_t d) {
  const ConjectureData c = conjecture_data(d);
  const std::int64_t q = c.q;
  if (c.in_generic_range()) {
    const BigInt num = BigInt(q * q + q + 1 - c.i) - c.eps1 * c.m1 - c.eps2 * c.m2 - c.tq_minus * (q - 1) -
                       c.tq * q - c.tq_plus * (q + 1);
    const BigInt den = BigInt(c.eps1) + c.eps2 + c.tq_minus + c.tq + c.tq_plus;
    const Rational h(num, den);
    const Profile p = assemble(d, {{static_cast<int>(c.m1), c.eps1},
                                   {static_cast<int>(c.m2), c.eps2},
                                   {static_cast<int>(q - 1), c.tq_minus},
                                   {static_cast<int>(q), c.tq},
                                   {static_cast<int>(q + 1), c.tq_plus}});
    return ConjectureValue{h, {p, Provenance::kConjecture}, combinatorial_quotient(p) == h};
  }
  if (c.in_closing_case()) {
    const Rational h(-BigInt(q * q * q - q * q + 2 * q - 2), BigInt(q * q + q - 1));
    const Profile p = assemble(d, {{static_cast<int>(q + 1), 1},
                                   {static_cast<int>(q), 3 * (q - 1)},
                                   {static_cast<int>(q - 1), (q - 1) * (q - 1)}});
    return ConjectureValue{h, {p, Provenance::kConjecture}, combinatorial_quotient(p) == h};
  }
  return std::nullopt;
}

bool lower_bound_holds(const Rational& x, std::int64_t d) {
  // x >= (1 - sqrt(4d-3))/2  <=>  1 - 2x <= sqrt(4d-3)
  const Rational gap = Rational(1) - Rational(2) * x;
  if (gap.sign() <= 0) return true;
  return gap * gap <= Rational(4 * d - 3);
}

bool lower_bound_equality(const Rational& x, std::int64_t d) {
  const Rational gap = Rational(1) - Rational(2) * x;
  return gap.sign() > 0 && gap * gap == Rational(4 * d - 3);
}

double lower_bound_function(std::int64_t d, std::int64_t s) {
  const double dd = static_cast<double>(d);
  const double ss = static_cast<double>(s);
  return dd / ss - 0.5 - 0.5 * std::sqrt(1.0 + (4.0 * dd * dd - 4.0 * dd) / ss);
}

Rational naive_upper_bound_formula(std::int64_t d) {
  const BigInt r = r_of(d);
  const BigInt dd = d;
  const BigInt r2 = r * r;
  const BigInt r3 = r2 * r;
  const BigInt r4 = r3 * r;
  return Rational(-2 * (r4 + r3 - r - (dd - 1) * (dd - 1)), r4 + 2 * r3 - r - dd * dd + dd - 2);
}

BoundWitness naive_upper_bound(std::int64_t d) {
  const std::int64_t r = r_of(d);
  const std::int64_t d1 = r * r + r + 1;
  const std::int64_t d2 = d - d1;
  const Profile p = assemble(d, {{2, d2 * (d2 - 1) / 2 + d1 * d2}, {static_cast<int>(r + 1), d1}});
  const Rational value = naive_upper_bound_formula(d);
  if (combinatorial_quotient(p) != value) throw std::logic_error("naive upper bound: profile and closed form disagree");
  return {value, {p, Provenance::kNaiveUpper}};
}

BoundWitness generic_profile(std::int64_t d) {
  if (d < 2) throw std::domain_error("generic arrangement needs d >= 2");
  const Profile p = Profile::from_counts(static_cast<int>(d), {{2, binom2(d)}});
  return {combinatorial_quotient(p), {p, Provenance::kGeneric}};
}

BoundWitness pencil_profile(std::int64_t d) {
  const Profile p = Profile::from_counts(static_cast<int>(d), {{static_cast<int>(d), 1}});
  return {combinatorial_quotient(p), {p, Provenance::kPencil}};
}

BoundWitness best_known_upper(std::int64_t d) {
  std::vector<BoundWitness> candidates;
  if (auto c = conjectured_h(d); c && c->witness_consistent) candidates.push_back({c->h, c->witness});
  if (d >= 7) candidates.push_back(naive_upper_bound(d));
  candidates.push_back(generic_profile(d));
  candidates.push_back(pencil_profile(d));
  BoundWitness best = candidates.front();
  for (const auto& c : candidates)
    if (c.value < best.value) best = c;
  return best;
}

}  // namespace harbourne
