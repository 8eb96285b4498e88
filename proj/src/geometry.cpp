#include "harbourne/geometry.hpp"

#include "harbourne/bounds.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace harbourne {

namespace {

using Poly = std::vector<std::int64_t>;  // lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t base = mod(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

// Remainder of a modulo a nonzero b.
Poly poly_mod(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  const std::int64_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = mod(a[shift + k] - factor * b[k], p);
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

}  // namespace

bool is_irreducible(const Poly& poly, std::int64_t p) {
  Poly f = poly;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  // Every monic divisor of degree 1..deg/2.
  for (int k = 1; 2 * k <= deg; ++k) {
    std::int64_t count = 1;
    for (int j = 0; j < k; ++j) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Poly g(static_cast<std::size_t>(k) + 1, 0);
      std::int64_t rest = idx;
      for (int j = 0; j < k; ++j) {
        g[static_cast<std::size_t>(j)] = rest % p;
        rest /= p;
      }
      g[static_cast<std::size_t>(k)] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(std::int64_t p, int r) {
  if (r == 1) return {0, 1};
  std::int64_t count = 1;
  for (int j = 0; j < r; ++j) count *= p;
  // idx's most significant base-p digit is the constant term.
  for (std::int64_t idx = 0; idx < count; ++idx) {
    Poly f(static_cast<std::size_t>(r) + 1, 0);
    std::int64_t rest = idx;
    for (int j = r - 1; j >= 0; --j) {
      f[static_cast<std::size_t>(j)] = rest % p;
      rest /= p;
    }
    f[static_cast<std::size_t>(r)] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteField::FiniteField(std::int64_t p, int r) : p_(p), r_(r), q_(1) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (r < 1) throw std::invalid_argument("field extension degree must be >= 1");
  for (int k = 0; k < r; ++k) q_ *= p;
  if (q_ > 4096) throw std::invalid_argument("field too large for table arithmetic");
  modulus_ = least_irreducible(p, r);

  const auto n = static_cast<std::size_t>(q_);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  std::vector<Poly> polys(n);
  for (std::size_t a = 0; a < n; ++a) {
    polys[a] = coefficients(static_cast<Element>(a));
    trim(polys[a]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Poly ca = coefficients(static_cast<Element>(a));
    Poly na(ca.size());
    for (std::size_t k = 0; k < ca.size(); ++k) na[k] = mod(-ca[k], p);
    neg_[a] = from_coefficients(na);
    for (std::size_t b = 0; b < n; ++b) {
      const Poly cb = coefficients(static_cast<Element>(b));
      Poly sum(ca.size());
      for (std::size_t k = 0; k < ca.size(); ++k) sum[k] = (ca[k] + cb[k]) % p;
      add_[a * n + b] = from_coefficients(sum);
      Poly prod = r == 1 ? Poly{static_cast<std::int64_t>(a * b) % p}
                         : poly_mod(poly_mul(polys[a], polys[b], p), modulus_, p);
      mul_[a * n + b] = from_coefficients(prod);
      if (mul_[a * n + b] == 1) inv_[a] = static_cast<Element>(b);
    }
  }
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  Element base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::vector<std::int64_t> FiniteField::coefficients(Element a) const {
  std::vector<std::int64_t> c(static_cast<std::size_t>(r_), 0);
  std::int64_t rest = a;
  for (int k = 0; k < r_; ++k) {
    c[static_cast<std::size_t>(k)] = rest % p_;
    rest /= p_;
  }
  return c;
}

FiniteField::Element FiniteField::from_coefficients(const std::vector<std::int64_t>& c) const {
  std::int64_t value = 0;
  std::int64_t scale = 1;
  for (int k = 0; k < r_; ++k) {
    if (static_cast<std::size_t>(k) < c.size()) value += mod(c[static_cast<std::size_t>(k)], p_) * scale;
    scale *= p_;
  }
  return static_cast<Element>(value);
}

std::string FiniteField::format(Element a) const {
  if (r_ == 1) return std::to_string(a);
  std::string out = "(";
  const auto c = coefficients(a);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(c[k]);
  }
  return out + ")";
}

std::shared_ptr<const FiniteField> make_field(std::int64_t p, int r) { return std::make_shared<const FiniteField>(p, r); }

std::shared_ptr<const FiniteField> make_field(std::int64_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make_field(pp->p, pp->r);
}

ProjectivePlane::ProjectivePlane(std::shared_ptr<const FiniteField> field) : field_(std::move(field)) {
  const auto q = static_cast<FiniteField::Element>(field_->order());
  std::vector<Triple> triples;
  triples.push_back({{0, 0, 1}});
  for (FiniteField::Element b = 0; b < q; ++b) triples.push_back({{0, 1, b}});
  for (FiniteField::Element a = 0; a < q; ++a)
    for (FiniteField::Element b = 0; b < q; ++b) triples.push_back({{1, a, b}});
  for (const auto& t : triples) {
    points_.push_back(ProjectivePoint{t});
    lines_.push_back(ProjectiveLine{t});
  }
}

bool ProjectivePlane::incident(const ProjectivePoint& p, const ProjectiveLine& l) const {
  const auto& f = *field_;
  const auto dot = f.add(f.add(f.mul(p.c[0], l.c[0]), f.mul(p.c[1], l.c[1])), f.mul(p.c[2], l.c[2]));
  return dot == 0;
}

Triple ProjectivePlane::normalize(Triple t) const {
  for (auto x : t.c) {
    if (x == 0) continue;
    const auto s = field_->inv(x);
    for (auto& y : t.c) y = field_->mul(y, s);
    return t;
  }
  throw std::invalid_argument("zero triple has no projective meaning");
}

Triple ProjectivePlane::cross(const Triple& a, const Triple& b) const {
  const auto& f = *field_;
  return normalize(Triple{{f.sub(f.mul(a.c[1], b.c[2]), f.mul(a.c[2], b.c[1])),
                           f.sub(f.mul(a.c[2], b.c[0]), f.mul(a.c[0], b.c[2])),
                           f.sub(f.mul(a.c[0], b.c[1]), f.mul(a.c[1], b.c[0]))}});
}

ProjectiveLine ProjectivePlane::join(const ProjectivePoint& a, const ProjectivePoint& b) const {
  if (a == b) throw std::invalid_argument("join of a point with itself");
  return ProjectiveLine{cross(a, b)};
}

ProjectivePoint ProjectivePlane::meet(const ProjectiveLine& a, const ProjectiveLine& b) const {
  if (a == b) throw std::invalid_argument("meet of a line with itself");
  return ProjectivePoint{cross(a, b)};
}

std::vector<ProjectiveLine> ProjectivePlane::pencil(const ProjectivePoint& p) const {
  std::vector<ProjectiveLine> out;
  for (const auto& l : lines_)
    if (incident(p, l)) out.push_back(l);
  return out;
}

Arrangement::Arrangement(std::shared_ptr<const ProjectivePlane> plane, std::vector<ProjectiveLine> lines)
    : plane_(std::move(plane)), lines_(std::move(lines)) {
  std::sort(lines_.begin(), lines_.end());
  if (std::adjacent_find(lines_.begin(), lines_.end()) != lines_.end())
    throw std::invalid_argument("arrangement lines must be distinct");
  if (lines_.size() < 2) throw std::invalid_argument("arrangement needs at least two lines");
  std::set<ProjectivePoint> candidates;
  for (std::size_t a = 0; a < lines_.size(); ++a)
    for (std::size_t b = a + 1; b < lines_.size(); ++b) candidates.insert(plane_->meet(lines_[a], lines_[b]));
  for (const auto& p : candidates) {
    int m = 0;
    for (const auto& l : lines_) m += plane_->incident(p, l) ? 1 : 0;
    singular_.emplace(p, m);
  }
}

Profile Arrangement::profile() const {
  std::vector<Profile::Entry> counts;
  for (const auto& [p, m] : singular_) counts.emplace_back(m, 1);
  return Profile::from_counts(num_lines(), std::move(counts));
}

Rational Arrangement::harbourne_constant() const {
  MultiplicityMultiset m;
  for (const auto& [p, k] : singular_) m.entries.push_back(k);
  std::sort(m.entries.rbegin(), m.entries.rend());
  return harbourne_of_multiset(num_lines(), m);
}

std::vector<LineType> Arrangement::line_types() const {
  std::vector<LineType> out;
  out.reserve(lines_.size());
  for (const auto& l : lines_) {
    LineType t{std::vector<std::int64_t>(static_cast<std::size_t>(num_lines()) + 1, 0)};
    for (const auto& [p, m] : singular_)
      if (plane_->incident(p, l)) ++t.nu[static_cast<std::size_t>(m)];
    out.push_back(std::move(t));
  }
  return out;
}

std::map<std::vector<std::int64_t>, std::int64_t> Arrangement::type_census() const {
  std::map<std::vector<std::int64_t>, std::int64_t> census;
  for (auto& t : line_types()) ++census[t.nu];
  return census;
}

Profile arrangement_profile(const Arrangement& a) {
  // Profile construction enforces the pair-count identity.
  const Profile p = a.profile();
  if (a.harbourne_constant() != simplified_quotient(p) || combinatorial_quotient(p) != simplified_quotient(p))
    throw std::logic_error("arrangement quotient forms disagree");
  return p;
}

Arrangement full_plane_arrangement(std::int64_t q) {
  auto plane = std::make_shared<const ProjectivePlane>(make_field(q));
  return Arrangement(plane, plane->lines());
}

Arrangement removal_construction(std::int64_t q, std::int64_t i) {
  if (i < 0 || i > 2 * q - 1)
    throw std::invalid_argument("removal count i=" + std::to_string(i) + " outside 0.." + std::to_string(2 * q - 1));
  auto plane = std::make_shared<const ProjectivePlane>(make_field(q));
  const ProjectivePoint p1 = plane->points()[0];
  const ProjectivePoint p2 = plane->points()[1];
  const ProjectiveLine joint = plane->join(p1, p2);
  std::set<ProjectiveLine> removed;

  auto remove_from_pencil = [&](const ProjectivePoint& p, std::int64_t how_many) {
    for (const auto& l : plane->pencil(p)) {
      if (how_many == 0) break;
      if (removed.insert(l).second) --how_many;
    }
    if (how_many != 0) throw std::logic_error("pencil exhausted");
  };

  if (i <= q + 1) {
    remove_from_pencil(p1, i);
  } else if (i <= 2 * q - 2) {
    remove_from_pencil(p1, q + 1);
    remove_from_pencil(p2, i - (q + 1));
  } else {
    removed.insert(joint);
    remove_from_pencil(p1, q - 1);
    remove_from_pencil(p2, q - 1);
  }
  std::vector<ProjectiveLine> kept;
  for (const auto& l : plane->lines())
    if (!removed.count(l)) kept.push_back(l);
  return Arrangement(plane, std::move(kept));
}

std::string format_lines(const Arrangement& a) {
  std::ostringstream os;
  const auto& f = a.plane().field();
  for (const auto& l : a.lines()) os << f.format(l.c[0]) << " " << f.format(l.c[1]) << " " << f.format(l.c[2]) << "\n";
  return os.str();
}

}  // namespace harbourne
