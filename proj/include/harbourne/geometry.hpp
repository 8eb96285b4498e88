#pragma once

#include "harbourne/feasibility.hpp"
#include "harbourne/profile.hpp"
#include "harbourne/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace harbourne {

/// GF(p^r). Elements are integers 0..q-1 whose base-p digits are the
/// polynomial coefficients, lowest degree first.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Throws std::invalid_argument unless p is prime and r >= 1.
  FiniteField(std::int64_t p, int r);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return r_; }
  std::int64_t order() const { return q_; }
  /// Monic modulus, coefficients lowest degree first (size r+1).
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const { return add_[index(a, b)]; }
  Element mul(Element a, Element b) const { return mul_[index(a, b)]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for zero.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  std::vector<std::int64_t> coefficients(Element a) const;
  Element from_coefficients(const std::vector<std::int64_t>& c) const;
  /// Decimal for prime fields, "(c0,c1,...)" otherwise.
  std::string format(Element a) const;

 private:
  std::size_t index(Element a, Element b) const { return static_cast<std::size_t>(a) * q_ + b; }

  std::int64_t p_;
  int r_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

/// True iff the monic polynomial (coefficients lowest degree first) is
/// irreducible over F_p, by trial division.
bool is_irreducible(const std::vector<std::int64_t>& poly, std::int64_t p);

/// Lexicographically least monic irreducible polynomial of degree r over
/// F_p, comparing coefficients from the constant term up.
std::vector<std::int64_t> least_irreducible(std::int64_t p, int r);

std::shared_ptr<const FiniteField> make_field(std::int64_t p, int r);
/// Field with q elements; q must be a prime power.
std::shared_ptr<const FiniteField> make_field(std::int64_t q);

/// Homogeneous triple normalized so the first nonzero coordinate is 1.
struct Triple {
  std::array<FiniteField::Element, 3> c{};
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct ProjectivePoint : Triple {};
struct ProjectiveLine : Triple {};

class ProjectivePlane {
 public:
  explicit ProjectivePlane(std::shared_ptr<const FiniteField> field);

  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  /// Both sorted lexicographically.
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const std::vector<ProjectiveLine>& lines() const { return lines_; }

  bool incident(const ProjectivePoint& p, const ProjectiveLine& l) const;
  ProjectiveLine join(const ProjectivePoint& a, const ProjectivePoint& b) const;
  ProjectivePoint meet(const ProjectiveLine& a, const ProjectiveLine& b) const;
  /// Lines through `p`, ascending.
  std::vector<ProjectiveLine> pencil(const ProjectivePoint& p) const;

 private:
  Triple cross(const Triple& a, const Triple& b) const;
  Triple normalize(Triple t) const;

  std::shared_ptr<const FiniteField> field_;
  std::vector<ProjectivePoint> points_;
  std::vector<ProjectiveLine> lines_;
};

/// Distinct lines of one plane, with their singular points.
class Arrangement {
 public:
  Arrangement(std::shared_ptr<const ProjectivePlane> plane, std::vector<ProjectiveLine> lines);

  const ProjectivePlane& plane() const { return *plane_; }
  const std::vector<ProjectiveLine>& lines() const { return lines_; }
  int num_lines() const { return static_cast<int>(lines_.size()); }
  /// Singular points and the number of lines through each.
  const std::map<ProjectivePoint, int>& singular_points() const { return singular_; }

  Profile profile() const;
  /// (d^2 - sum m^2) / s, straight from the multiplicities.
  Rational harbourne_constant() const;
  /// Type vector of every line, in line order.
  std::vector<LineType> line_types() const;
  /// Number of lines of each distinct type.
  std::map<std::vector<std::int64_t>, std::int64_t> type_census() const;

 private:
  std::shared_ptr<const ProjectivePlane> plane_;
  std::vector<ProjectiveLine> lines_;
  std::map<ProjectivePoint, int> singular_;
};

/// Profile of an arrangement, with the pair-count identity and the two
/// quotient forms asserted.
Profile arrangement_profile(const Arrangement& a);

/// All q^2+q+1 lines of PG(2,q).
Arrangement full_plane_arrangement(std::int64_t q);

/// PG(2,q) with i lines removed from one or two pencils, leaving
/// q^2+q+1-i lines. 0 <= i <= 2q-1.
Arrangement removal_construction(std::int64_t q, std::int64_t i);

/// One row per line: the three coordinates formatted by the field.
std::string format_lines(const Arrangement& a);

}  // namespace harbourne
