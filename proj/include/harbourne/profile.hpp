#pragma once

#include "harbourne/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace harbourne {

class ProfileError : public std::invalid_argument {
 public:
  enum class Kind { kBadArgument, kIdentityViolation, kEmptySingularSet };

  ProfileError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Point multiplicities m_1 >= m_2 >= ... >= m_s, each at least 2.
struct MultiplicityMultiset {
  std::vector<int> entries;

  std::int64_t size() const { return static_cast<std::int64_t>(entries.size()); }
};

/// Counts t_k of k-fold points for an arrangement of d lines.
///
/// Stored sparsely: only nonzero t_k, ascending in k. A Profile always
/// satisfies C(d,2) = sum_k t_k C(k,2) and has at least one singular point.
class Profile {
 public:
  using Entry = std::pair<int, std::int64_t>;  // (k, t_k)

  /// `dense[k]` is t_k; indices 0 and 1 must be zero, size at most d+1.
  static Profile from_dense(int d, std::span<const std::int64_t> dense);
  static Profile from_counts(int d, std::vector<Entry> counts);
  static Profile from_multiset(int d, const MultiplicityMultiset& m);
  /// Parses the canonical form "d=<d>; t<k>=<v>,...".
  static Profile parse(std::string_view text);

  int d() const { return d_; }
  std::int64_t count(int k) const;
  const std::vector<Entry>& entries() const { return entries_; }

  std::int64_t num_points() const { return s_; }
  /// sum_k k t_k, the total number of point-line incidences.
  std::int64_t incidences() const;
  int max_multiplicity() const { return entries_.back().first; }
  bool is_pencil() const { return entries_.size() == 1 && entries_[0].first == d_ && entries_[0].second == 1; }

  std::vector<std::int64_t> dense() const;
  MultiplicityMultiset to_multiset() const;
  std::string canonical() const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  Profile(int d, std::vector<Entry> entries);

  int d_ = 0;
  std::int64_t s_ = 0;
  std::vector<Entry> entries_;
};

inline std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

/// (d^2 - sum t_k k^2) / sum t_k.
Rational combinatorial_quotient(const Profile& p);

/// (d - sum t_k k) / s; agrees with combinatorial_quotient on every Profile.
Rational simplified_quotient(const Profile& p);

/// (d^2 - sum m^2) / s. When the induced profile satisfies the pair-count
/// identity the value is cross-checked against (d - sum m) / s.
Rational harbourne_of_multiset(int d, const MultiplicityMultiset& m);

}  // namespace harbourne
