#pragma once

#include "harbourne/profile.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace harbourne {

enum class Reason {
  kNone,
  kFewPoints,
  kTwoPencilCoarse,
  kTwoPencilRefined,
  kBudgetExhausted,
  kFeasibility,
  kSurvivor,
};

/// Fixed report tokens: "few-points", "two-pencil-coarse", ...
std::string_view to_token(Reason r);
std::optional<Reason> reason_from_token(std::string_view token);

struct ExclusionOutcome {
  bool excluded = false;
  Reason reason = Reason::kNone;
  /// The numbers substituted into the deciding inequality.
  std::string detail;
  /// Set when the refined inequality alone (the appendix script's test)
  /// would have excluded, but the profile can still have P1, P2 off a
  /// common line.
  bool script_divergence = false;

  static ExclusionOutcome keep(std::string detail = {}) { return {false, Reason::kNone, std::move(detail), false}; }
  static ExclusionOutcome drop(Reason r, std::string detail) { return {true, r, std::move(detail), false}; }
};

/// de Bruijn-Erdos: any non-pencil arrangement has s >= d.
ExclusionOutcome few_points(const Profile& p);

/// Lower bound on the number of singular points on the line through the two
/// points of largest multiplicity, assuming that line is in the arrangement.
/// nullopt when the remaining points cannot absorb all d - m1 - m2 + 1 lines.
std::optional<std::int64_t> greedy_common_line_points(const Profile& p);
/// Same count on a bare multiset (descending, at least two entries); no
/// pair-count identity is required.
std::optional<std::int64_t> greedy_common_line_points(int d, const MultiplicityMultiset& m);

/// Two pencils criterion. Excludes only when both alternatives fail:
/// m1 m2 + 2 > s and (m1 - 1)(m2 - 1) + a > s.
ExclusionOutcome two_pencil(const Profile& p);

}  // namespace harbourne
