#include "harbourne/criteria.hpp"

#include <array>
#include <utility>

namespace harbourne {

namespace {

constexpr std::array<std::pair<Reason, std::string_view>, 7> kTokens{{
    {Reason::kNone, "none"},
    {Reason::kFewPoints, "few-points"},
    {Reason::kTwoPencilCoarse, "two-pencil-coarse"},
    {Reason::kTwoPencilRefined, "two-pencil-refined"},
    {Reason::kBudgetExhausted, "budget-exhausted"},
    {Reason::kFeasibility, "feasibility"},
    {Reason::kSurvivor, "survivor"},
}};

struct TopTwo {
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
};

TopTwo top_two(const Profile& p) {
  const auto& e = p.entries();
  TopTwo out;
  out.m1 = e.back().first;
  if (e.back().second >= 2) {
    out.m2 = out.m1;
  } else {
    out.m2 = e[e.size() - 2].first;
  }
  return out;
}

}  // namespace

std::string_view to_token(Reason r) {
  for (const auto& [reason, token] : kTokens)
    if (reason == r) return token;
  return "none";
}

std::optional<Reason> reason_from_token(std::string_view token) {
  for (const auto& [reason, t] : kTokens)
    if (t == token) return reason;
  return std::nullopt;
}

ExclusionOutcome few_points(const Profile& p) {
  const std::int64_t s = p.num_points();
  if (!p.is_pencil() && s < p.d())
    return ExclusionOutcome::drop(Reason::kFewPoints, "s=" + std::to_string(s) + " < d=" + std::to_string(p.d()));
  return ExclusionOutcome::keep();
}

std::optional<std::int64_t> greedy_common_line_points(int d, const MultiplicityMultiset& m) {
  const auto& e = m.entries;
  if (e.size() < 2) return std::nullopt;
  std::int64_t uncovered = static_cast<std::int64_t>(d) - e[0] - e[1] + 1;
  std::int64_t count = 0;
  // Entries are descending; each k-fold point absorbs k - 1 lines.
  for (std::size_t j = 2; j < e.size() && uncovered > 0; ++j) {
    uncovered -= e[j] - 1;
    ++count;
  }
  if (uncovered > 0) return std::nullopt;
  return 2 + count;
}

std::optional<std::int64_t> greedy_common_line_points(const Profile& p) {
  const auto [m1, m2] = top_two(p);
  std::vector<Profile::Entry> remaining = p.entries();
  // Remove P1 and P2 from the working multiset.
  for (int n = 0; n < 2; ++n) {
    if (--remaining.back().second == 0) remaining.pop_back();
  }
  std::int64_t uncovered = p.d() - m1 - m2 + 1;
  std::int64_t count = 0;
  while (uncovered > 0) {
    if (remaining.empty()) return std::nullopt;
    auto& [k, t] = remaining.back();
    // Points of multiplicity k absorb k - 1 lines each; take as many as needed.
    const std::int64_t needed = (uncovered + k - 2) / (k - 1);
    const std::int64_t used = needed < t ? needed : t;
    uncovered -= used * (k - 1);
    count += used;
    t -= used;
    if (t == 0) remaining.pop_back();
  }
  return 2 + count;
}

ExclusionOutcome two_pencil(const Profile& p) {
  const std::int64_t s = p.num_points();
  if (s < 2) return ExclusionOutcome::keep();
  const auto [m1, m2] = top_two(p);
  const std::int64_t inner = (m1 - 1) * (m2 - 1);
  const std::int64_t apart = m1 * m2 + 2;
  const std::string head = "m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) + " s=" + std::to_string(s);
  if (inner + 2 > s)
    return ExclusionOutcome::drop(Reason::kTwoPencilCoarse,
                                  head + ": " + std::to_string(inner) + "+2 > " + std::to_string(s));
  const bool apart_fails = apart > s;
  const auto a = greedy_common_line_points(p);
  const std::string apart_text = std::to_string(m1) + "*" + std::to_string(m2) + "+2 " + (apart_fails ? ">" : "<=") +
                                 " " + std::to_string(s);
  if (!a) {
    if (apart_fails)
      return ExclusionOutcome::drop(Reason::kBudgetExhausted,
                                    head + ": " + apart_text + " and no points left for the common line");
    ExclusionOutcome out = ExclusionOutcome::keep(head + ": " + apart_text + "; common line impossible");
    out.script_divergence = true;
    return out;
  }
  const bool common_fails = inner + *a > s;
  const std::string common_text = std::to_string(inner) + "+" + std::to_string(*a) + " " + (common_fails ? ">" : "<=") +
                                  " " + std::to_string(s);
  const std::string detail = head + " a=" + std::to_string(*a) + ": " + apart_text + " and " + common_text;
  if (apart_fails && common_fails) return ExclusionOutcome::drop(Reason::kTwoPencilRefined, detail);
  ExclusionOutcome out = ExclusionOutcome::keep(detail);
  out.script_divergence = common_fails;
  return out;
}

}  // namespace harbourne
