#pragma once

#include "harbourne/bounds.hpp"
#include "harbourne/criteria.hpp"
#include "harbourne/profile.hpp"
#include "harbourne/rational.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace harbourne {

struct EnumerationOptions {
  /// t_a >= 2 requires 2a - 1 <= d (two a-fold points need 2a - 1 lines).
  bool extra_pruning = true;
  /// When set, subtrees that provably contain no profile with quotient
  /// below this bound are skipped.
  std::optional<Rational> quotient_below;
};

/// One slice of the profile stream: all profiles whose highest multiplicity
/// above 2 is `top` with t_top = `value`. top == 2 is the single profile of
/// d general lines. Units are listed in stream order.
struct WorkUnit {
  int top = 2;
  std::int64_t value = 0;
  friend bool operator==(const WorkUnit&, const WorkUnit&) = default;
};

std::vector<WorkUnit> work_units(int d, const EnumerationOptions& options = {});

/// Dense t-vector (index k = 0..d) handed to enumeration callbacks.
using TVector = std::vector<std::int64_t>;

/// Visits the profiles of `unit` in stream order, starting strictly after
/// `after` when given. The callback returns false to stop. Returns false if
/// stopped early.
bool enumerate_unit(int d, const WorkUnit& unit, const EnumerationOptions& options, const TVector* after,
                    const std::function<bool(const TVector&)>& visit);

/// Every non-pencil profile of d lines admitted by the pruning rules, in
/// stream order (odometer over t_3..t_{d-1}, t_3 fastest).
std::vector<Profile> enumerate_profiles(int d, const EnumerationOptions& options = {});

struct ExcludeOptions {
  std::uint64_t node_budget = 0;  // 0 = unlimited
};

struct ExclusionRecord {
  Profile profile;
  Rational quotient;
  Reason reason = Reason::kSurvivor;
  std::string detail;
  bool script_divergence = false;

  bool excluded() const { return reason != Reason::kSurvivor; }
  /// profile, quotient as n/d, reason token, detail; tab separated.
  std::string to_line() const;
  static ExclusionRecord from_line(const std::string& line);
};

/// Criteria chain: few points, two pencils, line-type incidence system.
ExclusionRecord exclude(const Profile& p, const ExcludeOptions& options = {});

struct Counters {
  std::uint64_t seen = 0;
  std::uint64_t tested = 0;
  std::uint64_t few_points = 0;
  std::uint64_t two_pencil_coarse = 0;
  std::uint64_t two_pencil_refined = 0;
  std::uint64_t budget_exhausted = 0;
  std::uint64_t feasibility = 0;
  std::uint64_t survivors = 0;
  std::uint64_t script_divergence = 0;

  void add(const ExclusionRecord& r);
  Counters& operator+=(const Counters& o);
  friend bool operator==(const Counters&, const Counters&) = default;
  std::string to_string() const;
  static Counters parse(const std::string& text);
};

struct Verdict {
  int d = 0;
  Rational bound;
  /// Every tested profile, in stream order (survivors only when excluded
  /// records were dropped).
  std::vector<ExclusionRecord> records;
  Counters counters;
  /// False when the run was interrupted; the checkpoint holds the rest.
  bool complete = true;

  bool all_excluded() const { return complete && counters.survivors == 0; }
  std::vector<ExclusionRecord> survivors() const;
  /// Report file contents: records, summary, verdict line.
  std::string report() const;
};

/// Progress of one work unit inside a checkpoint.
struct UnitProgress {
  enum class Status { kPending, kPartial, kDone };

  WorkUnit unit;
  Status status = Status::kPending;
  /// Last fully processed profile (kPartial only).
  TVector cursor;
  Counters counters;
  std::vector<ExclusionRecord> records;
};

/// Versioned text snapshot of a check run; restoring it yields exactly the
/// remaining profile stream.
struct Checkpoint {
  static constexpr int kVersion = 1;

  int d = 0;
  Rational bound;
  bool extra_pruning = true;
  bool bound_pruning = true;
  bool keep_excluded = true;
  std::vector<UnitProgress> units;

  std::string serialize() const;
  static Checkpoint deserialize(const std::string& text);
  /// Writes through a temporary file and rename.
  void save(const std::string& path) const;
  static Checkpoint load(const std::string& path);
};

struct CheckOptions {
  EnumerationOptions enumeration;
  /// Skip subtrees with no profile below the tested bound.
  bool bound_pruning = true;
  ExcludeOptions exclude;
  int jobs = 1;
  /// Restrict to these units (reduced-scope runs); empty = all units.
  std::vector<WorkUnit> only_units;
  std::string checkpoint_path;
  std::uint64_t checkpoint_every = 1'000'000;
  /// Resume from this checkpoint file.
  std::string resume_path;
  /// When false only survivor records are kept (counters stay complete);
  /// bounds memory on very large runs.
  bool keep_excluded = true;
  /// Simulated interruption after this many visited profiles (0 = never).
  std::uint64_t stop_after = 0;
  const std::atomic<bool>* interrupt = nullptr;
};

/// Tests every profile with quotient strictly below `bound`. all_excluded()
/// certifies H(d) >= bound.
Verdict check(int d, const Rational& bound, const CheckOptions& options = {});

struct HResult {
  int d = 0;
  BoundWitness upper;
  /// Whether an explicit PG(2,q) construction realizes the witness profile.
  bool construction_verified = false;
  Verdict verdict;

  bool certified() const { return verdict.all_excluded(); }
};

HResult compute_H(int d, const CheckOptions& options = {});

/// Smallest order n < q(d) that is not a prime power yet has
/// d <= n^2 + n + 1; profiles descended from such a plane cannot be
/// excluded here. Gives 6 for 32 <= d <= 43.
std::optional<std::int64_t> fake_plane_order(int d);

}  // namespace harbourne
