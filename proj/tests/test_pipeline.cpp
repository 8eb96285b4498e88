#include "doctest.h"
#include "oracles.hpp"

#include "harbourne/pipeline.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <set>

using namespace harbourne;

namespace {

// Pruning rules stated directly on a t-vector.
bool pair_rule(int d, const std::vector<std::int64_t>& t) {
  for (int a = 2; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      if (t[a] > 0 && t[b] > 0 && a + b > d + 1) return false;
  return true;
}

bool equal_rule(int d, const std::vector<std::int64_t>& t) {
  for (int a = 2; a <= d; ++a)
    if (t[a] >= 2 && 2 * a - 1 > d) return false;
  return true;
}

std::vector<std::int64_t> reversed_tail(const std::vector<std::int64_t>& t) {
  // (t_{d-1}, ..., t_3)
  return std::vector<std::int64_t>(t.rbegin() + 1, t.rend() - 3);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("harbourne-test-" + name)).string();
}

bool same_records(const Verdict& a, const Verdict& b) {
  if (a.records.size() != b.records.size()) return false;
  for (std::size_t i = 0; i < a.records.size(); ++i)
    if (a.records[i].to_line() != b.records[i].to_line()) return false;
  return a.counters == b.counters && a.complete == b.complete;
}

}  // namespace

TEST_CASE("work units") {
  const auto units = work_units(5);
  REQUIRE(!units.empty());
  CHECK(units.front() == WorkUnit{2, 10});
  CHECK(std::find(units.begin(), units.end(), WorkUnit{3, 1}) != units.end());
  CHECK(std::find(units.begin(), units.end(), WorkUnit{4, 1}) != units.end());
  CHECK(std::find(units.begin(), units.end(), WorkUnit{4, 2}) == units.end());
  CHECK_THROWS(work_units(2));
}

TEST_CASE("enumeration examples") {
  const auto three = enumerate_profiles(3);
  REQUIRE(three.size() == 1);
  CHECK(three[0] == Profile::from_counts(3, {{2, 3}}));

  const auto ten = enumerate_profiles(10);
  CHECK(std::find(ten.begin(), ten.end(), Profile::from_counts(10, {{3, 7}, {4, 4}})) != ten.end());
  const auto six = enumerate_profiles(6);
  CHECK(std::find(six.begin(), six.end(), Profile::from_counts(6, {{2, 5}, {5, 1}})) != six.end());
}

TEST_CASE("enumeration equals the filtered brute-force set") {
  for (int d = 3; d <= 13; ++d) {
    for (bool extra : {true, false}) {
      EnumerationOptions opts;
      opts.extra_pruning = extra;
      std::vector<std::vector<std::int64_t>> got;
      for (const auto& p : enumerate_profiles(d, opts)) got.push_back(p.dense());
      std::vector<std::vector<std::int64_t>> expect;
      for (const auto& t : oracle::all_profiles(d))
        if (pair_rule(d, t) && (!extra || equal_rule(d, t))) expect.push_back(t);
      // stream order: lexicographic in (t_{d-1}, ..., t_3)
      std::sort(expect.begin(), expect.end(),
                [](const auto& a, const auto& b) { return reversed_tail(a) < reversed_tail(b); });
      CHECK_MESSAGE(got == expect, "d=" << d << " extra=" << extra);
    }
  }
}

TEST_CASE("bound pruning keeps every profile below the bound") {
  for (int d = 4; d <= 16; ++d) {
    for (const auto& h : {Rational(-1), Rational(-2), Rational(-29, 12), Rational(-3), Rational(-1, 3)}) {
      EnumerationOptions pruned;
      pruned.quotient_below = h;
      std::vector<Profile> expect;
      for (const auto& p : enumerate_profiles(d))
        if (combinatorial_quotient(p) < h) expect.push_back(p);
      std::vector<Profile> got;
      for (const auto& p : enumerate_profiles(d, pruned))
        if (combinatorial_quotient(p) < h) got.push_back(p);
      CHECK_MESSAGE(got == expect, "d=" << d << " h=" << h);
    }
  }
}

TEST_CASE("resuming a unit continues strictly after the cursor") {
  const int d = 12;
  for (const auto& unit : work_units(d)) {
    std::vector<TVector> all;
    enumerate_unit(d, unit, {}, nullptr, [&](const TVector& t) {
      all.push_back(t);
      return true;
    });
    for (std::size_t cut = 0; cut < all.size(); cut += 3) {
      std::vector<TVector> rest;
      enumerate_unit(d, unit, {}, &all[cut], [&](const TVector& t) {
        rest.push_back(t);
        return true;
      });
      CHECK(rest == std::vector<TVector>(all.begin() + static_cast<std::ptrdiff_t>(cut) + 1, all.end()));
    }
  }
}

TEST_CASE("exclude examples") {
  const auto a = exclude(Profile::from_counts(10, {{3, 7}, {4, 4}}));
  CHECK(a.reason == Reason::kTwoPencilRefined);
  CHECK(a.quotient == Rational(-27, 11));
  const auto b = exclude(Profile::from_counts(14, {{3, 7}, {4, 10}, {5, 1}}));
  CHECK(b.reason == Reason::kFeasibility);
  const auto c = exclude(Profile::from_counts(13, {{4, 13}}));
  CHECK(c.reason == Reason::kSurvivor);
  CHECK_FALSE(c.excluded());
  CHECK(exclude(Profile::from_counts(6, {{3, 5}})).reason == Reason::kFewPoints);
}

TEST_CASE("records and counters round trip") {
  for (const auto& p : {Profile::from_counts(10, {{3, 7}, {4, 4}}), Profile::from_counts(13, {{4, 13}}),
                        Profile::from_counts(14, {{3, 7}, {4, 10}, {5, 1}})}) {
    const auto r = exclude(p);
    const auto back = ExclusionRecord::from_line(r.to_line());
    CHECK(back.to_line() == r.to_line());
    CHECK(back.profile == r.profile);
    CHECK(back.reason == r.reason);
    CHECK(back.quotient == r.quotient);
  }
  Counters c;
  c.seen = 10;
  c.tested = 7;
  c.few_points = 3;
  c.feasibility = 4;
  CHECK(Counters::parse(c.to_string()) == c);
  CHECK_THROWS(Counters::parse("seen=1 bogus=2"));
  CHECK_THROWS(ExclusionRecord::from_line("garbage"));
}

TEST_CASE("check examples") {
  const auto v10 = check(10, Rational(-29, 12));
  CHECK(v10.all_excluded());
  CHECK(v10.complete);
  const std::string rep = v10.report();
  CHECK(rep.rfind("All configurations have been excluded.\n") == rep.size() - 39);
  CHECK(rep.find("summary\t") != std::string::npos);
  CHECK(check(7, Rational(-2)).all_excluded());
  CHECK(check(13, Rational(-3)).all_excluded());

  // Just above H(10) the realizable profile t3=9,t4=3 is tested and survives.
  const auto above = check(10, Rational(-2));
  CHECK_FALSE(above.all_excluded());
  const auto surv = above.survivors();
  CHECK(std::find_if(surv.begin(), surv.end(), [](const ExclusionRecord& r) {
          return r.profile == Profile::from_counts(10, {{3, 9}, {4, 3}});
        }) != surv.end());
  CHECK(above.report().find("could not be excluded") != std::string::npos);

  // Bounds above 0 include the pencil.
  const auto pos = check(5, Rational(1, 2));
  CHECK_FALSE(pos.all_excluded());
  CHECK(pos.records.back().profile.is_pencil());
}

TEST_CASE("every tested profile is below the bound and tested ones match the stream") {
  for (int d = 6; d <= 14; ++d) {
    const Rational h = oracle::table(d);
    CheckOptions unpruned;
    unpruned.bound_pruning = false;
    const auto a = check(d, h);
    const auto b = check(d, h, unpruned);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].to_line() == b.records[i].to_line());
      CHECK(a.records[i].quotient < h);
    }
    std::size_t below = 0;
    for (const auto& p : enumerate_profiles(d)) below += combinatorial_quotient(p) < h;
    CHECK(a.counters.tested == below);
    CHECK(b.counters.seen == enumerate_profiles(d).size());
  }
}

TEST_CASE("survivor-only runs keep the same counts") {
  CheckOptions lean;
  lean.keep_excluded = false;
  const auto full = check(12, Rational(-5, 2));
  const auto thin = check(12, Rational(-5, 2), lean);
  CHECK(full.counters == thin.counters);
  CHECK(thin.records.size() == full.survivors().size());
}

TEST_CASE("results do not depend on the worker count") {
  for (int d : {11, 14, 16}) {
    const Rational h = oracle::table(d) + Rational(1, 10);
    const auto one = check(d, h);
    for (int jobs : {2, 3, 5}) {
      CheckOptions o;
      o.jobs = jobs;
      CHECK(same_records(one, check(d, h, o)));
    }
  }
}

TEST_CASE("interrupted runs resume to the same result") {
  const int d = 16;
  const Rational h = Rational(-16, 5) + Rational(1, 7);
  CheckOptions plain;
  plain.bound_pruning = false;
  const auto whole = check(d, h, plain);
  const std::string path = temp_path("resume.ckpt");
  for (std::uint64_t stop : {1ULL, 50ULL, 997ULL, 4100ULL, 9000ULL}) {
    for (int jobs : {1, 3}) {
      CheckOptions first = plain;
      first.jobs = jobs;
      first.checkpoint_path = path;
      first.stop_after = stop;
      const auto partial = check(d, h, first);
      CHECK_FALSE(partial.complete);
      CHECK_FALSE(partial.all_excluded());
      CHECK(partial.report().find("interrupted") != std::string::npos);

      // Round trip through the text form before resuming.
      const auto ck = Checkpoint::load(path);
      CHECK(Checkpoint::deserialize(ck.serialize()).serialize() == ck.serialize());

      CheckOptions second = plain;
      second.jobs = jobs;
      second.resume_path = path;
      second.checkpoint_path = path;
      CHECK(same_records(whole, check(d, h, second)));
    }
  }
  // Two interruptions in a row.
  {
    CheckOptions a = plain;
    a.checkpoint_path = path;
    a.stop_after = 300;
    check(d, h, a);
    CheckOptions b = plain;
    b.checkpoint_path = path;
    b.resume_path = path;
    b.stop_after = 2000;
    CHECK_FALSE(check(d, h, b).complete);
    CheckOptions c = plain;
    c.resume_path = path;
    CHECK(same_records(whole, check(d, h, c)));
  }
  std::remove(path.c_str());
}

TEST_CASE("checkpoints refuse a different configuration") {
  const std::string path = temp_path("mismatch.ckpt");
  CheckOptions first;
  first.checkpoint_path = path;
  first.stop_after = 10;
  check(12, Rational(-5, 2), first);
  CheckOptions other;
  other.resume_path = path;
  CHECK_THROWS(check(12, Rational(-2), other));
  CHECK_THROWS(check(13, Rational(-5, 2), other));
  other.enumeration.extra_pruning = false;
  CHECK_THROWS(check(12, Rational(-5, 2), other));
  CHECK_THROWS(Checkpoint::deserialize("not a checkpoint"));
  std::remove(path.c_str());
}

TEST_CASE("external interrupt flag") {
  std::atomic<bool> flag{true};
  CheckOptions o;
  o.interrupt = &flag;
  o.bound_pruning = false;
  const auto v = check(20, Rational(-3), o);
  // The flag is polled; an early stop is reported as incomplete while a
  // run that finished first is complete.
  if (!v.complete) CHECK_FALSE(v.all_excluded());
}

TEST_CASE("monotonicity in the bound") {
  for (int d = 6; d <= 14; ++d) {
    const Rational lo = oracle::table(d);
    const Rational hi = lo + Rational(1, 3);
    const auto a = check(d, lo);
    const auto b = check(d, hi);
    std::set<std::string> tested_hi;
    for (const auto& r : b.records) tested_hi.insert(r.profile.canonical());
    for (const auto& r : a.records) CHECK(tested_hi.count(r.profile.canonical()) == 1);
    if (b.all_excluded()) CHECK(a.all_excluded());
  }
}

TEST_CASE("H(d) for small d") {
  for (int d = 2; d <= 16; ++d) {
    const auto r = compute_H(d);
    CHECK_MESSAGE(r.upper.value == oracle::table(d), "d=" << d);
    CHECK_MESSAGE(r.certified(), "d=" << d);
    if (d == 2 || d >= 7) CHECK(r.construction_verified);
  }
}

TEST_CASE("fake plane boundary") {
  CHECK(fake_plane_order(31) == std::nullopt);
  CHECK(fake_plane_order(32) == 6);
  CHECK(fake_plane_order(43) == 6);
  CHECK(fake_plane_order(44) == std::nullopt);

  const auto fake = Profile::from_counts(43, {{7, 43}});
  CHECK(combinatorial_quotient(fake) == Rational(-6));
  const auto r = exclude(fake);
  CHECK(r.reason == Reason::kSurvivor);
  CHECK(r.detail.find("fake plane of order 6") != std::string::npos);

  // Its work unit contributes nothing below -6.
  CheckOptions unit;
  unit.only_units = {WorkUnit{7, 43}};
  const auto v = check(43, Rational(-6), unit);
  CHECK(v.counters.tested == 0);
  CHECK(v.all_excluded());
  unit.bound_pruning = false;
  const auto seen = check(43, Rational(-6), unit);
  CHECK(seen.counters.seen >= 1);
  CHECK(seen.counters.tested == 0);
}
