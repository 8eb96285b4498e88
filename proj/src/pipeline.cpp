#include "harbourne/pipeline.hpp"

#include "harbourne/feasibility.hpp"
#include "harbourne/geometry.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace harbourne {

namespace {

using Wide = __int128;

std::int64_t to_int64(const BigInt& v, const char* what) {
  if (v > BigInt(std::numeric_limits<std::int64_t>::max()) || v < BigInt(std::numeric_limits<std::int64_t>::min()))
    throw std::invalid_argument(std::string(what) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

// Depth-first odometer over t_{top-1}, ..., t_3 with t_2 the remainder.
class Enumerator {
 public:
  Enumerator(int d, const EnumerationOptions& options) : d_(d), options_(options) {
    pairs_.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) pairs_[static_cast<std::size_t>(k)] = binom2(k);
    if (options.quotient_below) {
      filter_ = true;
      const std::int64_t hn = to_int64(options.quotient_below->numerator(), "bound numerator");
      const std::int64_t hd = to_int64(options.quotient_below->denominator(), "bound denominator");
      weight_.resize(static_cast<std::size_t>(d) + 1);
      // profile quotient < h  <=>  sum_k t_k (k^2 hd + hn) - d^2 hd > 0
      for (int k = 0; k <= d; ++k) weight_[static_cast<std::size_t>(k)] = Wide(k) * k * hd + hn;
      base_ = -Wide(d) * d * hd;
      // best_[u]: multiplicity k in 2..u maximizing weight_k / C(k,2)
      best_.assign(static_cast<std::size_t>(d) + 1, 2);
      for (int u = 3; u <= d; ++u) {
        const int prev = best_[static_cast<std::size_t>(u - 1)];
        const Wide lhs = weight_[static_cast<std::size_t>(u)] * pairs_[static_cast<std::size_t>(prev)];
        const Wide rhs = weight_[static_cast<std::size_t>(prev)] * pairs_[static_cast<std::size_t>(u)];
        best_[static_cast<std::size_t>(u)] = lhs > rhs ? u : prev;
      }
    }
  }

  bool run(const WorkUnit& unit, const TVector* after, const std::function<bool(const TVector&)>& visit) {
    t_.assign(static_cast<std::size_t>(d_) + 1, 0);
    after_ = after;
    visit_ = &visit;
    top_ = unit.top;
    const std::int64_t total = pairs_[static_cast<std::size_t>(d_)];
    if (unit.top == 2) {
      if (after) return true;  // the only profile of this unit is done
      t_[2] = total;
      return visit(t_);
    }
    const std::int64_t remaining = total - unit.value * pairs_[static_cast<std::size_t>(unit.top)];
    if (remaining < 0) return true;
    t_[static_cast<std::size_t>(unit.top)] = unit.value;
    const Wide gain = filter_ ? base_ + Wide(unit.value) * weight_[static_cast<std::size_t>(unit.top)] : 0;
    const bool tight = after != nullptr;
    if (tight && (*after)[static_cast<std::size_t>(unit.top)] != unit.value)
      throw std::invalid_argument("resume cursor does not belong to its work unit");
    return descend(unit.top - 1, remaining, gain, tight);
  }

 private:
  bool descend(int k, std::int64_t remaining, Wide gain, bool tight) {
    if (filter_) {
      const int limit = std::max(2, std::min(k, d_ + 1 - top_));
      const int b = best_[static_cast<std::size_t>(limit)];
      if (gain * pairs_[static_cast<std::size_t>(b)] + Wide(remaining) * weight_[static_cast<std::size_t>(b)] <= 0)
        return true;
    }
    if (k == 2) {
      t_[2] = remaining;
      if (tight) return true;  // this is the cursor itself
      return (*visit_)(t_);
    }
    const auto ku = static_cast<std::size_t>(k);
    std::int64_t cap = remaining / pairs_[ku];
    if (top_ + k > d_ + 1) cap = 0;
    if (options_.extra_pruning && 2 * k - 1 > d_) cap = std::min<std::int64_t>(cap, 1);
    const std::int64_t start = tight ? (*after_)[ku] : 0;
    for (std::int64_t v = start; v <= cap; ++v) {
      t_[ku] = v;
      const Wide g = filter_ ? gain + Wide(v) * weight_[ku] : 0;
      if (!descend(k - 1, remaining - v * pairs_[ku], g, tight && v == start)) {
        t_[ku] = 0;
        return false;
      }
    }
    t_[ku] = 0;
    return true;
  }

  int d_;
  const EnumerationOptions& options_;
  std::vector<std::int64_t> pairs_;
  bool filter_ = false;
  std::vector<Wide> weight_;
  Wide base_ = 0;
  std::vector<int> best_;
  TVector t_;
  const TVector* after_ = nullptr;
  const std::function<bool(const TVector&)>* visit_ = nullptr;
  int top_ = 2;
};

std::string strip_controls(std::string s) {
  for (auto& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<WorkUnit> work_units(int d, const EnumerationOptions& options) {
  if (d < 3) throw std::invalid_argument("profile enumeration needs d >= 3");
  std::vector<WorkUnit> units{{2, binom2(d)}};
  for (int k = 3; k <= d - 1; ++k) {
    const std::int64_t cap = binom2(d) / binom2(k);
    for (std::int64_t v = 1; v <= cap; ++v) {
      if (options.extra_pruning && v >= 2 && 2 * k - 1 > d) break;
      units.push_back({k, v});
    }
  }
  return units;
}

bool enumerate_unit(int d, const WorkUnit& unit, const EnumerationOptions& options, const TVector* after,
                    const std::function<bool(const TVector&)>& visit) {
  if (after && after->size() != static_cast<std::size_t>(d) + 1)
    throw std::invalid_argument("resume cursor has wrong length");
  Enumerator e(d, options);
  return e.run(unit, after, visit);
}

std::vector<Profile> enumerate_profiles(int d, const EnumerationOptions& options) {
  std::vector<Profile> out;
  for (const auto& unit : work_units(d, options))
    enumerate_unit(d, unit, options, nullptr, [&](const TVector& t) {
      out.push_back(Profile::from_dense(d, t));
      return true;
    });
  return out;
}

std::optional<std::int64_t> fake_plane_order(int d) {
  if (d < 2) return std::nullopt;
  const std::int64_t q = q_of(d);
  for (std::int64_t n = 2; n < q; ++n)
    if (!is_prime_power(n) && d <= n * n + n + 1) return n;
  return std::nullopt;
}

std::string ExclusionRecord::to_line() const {
  return profile.canonical() + "\t" + quotient.to_fraction_string() + "\t" + std::string(to_token(reason)) + "\t" +
         strip_controls(detail);
}

ExclusionRecord ExclusionRecord::from_line(const std::string& line) {
  const auto fields = split(line, '\t');
  if (fields.size() < 4) throw std::invalid_argument("malformed record line: " + line);
  const Profile p = Profile::parse(fields[0]);
  const auto reason = reason_from_token(fields[2]);
  if (!reason) throw std::invalid_argument("unknown reason token '" + fields[2] + "'");
  ExclusionRecord r{p, Rational::parse(fields[1]), *reason, fields[3], false};
  r.script_divergence = r.detail.find("[script would exclude]") != std::string::npos;
  return r;
}

ExclusionRecord exclude(const Profile& p, const ExcludeOptions& options) {
  ExclusionRecord rec{p, combinatorial_quotient(p), Reason::kSurvivor, {}, false};
  if (rec.quotient != simplified_quotient(p)) throw std::logic_error("quotient forms disagree for " + p.canonical());

  if (auto fp = few_points(p); fp.excluded) {
    rec.reason = fp.reason;
    rec.detail = fp.detail;
    return rec;
  }
  const ExclusionOutcome tp = two_pencil(p);
  if (tp.excluded) {
    rec.reason = tp.reason;
    rec.detail = tp.detail;
    return rec;
  }
  std::string notes;
  if (tp.script_divergence) {
    rec.script_divergence = true;
    notes = " [script would exclude] " + tp.detail;
  }

  const auto types = enumerate_line_types(p);
  if (types.empty()) {
    rec.reason = Reason::kFeasibility;
    rec.detail = "no admissible line types" + notes;
    return rec;
  }
  const FeasibilitySystem sys = build_system(p, types);
  SolveOptions so;
  so.node_budget = options.node_budget;
  const SolveResult res = solve(sys, so);
  const std::string shape = std::to_string(sys.num_variables()) + " types, " +
                            std::to_string(sys.equalities.size()) + " equalities, " +
                            std::to_string(sys.inequalities.size()) + " inequalities, " +
                            std::to_string(res.nodes) + " nodes";
  if (!res.feasible && !res.budget_exhausted) {
    rec.reason = Reason::kFeasibility;
    rec.detail = "incidence system infeasible (" + shape + ")" + notes;
    return rec;
  }
  if (res.feasible) {
    std::string w;
    for (std::size_t j = 0; j < res.solutions[0].size(); ++j) w += (j ? "," : "") + std::to_string(res.solutions[0][j]);
    rec.detail = "incidence system feasible, witness (" + w + ") (" + shape + ")";
  } else {
    rec.detail = "solver node budget exhausted (" + shape + ")";
  }
  if (const auto n = fake_plane_order(p.d()); n && p.max_multiplicity() <= *n + 1)
    rec.detail += "; possible descendant of a fake plane of order " + std::to_string(*n);
  rec.detail += notes;
  return rec;
}

void Counters::add(const ExclusionRecord& r) {
  ++tested;
  switch (r.reason) {
    case Reason::kFewPoints: ++few_points; break;
    case Reason::kTwoPencilCoarse: ++two_pencil_coarse; break;
    case Reason::kTwoPencilRefined: ++two_pencil_refined; break;
    case Reason::kBudgetExhausted: ++budget_exhausted; break;
    case Reason::kFeasibility: ++feasibility; break;
    default: ++survivors; break;
  }
  if (r.script_divergence) ++script_divergence;
}

Counters& Counters::operator+=(const Counters& o) {
  seen += o.seen;
  tested += o.tested;
  few_points += o.few_points;
  two_pencil_coarse += o.two_pencil_coarse;
  two_pencil_refined += o.two_pencil_refined;
  budget_exhausted += o.budget_exhausted;
  feasibility += o.feasibility;
  survivors += o.survivors;
  script_divergence += o.script_divergence;
  return *this;
}

namespace {

struct CounterField {
  const char* name;
  std::uint64_t Counters::*member;
};

constexpr CounterField kCounterFields[] = {
    {"seen", &Counters::seen},
    {"tested", &Counters::tested},
    {"few-points", &Counters::few_points},
    {"two-pencil-coarse", &Counters::two_pencil_coarse},
    {"two-pencil-refined", &Counters::two_pencil_refined},
    {"budget-exhausted", &Counters::budget_exhausted},
    {"feasibility", &Counters::feasibility},
    {"survivor", &Counters::survivors},
    {"script-divergence", &Counters::script_divergence},
};

}  // namespace

std::string Counters::to_string() const {
  std::string out;
  for (const auto& f : kCounterFields) {
    if (!out.empty()) out += " ";
    out += std::string(f.name) + "=" + std::to_string(this->*f.member);
  }
  return out;
}

Counters Counters::parse(const std::string& text) {
  Counters c;
  std::istringstream is(text);
  std::string item;
  while (is >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed counters '" + text + "'");
    const std::string name = item.substr(0, eq);
    bool known = false;
    for (const auto& f : kCounterFields) {
      if (name == f.name) {
        c.*f.member = std::stoull(item.substr(eq + 1));
        known = true;
      }
    }
    if (!known) throw std::invalid_argument("unknown counter '" + name + "'");
  }
  return c;
}

std::vector<ExclusionRecord> Verdict::survivors() const {
  std::vector<ExclusionRecord> out;
  for (const auto& r : records)
    if (!r.excluded()) out.push_back(r);
  return out;
}

std::string Verdict::report() const {
  std::ostringstream os;
  os << "input\td=" << d << "\tbound=" << bound.to_fraction_string() << "\n";
  for (const auto& r : records) os << "record\t" << r.to_line() << "\n";
  os << "summary\t" << counters.to_string() << (complete ? "" : " incomplete=1") << "\n";
  if (!complete) {
    os << "Run interrupted; resume from the checkpoint to finish.\n";
  } else if (all_excluded()) {
    os << "All configurations have been excluded.\n";
  } else {
    os << counters.survivors << " configurations could not be excluded.\n";
  }
  return os.str();
}

std::string Checkpoint::serialize() const {
  std::ostringstream os;
  os << "harbourne-checkpoint v" << kVersion << "\n";
  os << "d " << d << "\n";
  os << "bound " << bound.to_fraction_string() << "\n";
  os << "extra-pruning " << (extra_pruning ? 1 : 0) << "\n";
  os << "bound-pruning " << (bound_pruning ? 1 : 0) << "\n";
  os << "records " << (keep_excluded ? "all" : "survivors") << "\n";
  os << "units " << units.size() << "\n";
  for (const auto& u : units) {
    const char* status = u.status == UnitProgress::Status::kDone      ? "done"
                         : u.status == UnitProgress::Status::kPartial ? "partial"
                                                                      : "pending";
    os << "unit " << u.unit.top << " " << u.unit.value << " " << status << "\n";
    if (u.status == UnitProgress::Status::kPending) continue;
    if (u.status == UnitProgress::Status::kPartial) {
      os << "cursor";
      for (std::size_t k = 2; k < u.cursor.size(); ++k) os << " " << u.cursor[k];
      os << "\n";
    }
    os << "counters " << u.counters.to_string() << "\n";
    for (const auto& r : u.records) os << "record\t" << r.to_line() << "\n";
  }
  os << "end\n";
  return os.str();
}

Checkpoint Checkpoint::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto next = [&]() -> std::string& {
    if (!std::getline(is, line)) throw std::invalid_argument("truncated checkpoint");
    return line;
  };
  auto value_of = [&](const std::string& key) {
    next();
    if (line.rfind(key + " ", 0) != 0) throw std::invalid_argument("checkpoint: expected '" + key + "'");
    return line.substr(key.size() + 1);
  };
  if (next() != "harbourne-checkpoint v" + std::to_string(kVersion))
    throw std::invalid_argument("not a version " + std::to_string(kVersion) + " checkpoint");
  Checkpoint c;
  c.d = std::stoi(value_of("d"));
  c.bound = Rational::parse(value_of("bound"));
  c.extra_pruning = value_of("extra-pruning") == "1";
  c.bound_pruning = value_of("bound-pruning") == "1";
  const std::string kept = value_of("records");
  if (kept != "all" && kept != "survivors") throw std::invalid_argument("checkpoint: bad records mode '" + kept + "'");
  c.keep_excluded = kept == "all";
  const std::size_t count = std::stoull(value_of("units"));
  UnitProgress* current = nullptr;
  while (true) {
    next();
    if (line == "end") break;
    if (line.rfind("unit ", 0) == 0) {
      std::istringstream ls(line.substr(5));
      UnitProgress u;
      std::string status;
      ls >> u.unit.top >> u.unit.value >> status;
      if (status == "done") {
        u.status = UnitProgress::Status::kDone;
      } else if (status == "partial") {
        u.status = UnitProgress::Status::kPartial;
      } else if (status == "pending") {
        u.status = UnitProgress::Status::kPending;
      } else {
        throw std::invalid_argument("checkpoint: bad unit status '" + status + "'");
      }
      c.units.push_back(u);
      current = &c.units.back();
    } else if (line.rfind("cursor", 0) == 0 && current) {
      std::istringstream ls(line.substr(6));
      current->cursor.assign(2, 0);
      std::int64_t v = 0;
      while (ls >> v) current->cursor.push_back(v);
      if (current->cursor.size() != static_cast<std::size_t>(c.d) + 1)
        throw std::invalid_argument("checkpoint: cursor has wrong length");
    } else if (line.rfind("counters ", 0) == 0 && current) {
      current->counters = Counters::parse(line.substr(9));
    } else if (line.rfind("record\t", 0) == 0 && current) {
      current->records.push_back(ExclusionRecord::from_line(line.substr(7)));
    } else {
      throw std::invalid_argument("checkpoint: unexpected line '" + line + "'");
    }
  }
  if (c.units.size() != count) throw std::invalid_argument("checkpoint: unit count mismatch");
  return c;
}

void Checkpoint::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << serialize();
    if (!out.flush()) throw std::runtime_error("cannot write checkpoint " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot replace checkpoint " + path);
}

Checkpoint Checkpoint::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

namespace {

// Shared per-unit state; workers publish into it, the checkpoint writer
// snapshots it.
struct SharedUnit {
  std::mutex mutex;
  UnitProgress progress;
};

class CheckRun {
 public:
  CheckRun(int d, const Rational& bound, const CheckOptions& options) : d_(d), bound_(bound), options_(options) {
    enumeration_ = options.enumeration;
    enumeration_.quotient_below.reset();
    if (options.bound_pruning) enumeration_.quotient_below = bound;
    hn_ = to_int64(bound.numerator(), "bound numerator");
    hd_ = to_int64(bound.denominator(), "bound denominator");

    std::vector<WorkUnit> units = work_units(d, options.enumeration);
    if (!options.only_units.empty()) {
      for (const auto& u : options.only_units)
        if (std::find(units.begin(), units.end(), u) == units.end())
          throw std::invalid_argument("work unit (" + std::to_string(u.top) + "," + std::to_string(u.value) +
                                      ") does not exist for d=" + std::to_string(d));
      units = options.only_units;
    }
    units_ = std::vector<SharedUnit>(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) units_[i].progress.unit = units[i];

    if (!options.resume_path.empty()) restore(Checkpoint::load(options.resume_path));
  }

  Verdict run() {
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < units_.size(); ++i)
      if (units_[i].progress.status != UnitProgress::Status::kDone) pending.push_back(i);

    const int jobs = std::max(1, options_.jobs);
    std::vector<std::thread> workers;
    std::atomic<int> running{jobs};
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        while (!stop_.load(std::memory_order_relaxed)) {
          const std::size_t slot = next_.fetch_add(1);
          if (slot >= pending.size()) break;
          process(units_[pending[slot]]);
        }
        if (--running == 0) {
          std::lock_guard lock(wake_mutex_);
          wake_.notify_all();
        }
      });
    }

    std::uint64_t last_written = seen_.load();
    while (running.load() > 0) {
      std::unique_lock lock(wake_mutex_);
      wake_.wait_for(lock, std::chrono::milliseconds(100), [&] { return running.load() == 0; });
      lock.unlock();
      if (options_.interrupt && options_.interrupt->load()) stop_.store(true);
      if (!options_.checkpoint_path.empty() && seen_.load() - last_written >= options_.checkpoint_every) {
        last_written = seen_.load();
        snapshot().save(options_.checkpoint_path);
      }
    }
    for (auto& t : workers) t.join();
    const Checkpoint final_state = snapshot();
    if (!options_.checkpoint_path.empty()) final_state.save(options_.checkpoint_path);
    return merge(final_state);
  }

 private:
  void restore(const Checkpoint& c) {
    if (c.d != d_ || c.bound != bound_ || c.extra_pruning != options_.enumeration.extra_pruning ||
        c.bound_pruning != options_.bound_pruning || c.keep_excluded != options_.keep_excluded)
      throw std::invalid_argument("checkpoint was written for a different check configuration");
    if (c.units.size() != units_.size()) throw std::invalid_argument("checkpoint covers different work units");
    for (std::size_t i = 0; i < units_.size(); ++i) {
      if (!(c.units[i].unit == units_[i].progress.unit))
        throw std::invalid_argument("checkpoint covers different work units");
      units_[i].progress = c.units[i];
    }
  }

  void process(SharedUnit& shared) {
    UnitProgress local;
    {
      std::lock_guard lock(shared.mutex);
      local = shared.progress;
    }
    const bool resume = local.status == UnitProgress::Status::kPartial;
    TVector cursor = local.cursor;
    std::vector<ExclusionRecord> fresh;
    std::uint64_t since_publish = 0;

    auto publish = [&](UnitProgress::Status status) {
      std::lock_guard lock(shared.mutex);
      shared.progress.status = status;
      shared.progress.cursor = cursor;
      shared.progress.counters = local.counters;
      for (auto& r : fresh) shared.progress.records.push_back(std::move(r));
      fresh.clear();
    };

    const bool finished = enumerate_unit(d_, local.unit, enumeration_, resume ? &local.cursor : nullptr,
                                         [&](const TVector& t) {
                                           if (stop_.load(std::memory_order_relaxed)) return false;
                                           if (options_.stop_after != 0 && seen_.load() >= options_.stop_after) {
                                             stop_.store(true);
                                             return false;
                                           }
                                           visit(t, local.counters, fresh);
                                           seen_.fetch_add(1, std::memory_order_relaxed);
                                           cursor = t;
                                           if (++since_publish >= 4096) {
                                             since_publish = 0;
                                             publish(UnitProgress::Status::kPartial);
                                           }
                                           return true;
                                         });
    if (finished) {
      cursor.clear();
      publish(UnitProgress::Status::kDone);
    } else if (!cursor.empty()) {
      publish(UnitProgress::Status::kPartial);
    }
  }

  void visit(const TVector& t, Counters& counters, std::vector<ExclusionRecord>& out) const {
    ++counters.seen;
    Wide s = 0;
    Wide squares = 0;
    for (int k = 2; k <= d_; ++k) {
      const std::int64_t v = t[static_cast<std::size_t>(k)];
      s += v;
      squares += Wide(v) * k * k;
    }
    // quotient < bound  <=>  (d^2 - squares) hd < hn s
    if ((Wide(d_) * d_ - squares) * hd_ >= Wide(hn_) * s) return;
    if (!options_.keep_excluded && s < d_) {
      // exclude() would stop at the few-points test; skip building the record.
      ++counters.tested;
      ++counters.few_points;
      return;
    }
    ExclusionRecord r = exclude(Profile::from_dense(d_, t), options_.exclude);
    counters.add(r);
    if (options_.keep_excluded || !r.excluded()) out.push_back(std::move(r));
  }

  Checkpoint snapshot() {
    Checkpoint c;
    c.d = d_;
    c.bound = bound_;
    c.extra_pruning = options_.enumeration.extra_pruning;
    c.bound_pruning = options_.bound_pruning;
    c.keep_excluded = options_.keep_excluded;
    for (auto& u : units_) {
      std::lock_guard lock(u.mutex);
      c.units.push_back(u.progress);
    }
    return c;
  }

  Verdict merge(const Checkpoint& c) const {
    Verdict v;
    v.d = d_;
    v.bound = bound_;
    for (const auto& u : c.units) {
      if (u.status != UnitProgress::Status::kDone) v.complete = false;
      v.counters += u.counters;
      v.records.insert(v.records.end(), u.records.begin(), u.records.end());
    }
    // The pencil is realizable and never enumerated; it matters only for
    // bounds above its quotient 0.
    if (v.complete && options_.only_units.empty() && bound_ > Rational(0)) {
      const Profile pencil = Profile::from_counts(d_, {{d_, 1}});
      ExclusionRecord r{pencil, Rational(0), Reason::kSurvivor, "pencil, realizable over every field", false};
      v.counters.add(r);
      v.records.push_back(r);
    }
    return v;
  }

  int d_;
  Rational bound_;
  const CheckOptions& options_;
  EnumerationOptions enumeration_;
  std::int64_t hn_ = 0;
  std::int64_t hd_ = 1;
  std::vector<SharedUnit> units_;
  std::atomic<std::size_t> next_{0};
  std::atomic<bool> stop_{false};
  std::atomic<std::uint64_t> seen_{0};
  std::mutex wake_mutex_;
  std::condition_variable wake_;
};

}  // namespace

Verdict check(int d, const Rational& bound, const CheckOptions& options) {
  CheckRun run(d, bound, options);
  return run.run();
}

HResult compute_H(int d, const CheckOptions& options) {
  if (d < 2) throw std::invalid_argument("compute_H needs d >= 2");
  HResult out{d, best_known_upper(d), false, {}};
  out.verdict.d = d;
  out.verdict.bound = out.upper.value;

  const std::int64_t q = q_of(d);
  const std::int64_t i = q * q + q + 1 - d;
  if (d == 2) {
    out.construction_verified = true;  // two lines, one double point
  } else if (i <= 2 * q - 1) {
    const Profile realized = arrangement_profile(removal_construction(q, i));
    out.construction_verified = realized == out.upper.witness.profile;
  }
  if (d >= 3) out.verdict = check(d, out.upper.value, options);
  return out;
}

}  // namespace harbourne
