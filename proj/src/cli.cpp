#include "harbourne/cli.hpp"

#include "harbourne/bounds.hpp"
#include "harbourne/criteria.hpp"
#include "harbourne/feasibility.hpp"
#include "harbourne/geometry.hpp"
#include "harbourne/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace harbourne::cli {

namespace {

using nlohmann::json;

enum class Format { kText, kJson };

std::string decimal(const Rational& r, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << r.to_double();
  return os.str();
}

json record_json(const ExclusionRecord& r) {
  return {{"type", "record"},
          {"profile", r.profile.canonical()},
          {"quotient", r.quotient.to_fraction_string()},
          {"reason", std::string(to_token(r.reason))},
          {"detail", r.detail}};
}

WorkUnit parse_unit(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("work unit must be written K:V, got '" + text + "'");
  return {std::stoi(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
}

int cmd_bounds(int d, Format format, std::ostream& out) {
  if (d < 2) throw std::invalid_argument("bounds needs d >= 2");
  json j{{"d", d}};
  std::vector<std::string> lines;
  const auto q = q_of(d);
  j["q"] = q;
  lines.push_back("q(d) = " + std::to_string(q));
  if (d >= 7) {
    j["r"] = r_of(d);
    lines.push_back("r(d) = " + std::to_string(r_of(d)));
  } else {
    j["r"] = nullptr;
    lines.push_back("r(d) = undefined (d < 7)");
  }
  const ConjectureData cd = conjecture_data(d);
  if (const auto h = conjectured_h(d)) {
    j["h"] = h->h.to_string();
    std::string line = "h(d) = " + h->h.to_string() + " (i = " + std::to_string(cd.i) + ")";
    if (!h->witness_consistent) {
      const std::string wq = combinatorial_quotient(h->witness.profile).to_string();
      line += " [flag: formula disagrees with its own profile " + h->witness.profile.canonical() +
              " whose quotient is " + wq + "]";
      j["h_flag"] = "witness quotient " + wq;
    }
    lines.push_back(line);
  } else {
    j["h"] = nullptr;
    lines.push_back("h(d) = out of domain (i = " + std::to_string(cd.i) + " > 2q-1 = " + std::to_string(2 * q - 1) + ")");
  }
  if (d >= 6) {
    const double lb = 0.5 - 0.5 * std::sqrt(4.0 * d - 3.0);
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << lb;
    lines.push_back("lower bound = (1-sqrt(4d-3))/2 = (1-sqrt(" + std::to_string(4 * d - 3) + "))/2 ~ " + os.str());
    j["lower_bound"] = "(1-sqrt(" + std::to_string(4 * d - 3) + "))/2";
    j["lower_bound_decimal"] = lb;
  } else {
    lines.push_back("lower bound = n/a (d < 6)");
    j["lower_bound"] = nullptr;
  }
  if (d >= 7) {
    const auto nb = naive_upper_bound(d);
    lines.push_back("naive upper = " + nb.value.to_string() + " via " + nb.witness.profile.canonical());
    j["naive_upper"] = nb.value.to_string();
  } else {
    lines.push_back("naive upper = n/a (d < 7)");
    j["naive_upper"] = nullptr;
  }
  const auto gen = generic_profile(d);
  lines.push_back("generic = " + gen.value.to_string());
  j["generic"] = gen.value.to_string();
  const auto best = best_known_upper(d);
  lines.push_back("best known upper = " + best.value.to_string() + " via " + std::string(to_string(best.witness.provenance)) +
                  ": " + best.witness.profile.canonical());
  j["best_known_upper"] = best.value.to_string();
  j["witness"] = best.witness.profile.canonical();
  j["provenance"] = std::string(to_string(best.witness.provenance));
  if (format == Format::kJson) {
    out << j.dump() << "\n";
  } else {
    for (const auto& l : lines) out << l << "\n";
  }
  return kSuccess;
}

int emit_verdict(const Verdict& v, Format format, const std::string& report_path, std::ostream& out) {
  if (!report_path.empty()) {
    std::ofstream rep(report_path, std::ios::trunc);
    if (!rep) throw std::runtime_error("cannot write report " + report_path);
    rep << v.report();
  }
  if (format == Format::kJson) {
    out << json{{"type", "input"}, {"d", v.d}, {"bound", v.bound.to_fraction_string()}}.dump() << "\n";
    if (report_path.empty())
      for (const auto& r : v.records) out << record_json(r).dump() << "\n";
    json summary{{"type", "summary"}, {"complete", v.complete}};
    const Counters& c = v.counters;
    summary["counters"] = {{"seen", c.seen},
                           {"tested", c.tested},
                           {"few-points", c.few_points},
                           {"two-pencil-coarse", c.two_pencil_coarse},
                           {"two-pencil-refined", c.two_pencil_refined},
                           {"budget-exhausted", c.budget_exhausted},
                           {"feasibility", c.feasibility},
                           {"survivor", c.survivors},
                           {"script-divergence", c.script_divergence}};
    out << summary.dump() << "\n";
    out << json{{"type", "verdict"},
                {"outcome", !v.complete ? "interrupted" : v.all_excluded() ? "all-excluded" : "survivors"}}
                  .dump()
        << "\n";
  } else if (report_path.empty()) {
    out << v.report();
  } else {
    const std::string rep = v.report();
    // Summary and verdict are the last two lines of the report.
    auto end = rep.size() - 1;
    auto cut = rep.rfind('\n', end - 1);
    cut = rep.rfind('\n', cut - 1);
    out << rep.substr(cut + 1);
  }
  if (!v.complete) return kInterrupted;
  return v.all_excluded() ? kSuccess : kInconclusive;
}

int cmd_table(int dmin, int dmax, const CheckOptions& options, Format format, std::ostream& out) {
  if (dmin < 2 || dmax < dmin) throw std::invalid_argument("table needs 2 <= dmin <= dmax");
  bool all = true;
  for (int d = dmin; d <= dmax; ++d) {
    const HResult r = compute_H(d, options);
    if (!r.verdict.complete) return kInterrupted;
    all = all && r.certified();
    if (format == Format::kJson) {
      out << json{{"d", d},
                  {"H", r.upper.value.to_string()},
                  {"decimal", r.upper.value.to_double()},
                  {"certified", r.certified()},
                  {"witness", r.upper.witness.profile.canonical()},
                  {"construction_verified", r.construction_verified},
                  {"survivors", r.verdict.counters.survivors}}
                 .dump()
          << "\n";
    } else {
      out << d << " | " << r.upper.value.to_string() << " | " << decimal(r.upper.value);
      if (!r.certified()) out << " | inconclusive (" << r.verdict.counters.survivors << " survivors, upper bound only)";
      out << "\n";
    }
  }
  return all ? kSuccess : kInconclusive;
}

int cmd_construct(std::int64_t q, std::int64_t i, Format format, std::ostream& out) {
  const Arrangement a = removal_construction(q, i);
  const Profile p = arrangement_profile(a);
  if (format == Format::kJson) {
    json lines = json::array();
    const auto& f = a.plane().field();
    for (const auto& l : a.lines()) lines.push_back({f.format(l.c[0]), f.format(l.c[1]), f.format(l.c[2])});
    out << json{{"q", q}, {"i", i}, {"d", a.num_lines()}, {"lines", lines}, {"profile", p.canonical()},
                {"H", a.harbourne_constant().to_string()}}
               .dump()
        << "\n";
  } else {
    out << "lines " << a.num_lines() << "\n" << format_lines(a);
    out << "profile " << p.canonical() << "\n";
    out << "H = " << a.harbourne_constant().to_string() << "\n";
  }
  return kSuccess;
}

int cmd_emit_lp(const std::string& profile, const std::string& output, std::ostream& out) {
  const std::string lp = emit_lp(build_system(Profile::parse(profile)));
  if (output.empty() || output == "-") {
    out << lp;
  } else {
    std::ofstream f(output, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + output);
    f << lp;
  }
  return kSuccess;
}

struct TableEntry {
  int d;
  const char* value;
};

// Known values of H(d) for 2 <= d <= 31.
constexpr TableEntry kKnownValues[] = {
    {2, "0"},         {3, "-1"},        {4, "-4/3"},      {5, "-3/2"},      {6, "-12/7"},     {7, "-2"},
    {8, "-2"},        {9, "-9/4"},      {10, "-29/12"},   {11, "-33/13"},   {12, "-36/13"},   {13, "-3"},
    {14, "-54/19"},   {15, "-3"},       {16, "-16/5"},    {17, "-67/20"},   {18, "-24/7"},    {19, "-76/21"},
    {20, "-80/21"},   {21, "-4"},       {22, "-108/29"},  {23, "-115/30"},  {24, "-4"},       {25, "-125/30"},
    {26, "-129/30"},  {27, "-135/31"},  {28, "-140/31"},  {29, "-145/31"},  {30, "-150/31"},  {31, "-5"},
};

int cmd_selftest(std::ostream& out) {
  int failures = 0;
  auto expect = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  {
    const auto r = exclude(Profile::parse("d=10; t3=7,t4=4"));
    expect("two pencils excludes d=10 t3=7 t4=4 with 9+3 > 11",
           r.reason == Reason::kTwoPencilRefined && r.detail.find("9+3 > 11") != std::string::npos);
  }
  {
    const Profile p = Profile::parse("d=14; t3=7,t4=10,t5=1");
    const auto sys = build_system(p);
    SolveOptions all;
    all.mode = SolveMode::kAll;
    const auto eq = solve(without_inequalities(sys), all);
    const std::vector<std::vector<std::int64_t>> want{{0, 9, 1, 4}, {1, 8, 0, 5}};
    expect("incidence equalities for d=14 have exactly two solutions", eq.solutions == want);
    expect("unique 5-fold point inequalities make d=14 infeasible", !solve(sys).feasible);
  }
  for (const auto& [d, value] : kKnownValues) {
    if (d < 5) continue;
    const auto h = conjectured_h(d);
    expect("conjectured h(" + std::to_string(d) + ") = " + value, h && h->h == Rational::parse(value));
  }
  for (const auto& [d, value] : kKnownValues) {
    expect("best known upper(" + std::to_string(d) + ") = " + value, best_known_upper(d).value == Rational::parse(value));
  }
  for (std::int64_t q : {2, 3, 4, 5}) {
    const auto a = full_plane_arrangement(q);
    expect("full plane q=" + std::to_string(q) + " has H = -q and meets the lower bound",
           a.harbourne_constant() == Rational(-q) && lower_bound_equality(Rational(-q), q * q + q + 1));
  }
  for (const auto& [d, value] : kKnownValues) {
    if (d > 10) break;
    const auto r = compute_H(d);
    expect("certified H(" + std::to_string(d) + ") = " + value, r.certified() && r.upper.value == Rational::parse(value));
  }
  out << (failures == 0 ? "selftest passed" : std::to_string(failures) + " selftest checks failed") << "\n";
  return failures == 0 ? kSuccess : kInconclusive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::atomic<bool>* interrupt) {
  CLI::App app{"Absolute linear Harbourne constants of line arrangements", "harbourne"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));

  int d = 0;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for d lines");
  bounds->add_option("d", d, "Number of lines")->required();

  std::string bound_text;
  std::string report_path;
  std::vector<std::string> unit_texts;
  CheckOptions options;
  bool no_extra = false;
  bool no_bound = false;
  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-extra-pruning", no_extra, "Drop the equal-multiplicity enumeration rule");
    cmd->add_flag("--no-bound-pruning", no_bound, "Visit every profile, not only subtrees that can fall below the bound");
    cmd->add_option("--node-budget", options.exclude.node_budget, "Solver node limit per profile (0 = none)");
  };
  auto* check_cmd = app.add_subcommand("check", "Exclude every profile with quotient below a bound");
  check_cmd->add_option("d", d, "Number of lines")->required();
  check_cmd->add_option("bound", bound_text, "Tested bound as an exact rational, e.g. -29/12")->required();
  check_cmd->add_option("--report", report_path, "Write the report to FILE");
  check_cmd->add_option("--checkpoint", options.checkpoint_path, "Write checkpoints to FILE");
  check_cmd->add_option("--resume", options.resume_path, "Resume from a checkpoint FILE");
  check_cmd->add_option("--checkpoint-every", options.checkpoint_every, "Profiles between checkpoints")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--stop-after", options.stop_after, "Stop after visiting N profiles (leaves a checkpoint)");
  check_cmd->add_option("--unit", unit_texts, "Restrict to work unit K:V (highest multiplicity K with t_K = V)");
  bool survivors_only = false;
  check_cmd->add_flag("--survivors-only", survivors_only, "Keep only survivor records (counters stay complete)");
  add_run_options(check_cmd);

  int dmin = 0;
  int dmax = 0;
  auto* table = app.add_subcommand("table", "Compute and certify H(d) for a range of d");
  table->add_option("dmin", dmin)->required();
  table->add_option("dmax", dmax)->required();
  add_run_options(table);

  std::int64_t q = 0;
  std::int64_t i = 0;
  auto* construct = app.add_subcommand("construct", "Build PG(2,q) minus i pencil lines");
  construct->add_option("--q", q, "Prime power order")->required();
  construct->add_option("--i", i, "Number of removed lines")->required();

  std::string profile_text;
  std::string output;
  auto* lp = app.add_subcommand("emit-lp", "Write the incidence system of a profile as an LP file");
  lp->add_option("profile", profile_text, "Profile, e.g. \"d=14; t3=7,t4=10,t5=1\"")->required();
  lp->add_option("--output,-o", output, "Output file (default: standard output)");

  auto* selftest = app.add_subcommand("selftest", "Run the embedded regression checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
        sub && e.get_exit_code() == 0) {
      out << sub->help();
      return kSuccess;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const Format format = format_name == "json" ? Format::kJson : Format::kText;
  options.enumeration.extra_pruning = !no_extra;
  options.bound_pruning = !no_bound;
  options.interrupt = interrupt;

  try {
    if (bounds->parsed()) return cmd_bounds(d, format, out);
    if (check_cmd->parsed()) {
      Rational bound;
      try {
        bound = Rational::parse(bound_text);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
      }
      if (d < 3) {
        err << "error: check needs d >= 3\n";
        return kUsageError;
      }
      options.keep_excluded = !survivors_only;
      for (const auto& u : unit_texts) options.only_units.push_back(parse_unit(u));
      return emit_verdict(check(d, bound, options), format, report_path, out);
    }
    if (table->parsed()) return cmd_table(dmin, dmax, options, format, out);
    if (construct->parsed()) return cmd_construct(q, i, format, out);
    if (lp->parsed()) return cmd_emit_lp(profile_text, output, out);
    if (selftest->parsed()) return cmd_selftest(out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace harbourne::cli
