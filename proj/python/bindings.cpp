#include "harbourne/bounds.hpp"
#include "harbourne/criteria.hpp"
#include "harbourne/feasibility.hpp"
#include "harbourne/geometry.hpp"
#include "harbourne/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace harbourne;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.to_fraction_string());
}

// Accepts Fraction, int or an exact "p/q" string; floats are refused.
Rational from_python(const py::handle& h) {
  if (py::isinstance<py::float_>(h))
    throw py::type_error("use an exact rational (Fraction, int or 'p/q' string), not a float");
  return Rational::parse(py::str(h).cast<std::string>());
}

Profile profile_arg(const py::handle& h) {
  if (py::isinstance<Profile>(h)) return h.cast<Profile>();
  return Profile::parse(h.cast<std::string>());
}

py::dict record_dict(const ExclusionRecord& r) {
  py::dict d;
  d["profile"] = r.profile.canonical();
  d["quotient"] = to_fraction(r.quotient);
  d["reason"] = std::string(to_token(r.reason));
  d["detail"] = r.detail;
  d["excluded"] = r.excluded();
  return d;
}

py::dict counters_dict(const Counters& c) {
  py::dict d;
  d["seen"] = c.seen;
  d["tested"] = c.tested;
  d["few-points"] = c.few_points;
  d["two-pencil-coarse"] = c.two_pencil_coarse;
  d["two-pencil-refined"] = c.two_pencil_refined;
  d["budget-exhausted"] = c.budget_exhausted;
  d["feasibility"] = c.feasibility;
  d["survivor"] = c.survivors;
  d["script-divergence"] = c.script_divergence;
  return d;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["d"] = v.d;
  d["bound"] = to_fraction(v.bound);
  d["complete"] = v.complete;
  d["all_excluded"] = v.all_excluded();
  d["counters"] = counters_dict(v.counters);
  py::list records;
  for (const auto& r : v.records) records.append(record_dict(r));
  d["records"] = records;
  d["report"] = v.report();
  return d;
}

py::dict outcome_dict(const ExclusionOutcome& o) {
  py::dict d;
  d["excluded"] = o.excluded;
  d["reason"] = std::string(to_token(o.reason));
  d["detail"] = o.detail;
  d["script_divergence"] = o.script_divergence;
  return d;
}

py::dict arrangement_dict(const Arrangement& a) {
  py::dict d;
  d["d"] = a.num_lines();
  py::list lines;
  for (const auto& l : a.lines()) lines.append(py::make_tuple(l.c[0], l.c[1], l.c[2]));
  d["lines"] = lines;
  d["profile"] = arrangement_profile(a).canonical();
  d["H"] = to_fraction(a.harbourne_constant());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computation and certification of linear Harbourne constants";

  py::register_exception<ProfileError>(m, "ProfileError", PyExc_ValueError);

  py::class_<Profile>(m, "Profile")
      .def(py::init([](const std::string& text) { return Profile::parse(text); }), py::arg("text"))
      .def_static(
          "from_counts",
          [](int d, const std::map<int, std::int64_t>& counts) {
            return Profile::from_counts(d, std::vector<Profile::Entry>(counts.begin(), counts.end()));
          },
          py::arg("d"), py::arg("counts"))
      .def_static("from_multiplicities",
                  [](int d, std::vector<int> m) { return Profile::from_multiset(d, MultiplicityMultiset{std::move(m)}); })
      .def_property_readonly("d", &Profile::d)
      .def_property_readonly("counts",
                             [](const Profile& p) {
                               return std::map<int, std::int64_t>(p.entries().begin(), p.entries().end());
                             })
      .def_property_readonly("num_points", &Profile::num_points)
      .def_property_readonly("max_multiplicity", &Profile::max_multiplicity)
      .def("multiplicities", [](const Profile& p) { return p.to_multiset().entries; })
      .def("canonical", &Profile::canonical)
      .def("quotient", [](const Profile& p) { return to_fraction(combinatorial_quotient(p)); })
      .def("__eq__", [](const Profile& a, const Profile& b) { return a == b; })
      .def("__hash__", [](const Profile& p) { return py::hash(py::str(p.canonical())); })
      .def("__str__", &Profile::canonical)
      .def("__repr__", [](const Profile& p) { return "Profile('" + p.canonical() + "')"; });

  m.def("combinatorial_quotient", [](const py::handle& p) { return to_fraction(combinatorial_quotient(profile_arg(p))); });
  m.def("harbourne_of_multiset", [](int d, std::vector<int> m) {
    return to_fraction(harbourne_of_multiset(d, MultiplicityMultiset{std::move(m)}));
  });

  m.def("is_prime_power", &is_prime_power);
  m.def("q_of", &q_of);
  m.def("r_of", &r_of);
  m.def("conjectured_h", [](std::int64_t d) -> py::object {
    const auto h = conjectured_h(d);
    if (!h) return py::none();
    py::dict out;
    out["h"] = to_fraction(h->h);
    out["witness"] = h->witness.profile.canonical();
    out["witness_consistent"] = h->witness_consistent;
    return out;
  });
  m.def("best_known_upper", [](std::int64_t d) {
    const auto b = best_known_upper(d);
    return py::make_tuple(to_fraction(b.value), b.witness.profile.canonical(), std::string(to_string(b.witness.provenance)));
  });
  m.def("naive_upper_bound", [](std::int64_t d) { return to_fraction(naive_upper_bound(d).value); });
  m.def("lower_bound_holds", [](const py::handle& x, std::int64_t d) { return lower_bound_holds(from_python(x), d); });
  m.def("lower_bound_equality",
        [](const py::handle& x, std::int64_t d) { return lower_bound_equality(from_python(x), d); });

  m.def("few_points", [](const py::handle& p) { return outcome_dict(few_points(profile_arg(p))); });
  m.def("two_pencil", [](const py::handle& p) { return outcome_dict(two_pencil(profile_arg(p))); });
  m.def("greedy_common_line_points",
        [](const py::handle& p) { return greedy_common_line_points(profile_arg(p)); });

  m.def("line_types", [](const py::handle& p) {
    std::vector<std::map<int, std::int64_t>> out;
    for (const auto& t : enumerate_line_types(profile_arg(p))) {
      std::map<int, std::int64_t> nu;
      for (std::size_t k = 2; k < t.nu.size(); ++k)
        if (t.nu[k] != 0) nu[static_cast<int>(k)] = t.nu[k];
      out.push_back(std::move(nu));
    }
    return out;
  });
  m.def(
      "solve",
      [](const py::handle& p, bool all, bool inequalities) {
        FeasibilitySystem sys = build_system(profile_arg(p));
        if (!inequalities) sys = without_inequalities(std::move(sys));
        SolveOptions o;
        o.mode = all ? SolveMode::kAll : SolveMode::kFirst;
        const auto r = solve(sys, o);
        py::dict d;
        d["feasible"] = r.feasible;
        d["solutions"] = r.solutions;
        d["nodes"] = r.nodes;
        return d;
      },
      py::arg("profile"), py::arg("all") = false, py::arg("inequalities") = true);
  m.def("emit_lp", [](const py::handle& p) { return emit_lp(build_system(profile_arg(p))); });

  m.def("full_plane", [](std::int64_t q) { return arrangement_dict(full_plane_arrangement(q)); });
  m.def("construct", [](std::int64_t q, std::int64_t i) { return arrangement_dict(removal_construction(q, i)); },
        py::arg("q"), py::arg("i"));

  m.def("exclude", [](const py::handle& p) { return record_dict(exclude(profile_arg(p))); });
  m.def(
      "check",
      [](int d, const py::handle& bound, int jobs, bool bound_pruning, bool extra_pruning, bool keep_excluded) {
        CheckOptions o;
        o.jobs = jobs;
        o.bound_pruning = bound_pruning;
        o.enumeration.extra_pruning = extra_pruning;
        o.keep_excluded = keep_excluded;
        const Rational b = from_python(bound);
        Verdict v;
        {
          py::gil_scoped_release release;
          v = check(d, b, o);
        }
        return verdict_dict(v);
      },
      py::arg("d"), py::arg("bound"), py::arg("jobs") = 1, py::arg("bound_pruning") = true,
      py::arg("extra_pruning") = true, py::arg("keep_excluded") = true);
  m.def(
      "compute_H",
      [](int d, int jobs) {
        CheckOptions o;
        o.jobs = jobs;
        std::optional<HResult> r;
        {
          py::gil_scoped_release release;
          r.emplace(compute_H(d, o));
        }
        py::dict out;
        out["d"] = d;
        out["H"] = to_fraction(r->upper.value);
        out["certified"] = r->certified();
        out["witness"] = r->upper.witness.profile.canonical();
        out["construction_verified"] = r->construction_verified;
        out["survivors"] = r->verdict.counters.survivors;
        return out;
      },
      py::arg("d"), py::arg("jobs") = 1);
}
