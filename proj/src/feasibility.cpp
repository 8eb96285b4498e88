#include "harbourne/feasibility.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace harbourne {

std::vector<LineType> enumerate_line_types(const Profile& p) {
  const int d = p.d();
  // Multiplicities present, highest first: the highest is the most
  // significant coordinate of the output order.
  std::vector<Profile::Entry> present(p.entries().rbegin(), p.entries().rend());
  std::vector<LineType> out;
  LineType current{std::vector<std::int64_t>(static_cast<std::size_t>(d) + 1, 0)};

  auto recurse = [&](auto&& self, std::size_t level, std::int64_t remaining) -> void {
    if (level == present.size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const auto [k, t] = present[level];
    const std::int64_t cap = std::min<std::int64_t>(t, remaining / (k - 1));
    for (std::int64_t v = 0; v <= cap; ++v) {
      current.nu[static_cast<std::size_t>(k)] = v;
      self(self, level + 1, remaining - v * (k - 1));
    }
    current.nu[static_cast<std::size_t>(k)] = 0;
  };
  recurse(recurse, 0, d - 1);
  return out;
}

FeasibilitySystem build_system(const Profile& p, const std::vector<LineType>& types) {
  FeasibilitySystem sys;
  sys.d = p.d();
  sys.types = types;
  const std::size_t n = types.size();

  sys.equalities.push_back({0, std::vector<std::int64_t>(n, 1), p.d()});
  for (const auto& [k, t] : p.entries()) {
    EqualityRow row{k, std::vector<std::int64_t>(n), k * t};
    for (std::size_t j = 0; j < n; ++j) row.coefs[j] = types[j][k];
    sys.equalities.push_back(std::move(row));
  }

  for (const auto& [m, tm] : p.entries()) {
    if (tm != 1) continue;
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n; ++j)
      if (types[j][m] == 1) support.push_back(j);
    if (support.empty()) continue;
    for (const auto& [k, tk] : p.entries()) {
      if (k == m) continue;
      InequalityRow row{m, k, support, std::vector<std::int64_t>(n, 0), tk};
      for (std::size_t j : support) row.coefs[j] = types[j][k];
      sys.inequalities.push_back(std::move(row));
    }
  }
  return sys;
}

FeasibilitySystem without_inequalities(FeasibilitySystem system) {
  system.inequalities.clear();
  return system;
}

bool FeasibilitySystem::satisfied_by(const std::vector<std::int64_t>& x) const {
  if (x.size() != num_variables()) return false;
  for (std::int64_t v : x)
    if (v < 0) return false;
  for (const auto& row : equalities)
    if (std::inner_product(row.coefs.begin(), row.coefs.end(), x.begin(), std::int64_t{0}) != row.rhs) return false;
  for (const auto& row : inequalities)
    if (std::inner_product(row.coefs.begin(), row.coefs.end(), x.begin(), std::int64_t{0}) > row.rhs) return false;
  return true;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Depth-first search over variables in a fixed order. Each equality row i
// keeps a residual r_i; with R the residual of the line-count row, the
// unassigned variables can contribute to row i anything between
// min_coef_i * R and max_coef_i * R, which bounds the current variable.
class Search {
 public:
  Search(const FeasibilitySystem& sys, const SolveOptions& opts) : sys_(sys), opts_(opts) {
    const std::size_t n = sys.num_variables();
    order_ = opts.order;
    if (order_.empty()) {
      order_.resize(n);
      std::iota(order_.begin(), order_.end(), std::size_t{0});
      std::vector<std::int64_t> key(n, 0);
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& row : sys.equalities) key[j] = std::max(key[j], row.coefs[j]);
      std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
    }
    if (order_.size() != n) throw std::invalid_argument("solve: branching order has wrong size");

    const std::size_t rows = sys.equalities.size();
    suffix_max_.assign(n + 1, std::vector<std::int64_t>(rows, 0));
    suffix_min_.assign(n + 1, std::vector<std::int64_t>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) {
      std::int64_t mx = 0;
      std::int64_t mn = std::numeric_limits<std::int64_t>::max();
      for (std::size_t pos = n; pos-- > 0;) {
        const std::int64_t c = sys.equalities[i].coefs[order_[pos]];
        mx = std::max(mx, c);
        mn = std::min(mn, c);
        suffix_max_[pos][i] = mx;
        suffix_min_[pos][i] = mn;
      }
    }
    residual_.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) residual_[i] = sys.equalities[i].rhs;
    slack_.resize(sys.inequalities.size());
    for (std::size_t i = 0; i < slack_.size(); ++i) slack_[i] = sys.inequalities[i].rhs;
    value_.assign(n, 0);
  }

  SolveResult run() {
    if (sys_.equalities.empty() || sys_.equalities[0].multiplicity != 0)
      throw std::invalid_argument("solve: first equality must be the line-count row");
    descend(0);
    result_.feasible = !result_.solutions.empty();
    return std::move(result_);
  }

 private:
  bool done() const {
    return stop_ || (opts_.mode == SolveMode::kFirst && !result_.solutions.empty());
  }

  void descend(std::size_t pos) {
    if (done()) return;
    if (opts_.node_budget != 0 && result_.nodes >= opts_.node_budget) {
      result_.budget_exhausted = true;
      stop_ = true;
      return;
    }
    ++result_.nodes;
    const std::size_t n = order_.size();
    if (pos == n) {
      for (std::int64_t r : residual_)
        if (r != 0) return;
      for (std::int64_t r : slack_)
        if (r < 0) return;
      result_.solutions.push_back(value_);
      return;
    }
    const std::size_t var = order_[pos];
    std::int64_t lo = 0;
    std::int64_t hi = residual_[0];
    // Constraint a * v <= b on the value v of `var`.
    auto restrict = [&](std::int64_t a, std::int64_t b) {
      if (a > 0) {
        hi = std::min(hi, floor_div(b, a));
      } else if (a < 0) {
        lo = std::max(lo, ceil_div(b, a));
      } else if (b < 0) {
        hi = -1;
      }
    };
    const std::int64_t count = residual_[0];
    for (std::size_t i = 0; i < residual_.size() && lo <= hi; ++i) {
      const std::int64_t c = sys_.equalities[i].coefs[var];
      const std::int64_t r = residual_[i];
      const std::int64_t mx = suffix_max_[pos + 1][i];
      const std::int64_t mn = suffix_min_[pos + 1][i];
      // r - c v <= mx (count - v)   and   r - c v >= mn (count - v)
      restrict(mx - c, mx * count - r);
      restrict(c - mn, r - mn * count);
    }
    for (std::size_t i = 0; i < slack_.size() && lo <= hi; ++i) {
      const std::int64_t c = sys_.inequalities[i].coefs[var];
      if (c > 0) hi = std::min(hi, slack_[i] / c);
    }
    for (std::int64_t v = lo; v <= hi && !done(); ++v) {
      apply(var, v);
      descend(pos + 1);
      apply(var, -v);
    }
  }

  void apply(std::size_t var, std::int64_t delta) {
    value_[var] += delta;
    for (std::size_t i = 0; i < residual_.size(); ++i) residual_[i] -= sys_.equalities[i].coefs[var] * delta;
    for (std::size_t i = 0; i < slack_.size(); ++i) slack_[i] -= sys_.inequalities[i].coefs[var] * delta;
  }

  const FeasibilitySystem& sys_;
  const SolveOptions& opts_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::int64_t>> suffix_max_;
  std::vector<std::vector<std::int64_t>> suffix_min_;
  std::vector<std::int64_t> residual_;
  std::vector<std::int64_t> slack_;
  std::vector<std::int64_t> value_;
  SolveResult result_;
  bool stop_ = false;
};

}  // namespace

SolveResult solve(const FeasibilitySystem& system, const SolveOptions& options) {
  if (system.num_variables() == 0) {
    SolveResult r;
    r.feasible = false;
    for (const auto& row : system.equalities)
      if (row.rhs != 0) return r;
    r.feasible = true;
    r.solutions.emplace_back();
    return r;
  }
  return Search(system, options).run();
}

std::string emit_lp(const FeasibilitySystem& system) {
  std::ostringstream os;
  os << "minimize value: a1\n";
  os << "subject to\n";
  const std::size_t n = system.num_variables();
  for (std::size_t i = 0; i < system.equalities.size(); ++i) {
    const auto& row = system.equalities[i];
    os << "e" << (i + 1) << ": ";
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) os << " + ";
      os << row.coefs[j] << " a" << (j + 1);
    }
    os << " = " << row.rhs << "\n";
  }
  for (const auto& row : system.inequalities) {
    os << "b" << row.unique_multiplicity << "k" << row.multiplicity << ": ";
    bool first = true;
    for (std::size_t j : row.support) {
      if (!first) os << " + ";
      first = false;
      os << row.coefs[j] << " a" << (j + 1);
    }
    os << " <= " << row.rhs << "\n";
  }
  os << "integer\n";
  for (std::size_t j = 0; j < n; ++j) os << " a" << (j + 1) << "\n";
  os << "end\n";
  return os.str();
}

}  // namespace harbourne
