#pragma once

#include "harbourne/profile.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace harbourne {

/// Numbers nu_k of k-fold points on one line, indexed by k (size d+1).
/// Every line meets the other d-1 lines at singular points, so
/// sum_k nu_k (k-1) = d-1.
struct LineType {
  std::vector<std::int64_t> nu;

  std::int64_t operator[](int k) const { return nu[static_cast<std::size_t>(k)]; }
  friend bool operator==(const LineType&, const LineType&) = default;
};

/// All admissible line types for `p`, ascending in (nu_d, ..., nu_2).
std::vector<LineType> enumerate_line_types(const Profile& p);

struct EqualityRow {
  int multiplicity = 0;  // 0 for the line-count row
  std::vector<std::int64_t> coefs;
  std::int64_t rhs = 0;
};

/// Rows for a unique m-fold point: lines through it carry at most t_k
/// k-fold points in total.
struct InequalityRow {
  int unique_multiplicity = 0;
  int multiplicity = 0;
  std::vector<std::size_t> support;  // variables whose type passes the unique point
  std::vector<std::int64_t> coefs;   // dense, zero outside support
  std::int64_t rhs = 0;
};

/// Nonnegative integer unknowns x_j (number of lines of type j).
struct FeasibilitySystem {
  int d = 0;
  std::vector<LineType> types;
  std::vector<EqualityRow> equalities;
  std::vector<InequalityRow> inequalities;

  std::size_t num_variables() const { return types.size(); }
  bool satisfied_by(const std::vector<std::int64_t>& x) const;
};

FeasibilitySystem build_system(const Profile& p, const std::vector<LineType>& types);
inline FeasibilitySystem build_system(const Profile& p) { return build_system(p, enumerate_line_types(p)); }

/// Equalities only; used to reproduce the unrefined count.
FeasibilitySystem without_inequalities(FeasibilitySystem system);

enum class SolveMode { kFirst, kAll };

struct SolveResult {
  bool feasible = false;
  /// Witnesses in system variable order; one in kFirst mode.
  std::vector<std::vector<std::int64_t>> solutions;
  std::uint64_t nodes = 0;
  /// Set when the node budget ran out before the search completed; the
  /// result is then inconclusive unless a solution was found.
  bool budget_exhausted = false;
};

struct SolveOptions {
  SolveMode mode = SolveMode::kFirst;
  std::uint64_t node_budget = 0;  // 0 = unlimited
  /// Explicit branching order (a permutation of variable indices); empty
  /// selects decreasing largest equality coefficient.
  std::vector<std::size_t> order;
};

SolveResult solve(const FeasibilitySystem& system, const SolveOptions& options = {});

/// The system in glpsol's CPLEX LP dialect, as produced by the original
/// Singular workflow.
std::string emit_lp(const FeasibilitySystem& system);

}  // namespace harbourne
