#pragma once

// Level-rank duality for the conformal inclusion SU(m) x SU(n) in SU(mn):
// the map beta from level-n weights of SU(m) to level-m weights of SU(n),
// the root-lattice coset Q0, and the branching of the level-1 vacuum.
//
// Throughout, "upper" objects belong to SU(m) at level n and "lower" ones to
// SU(n) at level m.

#include <vector>

#include "loopfusion/checks.hpp"
#include "loopfusion/limits.hpp"
#include "loopfusion/modular_data.hpp"

namespace loopfusion {

// Decreasing sequences used by beta; exposed for inspection and tests.
struct BetaTrace {
  std::vector<int> r;             // r_1 > ... > r_m, r_1 = m + n
  std::vector<int> complement;    // complement of r in {1..m+n}, decreasing
  std::vector<int> s;             // s_1 > ... > s_n, s_1 = m + n
};

// SU(m) level n -> SU(n) level m. Throws ConsistencyError if a sequence
// fails to be strictly decreasing.
LevelWeight beta(const LevelWeight& upper, BetaTrace* trace = nullptr);

// Young diagram of upper, transposed and read as an SU(n) level-m weight
// (full columns of height n dropped).
LevelWeight transpose_diagram(const LevelWeight& upper);

// Number of boxes of the Young diagram, sum_i i * lambda_i.
int box_count(const LevelWeight& w);

// SU(m) level-n weights in the root-lattice class (congruence 0).
std::vector<LevelWeight> q0_set(int m, int n);

struct SigmaResolution {
  int sigma = 0;
  LevelWeight lower;
};

// Finds sigma in Z_n with lower = rotate(beta(upper), sigma) such that
// h(upper) + h(lower) is an integer and S_up(0, upper) = sqrt(n/m) S_low(0, lower).
// When gcd(m, n) > 1 these can admit several rotations; the partner is then
// the one given by the transposed diagram, rotate(transpose_diagram(upper),
// -box_count(upper) / m), which must itself pass both criteria. When the
// criteria alone are decisive the diagram rule must agree with them.
// Returns the smallest sigma reaching the partner; throws ConsistencyError
// on any disagreement.
SigmaResolution resolve_sigma(const LevelWeight& upper, const ModularData& upper_md,
                              const ModularData& lower_md, double tolerance = 1e-8);

struct BranchingRow {
  LevelWeight upper;
  LevelWeight lower;
  int sigma;
  Rational h_upper;
  Rational h_lower;
};

struct BranchingTable {
  int m;
  int n;
  std::vector<BranchingRow> rows;
};

// One row per element of Q0, invariants verified (distinct lower weights,
// integral h sums).
BranchingTable branching_table(const ModularData& upper_md, const ModularData& lower_md);
BranchingTable branching_table(int m, int n, const Limits& limits = {});

// The vacuum branching b must satisfy
//   sqrt(mn) sum_rows S_up(upper, x) S_low(lower, y) = #{level-1 sectors containing (x, y)},
// a non-negative integer for every pair (x, y). Returns the largest distance
// from a non-negative integer.
double vacuum_branching_covariance(const BranchingTable& table, const ModularData& upper_md,
                                   const ModularData& lower_md);

struct LevelRankReport {
  int m;
  int n;
  double sum_upper_s_squared;   // sum over Q0 of S_up(0, .)^2
  double sum_rule_residual;     // |sum - 1/m|
  double s_identity_residual;   // max_row |S_up - sqrt(n/m) S_low|
  double covariance_residual;   // see vacuum_branching_covariance
  bool pass;
};

LevelRankReport verify_level_rank(const BranchingTable& table, const ModularData& upper_md,
                                  const ModularData& lower_md, const Tolerances& tol = {});
LevelRankReport verify_level_rank(int m, int n, const Tolerances& tol = {}, const Limits& limits = {});

std::vector<Check> level_rank_checks(const LevelRankReport& report, const Tolerances& tol = {});

}  // namespace loopfusion
