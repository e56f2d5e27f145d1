#include "loopfusion/level_rank.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "loopfusion/errors.hpp"

namespace loopfusion {

namespace {

void require_strictly_decreasing(const std::vector<int>& seq, const char* name) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] >= seq[i - 1])
      throw ConsistencyError(std::string("beta: sequence ") + name + " is not strictly decreasing");
}

}  // namespace

LevelWeight beta(const LevelWeight& upper, BetaTrace* trace) {
  const int m = upper.rank();
  const int n = upper.level();
  if (n < 2) throw ArgumentError("level-rank duality needs the dual rank (= level) to be >= 2");
  const ExtendedLabels ext = upper.extended();

  // r_j = k_j + ... + k_{m-1} + k_0 for j = 1..m.
  BetaTrace t;
  t.r.resize(m);
  int tail = ext.k[0];
  t.r[m - 1] = tail;
  for (int j = m - 1; j >= 1; --j) {
    tail += ext.k[j];
    t.r[j - 1] = tail;
  }
  require_strictly_decreasing(t.r, "r");
  if (t.r.front() != m + n || t.r.back() < 1) throw ConsistencyError("beta: r sequence out of range");

  std::vector<bool> taken(m + n + 1, false);
  for (int v : t.r) taken[v] = true;
  for (int v = m + n; v >= 1; --v)
    if (!taken[v]) t.complement.push_back(v);
  if (static_cast<int>(t.complement.size()) != n) throw ConsistencyError("beta: complement has wrong size");

  // s_j = m + n + cbar_n - cbar_{n-j+1}
  t.s.resize(n);
  for (int j = 1; j <= n; ++j) t.s[j - 1] = m + n + t.complement[n - 1] - t.complement[n - j];
  require_strictly_decreasing(t.s, "s");
  if (t.s.front() != m + n || t.s.back() < 1) throw ConsistencyError("beta: s sequence out of range");

  ExtendedLabels lower;
  lower.k.resize(n);
  for (int j = 1; j < n; ++j) lower.k[j] = t.s[j - 1] - t.s[j];
  lower.k[0] = t.s[n - 1];
  if (trace) *trace = t;
  return LevelWeight::from_extended(n, m, lower);
}

int box_count(const LevelWeight& w) {
  int boxes = 0;
  for (int p : partition(w)) boxes += p;
  return boxes;
}

LevelWeight transpose_diagram(const LevelWeight& upper) {
  const int n = upper.level();
  const std::vector<int> rows = partition(upper);
  // column heights t_1 .. t_n of the diagram
  std::vector<int> cols(n + 1, 0);
  for (int j = 1; j <= n; ++j)
    for (int r : rows)
      if (r >= j) ++cols[j - 1];
  std::vector<int> labels(n - 1);
  for (int j = 0; j < n - 1; ++j) labels[j] = cols[j] - cols[j + 1];
  return LevelWeight(n, upper.rank(), std::move(labels));
}

std::vector<LevelWeight> q0_set(int m, int n) {
  if (m < 2 || n < 2) throw ArgumentError("level-rank duality needs m, n >= 2");
  std::vector<LevelWeight> out;
  for (auto& w : enumerate_weights(m, n))
    if (congruence_class(w) == 0) out.push_back(std::move(w));
  return out;
}

SigmaResolution resolve_sigma(const LevelWeight& upper, const ModularData& upper_md,
                              const ModularData& lower_md, double tolerance) {
  const int m = upper.rank();
  const int n = upper.level();
  if (congruence_class(upper) != 0)
    throw ArgumentError("resolve_sigma: " + upper.to_string() + " is not in the root-lattice class");
  const LevelWeight base = beta(upper);
  const Rational h_up = conformal_weight(upper);
  const double s_up = upper_md.vacuum_row(upper_md.index_of(upper));
  const double ratio = std::sqrt(static_cast<double>(n) / m);

  const LevelWeight by_diagram = rotate(transpose_diagram(upper), -box_count(upper) / m);

  std::set<LevelWeight> admissible;
  for (int sigma = 0; sigma < n; ++sigma) {
    LevelWeight cand = rotate(base, sigma);
    if (frac(h_up + conformal_weight(cand)) != Rational(0)) continue;
    const double s_low = lower_md.vacuum_row(lower_md.index_of(cand));
    if (std::abs(s_up - ratio * s_low) >= tolerance)
      throw ConsistencyError("resolve_sigma: " + upper.to_string() + " -> " + cand.to_string() +
                             " has integral h-sum but violates the S identity");
    admissible.insert(cand);
  }
  if (admissible.empty())
    throw ConsistencyError("resolve_sigma: no rotation of beta(" + upper.to_string() + ") = " +
                           base.to_string() + " gives an integral conformal weight sum");
  if (!admissible.contains(by_diagram))
    throw ConsistencyError("resolve_sigma: transposed diagram partner " + by_diagram.to_string() + " of " +
                           upper.to_string() + " is not admissible");
  for (int sigma = 0; sigma < n; ++sigma)
    if (rotate(base, sigma) == by_diagram) return SigmaResolution{sigma, by_diagram};
  throw ConsistencyError("resolve_sigma: unreachable");
}

BranchingTable branching_table(const ModularData& upper_md, const ModularData& lower_md) {
  const int m = upper_md.rank();
  const int n = upper_md.level();
  if (lower_md.rank() != n || lower_md.level() != m)
    throw ArgumentError("branching_table: modular data are not a level-rank pair");
  BranchingTable table{m, n, {}};
  std::set<LevelWeight> seen;
  for (const auto& up : q0_set(m, n)) {
    SigmaResolution res = resolve_sigma(up, upper_md, lower_md);
    if (!seen.insert(res.lower).second)
      throw ConsistencyError("branching_table: " + res.lower.to_string() + " appears twice");
    const Rational h_up = conformal_weight(up);
    const Rational h_low = conformal_weight(res.lower);
    table.rows.push_back({up, res.lower, res.sigma, h_up, h_low});
  }
  return table;
}

BranchingTable branching_table(int m, int n, const Limits& limits) {
  const ModularData upper = build_modular_data(m, n, limits);
  const ModularData lower = build_modular_data(n, m, limits);
  return branching_table(upper, lower);
}

double vacuum_branching_covariance(const BranchingTable& table, const ModularData& upper_md,
                                   const ModularData& lower_md) {
  std::vector<std::size_t> up_rows, low_rows;
  for (const auto& row : table.rows) {
    up_rows.push_back(upper_md.index_of(row.upper));
    low_rows.push_back(lower_md.index_of(row.lower));
  }
  const double scale = std::sqrt(static_cast<double>(table.m) * table.n);
  double worst = 0.0;
  for (std::size_t x = 0; x < upper_md.size(); ++x)
    for (std::size_t y = 0; y < lower_md.size(); ++y) {
      Complex acc{0.0, 0.0};
      for (std::size_t r = 0; r < up_rows.size(); ++r) acc += upper_md.s(up_rows[r], x) * lower_md.s(low_rows[r], y);
      acc *= scale;
      const double rounded = std::max(0.0, std::round(acc.real()));
      worst = std::max(worst, std::abs(acc - Complex(rounded, 0.0)));
    }
  return worst;
}

LevelRankReport verify_level_rank(const BranchingTable& table, const ModularData& upper_md,
                                  const ModularData& lower_md, const Tolerances& tol) {
  LevelRankReport rep{table.m, table.n, 0.0, 0.0, 0.0, 0.0, false};
  const double ratio = std::sqrt(static_cast<double>(table.n) / table.m);
  for (const auto& row : table.rows) {
    const double s_up = upper_md.vacuum_row(upper_md.index_of(row.upper));
    const double s_low = lower_md.vacuum_row(lower_md.index_of(row.lower));
    rep.sum_upper_s_squared += s_up * s_up;
    rep.s_identity_residual = std::max(rep.s_identity_residual, std::abs(s_up - ratio * s_low));
  }
  rep.sum_rule_residual = std::abs(rep.sum_upper_s_squared - 1.0 / table.m);
  rep.covariance_residual = vacuum_branching_covariance(table, upper_md, lower_md);
  rep.pass = rep.sum_rule_residual < tol.identity && rep.s_identity_residual < tol.identity &&
             rep.covariance_residual < tol.identity;
  return rep;
}

LevelRankReport verify_level_rank(int m, int n, const Tolerances& tol, const Limits& limits) {
  const ModularData upper = build_modular_data(m, n, limits);
  const ModularData lower = build_modular_data(n, m, limits);
  return verify_level_rank(branching_table(upper, lower), upper, lower, tol);
}

std::vector<Check> level_rank_checks(const LevelRankReport& report, const Tolerances& tol) {
  return {make_check("q0_sum_of_squares_is_inverse_m", report.sum_rule_residual, tol.identity),
          make_check("s_vacuum_row_level_rank_identity", report.s_identity_residual, tol.identity),
          make_check("vacuum_branching_modular_covariance", report.covariance_residual, tol.identity)};
}

}  // namespace loopfusion
