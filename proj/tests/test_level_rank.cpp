#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "loopfusion/errors.hpp"
#include "loopfusion/level_rank.hpp"

using namespace loopfusion;

namespace {

// Root lattice of SU(m) at level n: weights reached from the vacuum by
// adding simple roots (Cartan matrix rows), kept inside the alcove.
std::set<LevelWeight> root_lattice_points(int m, int n) {
  std::set<LevelWeight> seen{LevelWeight::vacuum(m, n)};
  std::vector<std::vector<int>> frontier{std::vector<int>(m - 1, 0)};
  // Walk the whole lattice box; labels in [-n-2m, n+2m] are plenty at these sizes.
  const int bound = n + 2 * m;
  std::set<std::vector<int>> visited{frontier.front()};
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < m - 1; ++i)
      for (int sign : {1, -1}) {
        auto next = cur;
        next[i] += 2 * sign;
        if (i > 0) next[i - 1] -= sign;
        if (i + 1 < m - 1) next[i + 1] -= sign;
        bool inside = true;
        for (int v : next) inside = inside && std::abs(v) <= bound;
        if (!inside || !visited.insert(next).second) continue;
        frontier.push_back(next);
        int sum = 0, neg = 0;
        for (int v : next) {
          sum += v;
          neg += v < 0;
        }
        if (neg == 0 && sum <= n) seen.insert(LevelWeight(m, n, next));
      }
  }
  return seen;
}

}  // namespace

TEST_SUITE("level_rank") {
  TEST_CASE("beta on the SU(2) level 3 vacuum") {
    BetaTrace t;
    const auto lower = beta(LevelWeight::vacuum(2, 3), &t);
    CHECK(t.r == std::vector<int>{5, 4});
    CHECK(t.complement == std::vector<int>{3, 2, 1});
    CHECK(t.s == std::vector<int>{5, 4, 3});
    CHECK(lower == LevelWeight::vacuum(3, 2));
  }

  TEST_CASE("beta sequences are strictly decreasing and start at m+n") {
    for (int m = 2; m <= 5; ++m)
      for (int n = 2; n <= 5; ++n)
        for (const auto& w : enumerate_weights(m, n)) {
          BetaTrace t;
          const auto lower = beta(w, &t);
          CHECK(lower.rank() == n);
          CHECK(lower.level() == m);
          CHECK(t.s.front() == m + n);
          CHECK(std::adjacent_find(t.s.begin(), t.s.end(), std::less_equal<>()) == t.s.end());
          CHECK(std::adjacent_find(t.r.begin(), t.r.end(), std::less_equal<>()) == t.r.end());
        }
  }

  TEST_CASE("for m = n the resolved map is an involution of Q0") {
    for (int m = 2; m <= 5; ++m) {
      CAPTURE(m);
      const auto table = branching_table(m, m);
      std::map<LevelWeight, LevelWeight> f;
      for (const auto& row : table.rows) f.emplace(row.upper, row.lower);
      for (const auto& [x, y] : f) {
        REQUIRE(f.count(y) == 1);
        CHECK(f.at(y) == x);
      }
    }
    // beta alone only lands in the right Z_n orbit: the level-n currents of
    // SU(2) level 2 both go to the vacuum before rotation.
    CHECK(beta(LevelWeight(2, 2, {2})).is_vacuum());
  }

  TEST_CASE("Q0 matches explicit root-lattice generation") {
    CHECK(q0_set(2, 2) == std::vector<LevelWeight>{LevelWeight(2, 2, {0}), LevelWeight(2, 2, {2})});
    CHECK(q0_set(2, 3) == std::vector<LevelWeight>{LevelWeight(2, 3, {0}), LevelWeight(2, 3, {2})});
    for (int m = 2; m <= 5; ++m)
      for (int n = 2; n <= 5; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        const auto q0 = q0_set(m, n);
        const auto ref = root_lattice_points(m, n);
        CHECK(std::set<LevelWeight>(q0.begin(), q0.end()) == ref);
        CHECK(q0.front().is_vacuum());
      }
  }

  TEST_CASE("transposed diagrams") {
    CHECK(box_count(LevelWeight(3, 4, {1, 2})) == 5);
    // one row of two boxes -> one column of two boxes
    CHECK(transpose_diagram(LevelWeight(2, 3, {2})) == LevelWeight(3, 2, {0, 1}));
  }

  TEST_CASE("sigma resolution") {
    const auto up = build_modular_data(2, 2), lo = build_modular_data(2, 2);
    const auto vac = resolve_sigma(LevelWeight::vacuum(2, 2), up, lo);
    CHECK(vac.sigma == 0);
    CHECK(vac.lower.is_vacuum());
    const auto r = resolve_sigma(LevelWeight(2, 2, {2}), up, lo);
    CHECK(r.lower == LevelWeight(2, 2, {2}));
    CHECK(up.vacuum_row(2) == doctest::Approx(lo.vacuum_row(lo.index_of(r.lower))));
    CHECK_THROWS_AS(resolve_sigma(LevelWeight(2, 2, {1}), up, lo), ArgumentError);
  }

  TEST_CASE("branching tables") {
    CHECK(branching_table(2, 2).rows.size() == 2);
    const auto t23 = branching_table(2, 3);
    REQUIRE(t23.rows.size() == 2);
    CHECK(t23.rows[0].lower.is_vacuum());
    CHECK(t23.rows[0].sigma == 0);
    CHECK(t23.rows[1].upper == LevelWeight(2, 3, {2}));
    CHECK(t23.rows[1].lower == LevelWeight(3, 2, {1, 1}));
    CHECK(t23.rows[1].h_upper == Rational(2, 5));
    CHECK(t23.rows[1].h_lower == Rational(3, 5));
    for (const auto& row : branching_table(3, 3).rows) CHECK((row.h_upper + row.h_lower).denominator() == 1);
    CHECK_THROWS_AS(branching_table(1, 3), ArgumentError);
  }

  TEST_CASE("swapping roles transposes the table") {
    // The dual rows of (3,2) are the (2,3) rows read backwards.
    const auto a = branching_table(2, 3), b = branching_table(3, 2);
    REQUIRE(a.rows.size() == b.rows.size());
    std::set<std::pair<LevelWeight, LevelWeight>> forward, backward;
    for (const auto& r : a.rows) forward.insert({r.upper, r.lower});
    for (const auto& r : b.rows) backward.insert({r.lower, r.upper});
    CHECK(forward == backward);
  }

  TEST_CASE("identities") {
    for (int m = 2; m <= 5; ++m)
      for (int n = 2; n <= 5; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        const auto r = verify_level_rank(m, n);
        CHECK(r.pass);
        CHECK(r.sum_upper_s_squared == doctest::Approx(1.0 / m).epsilon(1e-10));
        CHECK(r.s_identity_residual < 1e-8);
        CHECK(r.covariance_residual < 1e-8);
      }
    CHECK(verify_level_rank(3, 3).sum_upper_s_squared == doctest::Approx(1.0 / 3));
    CHECK(verify_level_rank(2, 4).sum_upper_s_squared == doctest::Approx(0.5));
  }
}
