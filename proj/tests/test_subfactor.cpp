#include <doctest.h>

#include <cmath>

#include "loopfusion/cli.hpp"
#include "loopfusion/errors.hpp"
#include "loopfusion/subfactor.hpp"
#include "oracles.hpp"

using namespace loopfusion;

namespace {

FusionTensor tensor(int n, int m) {
  return fusion_tensor(std::make_shared<const ModularData>(build_modular_data(n, m)));
}

}  // namespace

TEST_SUITE("subfactor") {
  TEST_CASE("index for one component is d squared") {
    for (int n = 2; n <= 4; ++n)
      for (int m = 1; m <= 4; ++m) {
        const auto md = build_modular_data(n, m);
        for (std::size_t i = 0; i < md.size(); ++i) {
          const auto r = jw_index(md, 1, md.weight(i));
          CHECK(r.dimension == doctest::Approx(md.qdims()[i]));
          CHECK(r.index == doctest::Approx(md.qdims()[i] * md.qdims()[i]));
        }
      }
  }

  TEST_CASE("level one vacuum index is a power of n") {
    for (int n = 2; n <= 5; ++n)
      for (int l = 1; l <= 4; ++l) {
        const auto r = jw_index(n, 1, l, LevelWeight::vacuum(n, 1));
        CHECK(r.index == doctest::Approx(std::pow(n, l - 1)).epsilon(1e-12));
      }
    const auto r = jw_index(2, 1, 2, LevelWeight::vacuum(2, 1));
    CHECK(std::abs(r.dimension - std::sqrt(2.0)) < 1e-12);
    CHECK(r.trace.size() == 4);
  }

  TEST_CASE("S2 x S1") {
    for (int n = 2; n <= 5; ++n) CHECK(tau_s2_x_s1(n, 1) == doctest::Approx(std::sqrt(n)));
    CHECK(tau_s2_x_s1(2, 2) == doctest::Approx(2.0));
    for (int n = 2; n <= 3; ++n)
      for (int m = 1; m <= 4; ++m)
        CHECK(jw_index(n, m, 2, LevelWeight::vacuum(n, m)).dimension == doctest::Approx(tau_s2_x_s1(n, m)));
  }

  TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(jw_index(2, 1, 0, LevelWeight::vacuum(2, 1)), ArgumentError);
    CHECK_THROWS_AS(jw_index(2, 1, 2, LevelWeight(2, 2, {1})), ArgumentError);
    CHECK_THROWS_AS(rho_bar_rho(tensor(2, 1), 0), ArgumentError);
    Limits tight;
    tight.max_tuples = 100;
    CHECK_THROWS_AS(dual_principal_graph(tensor(3, 2), 3, tight), ResourceError);
    CHECK_THROWS_AS(rho_bar_rho(tensor(3, 2), 4, tight), ResourceError);
  }

  TEST_CASE("rho-bar rho decomposition") {
    const auto N = tensor(2, 2);
    const auto one = rho_bar_rho(N, 1);
    CHECK(one == SectorVector::vacuum(2, 2, 1));

    const auto two = rho_bar_rho(tensor(3, 2), 2);
    const auto& md = build_modular_data(3, 2);
    CHECK(two.terms().size() == md.size());
    for (const auto& w : md.basis()) CHECK(two.multiplicity({w, conjugate(w)}) == 1);

    // brute force over all 27 tuples of SU(2) level 2
    const auto three = rho_bar_rho(N, 3);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c) {
          int expected = 0;
          for (int x = 0; x <= 2; ++x) expected += oracle::su2_fusion(2, a, b, x) * oracle::su2_fusion(2, x, c, 0);
          CHECK(three.multiplicity({LevelWeight(2, 2, {a}), LevelWeight(2, 2, {b}), LevelWeight(2, 2, {c})}) ==
                expected);
        }
    CHECK(three.multiplicity({LevelWeight(2, 2, {1}), LevelWeight(2, 2, {1}), LevelWeight(2, 2, {2})}) == 1);
  }

  TEST_CASE("rho-bar rho dimension") {
    for (int n = 2; n <= 3; ++n)
      for (int m = 1; m <= 3; ++m)
        for (int l = 1; l <= 3; ++l) {
          const auto N = tensor(n, m);
          const double target = std::pow(N.modular_data().s00(), -(2 * l - 2));
          CHECK(total_dimension(rho_bar_rho(N, l), N.modular_data()) == doctest::Approx(target).epsilon(1e-10));
        }
  }

  TEST_CASE("principal graph of SU(2) level 1, two components") {
    const auto g = dual_principal_graph(tensor(2, 1), 2);
    const LevelWeight a(2, 1, {0}), b(2, 1, {1});
    REQUIRE(g.even.size() == 2);
    CHECK(g.even[0] == SectorVector::Tuple{a, a});
    CHECK(g.even[1] == SectorVector::Tuple{b, b});
    CHECK(g.odd.size() == 2);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0] == PrincipalGraph::Edge{0, 0, 1});
    CHECK(g.edges[1] == PrincipalGraph::Edge{1, 0, 1});
    CHECK(odd_vertex_reachable(g) == std::vector<bool>{true, false});
  }

  TEST_CASE("level one graphs match the group ring") {
    for (int n = 2; n <= 4; ++n)
      for (int l = 1; l <= 3; ++l) {
        CAPTURE(n);
        CAPTURE(l);
        CHECK(to_dot(dual_principal_graph(tensor(n, 1), l)) == oracle::zn_principal_graph_dot(n, l));
      }
  }

  TEST_CASE("graph invariants") {
    for (int n = 2; n <= 3; ++n)
      for (int m = 1; m <= 2; ++m)
        for (int l = 1; l <= 3; ++l) {
          const auto N = tensor(n, m);
          const auto g = dual_principal_graph(N, l);
          for (const auto& c : verify_principal_graph(g, N.modular_data())) {
            CAPTURE(c.name);
            CHECK(c.pass);
          }
        }
    const auto g = dual_principal_graph(tensor(2, 3), 1);
    REQUIRE(g.even.size() == 1);
    CHECK(g.edges.size() == 1);
  }

  TEST_CASE("conformal inclusions") {
    for (int n = 2; n <= 4; ++n)
      for (int l = 1; l <= 3; ++l)
        CHECK(conformal_inclusion_index(Inclusion::U1xSUn_in_Un, 1, n, l) == doctest::Approx(std::pow(n, l)));
    const double s = build_modular_data(2, 2).s00();
    CHECK(s * s == doctest::Approx(0.25));
    CHECK(conformal_inclusion_index(Inclusion::SUmxSUn_in_SUmn, 2, 2, 2) == doctest::Approx(4.0));
    for (int m = 2; m <= 3; ++m)
      for (int n = 2; n <= 3; ++n) {
        const double low = build_modular_data(n, m).s00();
        CHECK(conformal_inclusion_index(Inclusion::SUmxSUn_in_SUmn, m, n, 1) == doctest::Approx(1 / (n * low * low)));
      }
    CHECK_THROWS_AS(conformal_inclusion_index(Inclusion::SUmxSUn_in_SUmn, 1, 2, 1), ArgumentError);
  }

  TEST_CASE("index factorization") {
    for (int m = 2; m <= 4; ++m)
      for (int n = 2; n <= 4; ++n)
        for (int l = 1; l <= 3; ++l) {
          const auto r = verify_index_factorization(m, n, l);
          CHECK(r.pass);
          CHECK(r.factorization_residual < 1e-8);
        }
  }
}
