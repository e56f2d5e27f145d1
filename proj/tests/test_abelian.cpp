#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loopfusion/abelian.hpp"
#include "loopfusion/errors.hpp"

using namespace loopfusion;

TEST_SUITE("abelian") {
  TEST_CASE("small models") {
    const auto one = build_abelian(1);
    CHECK(std::abs(one.monodromy(0, 0) - Complex(1, 0)) < 1e-15);

    const auto two = build_abelian(2);
    CHECK(std::abs(two.twist(0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(two.twist(1) - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(two.monodromy(1, 1) - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(two.monodromy(0, 1) - Complex(1, 0)) < 1e-15);

    const auto three = build_abelian(3);
    CHECK(std::abs(three.monodromy(1, 1) - std::polar(1.0, 2 * std::numbers::pi / 3)) < 1e-15);
    CHECK(three.monodromy_table().size() == 9);
    CHECK(three.twists().size() == 3);
    CHECK_THROWS_AS(build_abelian(0), ArgumentError);
  }

  TEST_CASE("monodromy identity is exact for unreduced labels") {
    for (int n = 1; n <= 24; ++n) {
      const AbelianModel model(n);
      for (long j = -n; j <= 2 * n; ++j)
        for (long k = -n; k <= 2 * n; ++k) CHECK(monodromy_identity_exact(model, j, k));
    }
  }

  TEST_CASE("reduced labels pick up a sign for odd n") {
    const AbelianModel even(4), odd(3);
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) CHECK(reduced_label_sign(even, j, k) == 1);
    CHECK(reduced_label_sign(odd, 1, 1) == 1);
    CHECK(reduced_label_sign(odd, 2, 2) == -1);
    CHECK(reduced_label_sign(odd, 1, 2) == -1);
  }

  TEST_CASE("nondegeneracy") {
    for (int n = 1; n <= 64; ++n) {
      const AbelianModel model(n);
      CHECK_FALSE(nondegeneracy_witness(model, 0).has_value());
      for (int k = 1; k < n; ++k) {
        const auto j = nondegeneracy_witness(model, k);
        REQUIRE(j.has_value());
        CHECK(std::abs(model.monodromy(*j, k) - Complex(1, 0)) > 1e-6);
      }
    }
    CHECK(nondegeneracy_witness(AbelianModel(4), 2) == 1);
    for (int k = 1; k < 5; ++k) CHECK(nondegeneracy_witness(AbelianModel(5), k) == 1);
  }

  TEST_CASE("disconnected index") {
    const auto one = abelian_disconnected_index(5, 1);
    CHECK(one.lower_bound == doctest::Approx(1.0));
    CHECK(*one.value == doctest::Approx(1.0));
    CHECK(*abelian_disconnected_index(2, 2).value == doctest::Approx(std::sqrt(2.0)));
    for (int n = 1; n <= 8; ++n)
      for (int l = 1; l <= 4; ++l) {
        const auto r = abelian_disconnected_index(n, l);
        CHECK(r.lower_bound == doctest::Approx(std::pow(n, (l - 1) / 2.0)));
        CHECK(r.even_level == (n % 2 == 0));
      }
    CHECK_THROWS_AS(abelian_disconnected_index(2, 0), ArgumentError);
  }

  TEST_CASE("agreement with SU(n) level 1") {
    for (int n = 2; n <= 5; ++n)
      CHECK(level_one_monodromy_residual(build_modular_data(n, 1), AbelianModel(n)) < 1e-12);
    CHECK_THROWS_AS(level_one_monodromy_residual(build_modular_data(3, 2), AbelianModel(3)), ArgumentError);
  }

  TEST_CASE("invariant suite") {
    for (int n = 1; n <= 32; ++n)
      for (const auto& c : verify_abelian(AbelianModel(n))) {
        CAPTURE(n);
        CAPTURE(c.name);
        CHECK(c.pass);
      }
  }
}
