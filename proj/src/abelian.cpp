#include "loopfusion/abelian.hpp"

#include <cmath>
#include <numbers>

#include "loopfusion/errors.hpp"

namespace loopfusion {

namespace {

Complex unit_phase(const Rational& turns) {
  return std::polar(1.0, 2.0 * std::numbers::pi * to_double(frac(turns)));
}

long mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

AbelianModel::AbelianModel(int n) : n_(n) {
  if (n < 1) throw ArgumentError("U(1) level must be >= 1, got " + std::to_string(n));
  twists_.reserve(n);
  for (int j = 0; j < n; ++j) twists_.push_back(twist(j));
  table_.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) table_.push_back(monodromy(j, k));
}

Rational AbelianModel::conformal_weight(long j) const { return Rational(j * j, 2L * n_); }

Complex AbelianModel::twist(long j) const { return unit_phase(conformal_weight(j)); }

Complex AbelianModel::monodromy(long j, long k) const {
  // Reduce jk first so the phase is taken from an exact residue.
  return unit_phase(Rational(mod(j * k, n_), n_));
}

AbelianModel build_abelian(int n) {
  AbelianModel model(n);
  for (const auto& c : verify_abelian(model))
    if (!c.pass) throw ConsistencyError("U(1) model at level " + std::to_string(n) + " fails " + c.name);
  return model;
}

bool monodromy_identity_exact(const AbelianModel& model, long j, long k) {
  const Rational lhs = model.conformal_weight(j + k) - model.conformal_weight(j) - model.conformal_weight(k);
  return frac(lhs) == frac(Rational(j * k, model.order()));
}

int reduced_label_sign(const AbelianModel& model, int j, int k) {
  const int n = model.order();
  const Rational diff = model.conformal_weight((j + k) % n) - model.conformal_weight(j) -
                        model.conformal_weight(k) - Rational(static_cast<long>(j) * k, n);
  const Rational f = frac(diff);
  if (f == Rational(0)) return 1;
  if (f == Rational(1, 2)) return -1;
  throw ConsistencyError("reduced monodromy differs by a phase other than a sign");
}

std::optional<int> nondegeneracy_witness(const AbelianModel& model, int k) {
  const int n = model.order();
  for (int j = 0; j < n; ++j)
    if (mod(static_cast<long>(j) * k, n) != 0) return j;
  return std::nullopt;
}

AbelianIndex abelian_disconnected_index(int n, int components) {
  if (n < 1) throw ArgumentError("U(1) level must be >= 1");
  if (components < 1) throw ArgumentError("number of components must be >= 1");
  const double bound = std::pow(static_cast<double>(n), (components - 1) / 2.0);
  return AbelianIndex{n, components, bound, bound, n % 2 == 0};
}

std::vector<Check> verify_abelian(const AbelianModel& model, const Tolerances& tol) {
  const int n = model.order();
  double identity_failures = 0, numeric = 0, bichar = 0, nondeg = 0, modulus = 0;
  for (int j = 0; j < n; ++j) {
    modulus = std::max(modulus, std::abs(std::abs(model.twist(j)) - 1.0));
    for (int k = 0; k < n; ++k) {
      if (!monodromy_identity_exact(model, j, k)) identity_failures += 1;
      const Complex via_twists = model.twist(j + k) / (model.twist(j) * model.twist(k));
      numeric = std::max(numeric, std::abs(via_twists - model.monodromy(j, k)));
      for (int k2 = 0; k2 < n; ++k2)
        bichar = std::max(bichar, std::abs(model.monodromy(j, k + k2) -
                                           model.monodromy(j, k) * model.monodromy(j, k2)));
    }
  }
  for (int k = 0; k < n; ++k) {
    const bool has_witness = nondegeneracy_witness(model, k).has_value();
    if (has_witness == (k == 0)) nondeg += 1;
  }
  return {make_check("monodromy_twist_identity_exact", identity_failures, 0.5),
          make_check("monodromy_twist_identity_numeric", numeric, tol.unitarity),
          make_check("monodromy_bicharacter", bichar, tol.unitarity),
          make_check("monodromy_nondegenerate", nondeg, 0.5),
          make_check("twists_unimodular", modulus, tol.unitarity)};
}

double level_one_monodromy_residual(const ModularData& md, const AbelianModel& model) {
  if (md.level() != 1 || md.rank() != model.order())
    throw ArgumentError("level_one_monodromy_residual needs SU(n)_1 data and the level-n U(1) model");
  const int n = md.rank();
  const auto current = [&](int i) { return rotate(LevelWeight::vacuum(n, 1), i); };
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex su = monodromy_scalar(md, current(i), current(j), current(i + j));
      worst = std::max(worst, std::abs(su - std::conj(model.monodromy(i, j))));
    }
  return worst;
}

}  // namespace loopfusion
