#include "loopfusion/modular_data.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "loopfusion/errors.hpp"

namespace loopfusion {

ModularData::ModularData(int rank, int level, std::vector<LevelWeight> basis, ComplexMatrix s,
                         std::vector<Complex> twists, std::vector<double> qdims)
    : rank_(rank),
      level_(level),
      basis_(std::move(basis)),
      s_(std::move(s)),
      twists_(std::move(twists)),
      qdims_(std::move(qdims)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  dual_.resize(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) dual_[i] = index_.at(conjugate(basis_[i]));
}

std::size_t ModularData::index_of(const LevelWeight& w) const {
  if (w.rank() != rank_ || w.level() != level_)
    throw ArgumentError("weight " + w.to_string() + " of SU(" + std::to_string(w.rank()) + ")_" +
                        std::to_string(w.level()) + " used with SU(" + std::to_string(rank_) +
                        ")_" + std::to_string(level_) + " data");
  auto it = index_.find(w);
  if (it == index_.end()) throw ArgumentError("unknown weight " + w.to_string());
  return it->second;
}

namespace {

struct SignedPermutation {
  std::vector<int> perm;
  int sign;
};

std::vector<SignedPermutation> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    out.push_back({p, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

ModularData build_modular_data(int rank, int level, const Limits& limits) {
  validate_context(rank, level);
  if (weight_count(rank, level) > limits.max_basis)
    throw ResourceError("SU(" + std::to_string(rank) + ")_" + std::to_string(level) + " has " +
                        std::to_string(weight_count(rank, level)) + " weights, above the cap of " +
                        std::to_string(limits.max_basis));

  std::vector<LevelWeight> basis = enumerate_weights(rank, level);
  const std::size_t dim = basis.size();
  const std::int64_t n = rank;
  const std::int64_t kappa = rank + level;
  const std::int64_t period = n * kappa;

  // Phases are exp(-2 pi i k / (n kappa)) for integer k; tabulate once.
  std::vector<Complex> phase(period);
  for (std::int64_t k = 0; k < period; ++k)
    phase[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(period));

  std::vector<std::vector<int>> shifted(dim);
  std::vector<std::int64_t> shifted_sum(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    shifted[i] = shifted_partition(basis[i]);
    shifted_sum[i] = std::accumulate(shifted[i].begin(), shifted[i].end(), std::int64_t{0});
  }

  const auto perms = all_permutations(rank);
  ComplexMatrix raw(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& a = shifted[i];
    for (std::size_t j = i; j < dim; ++j) {
      const auto& b = shifted[j];
      // n <x, y> on the zero-sum hyperplane is n * (x . y) - |x| |y|.
      const std::int64_t offset = shifted_sum[i] * shifted_sum[j];
      Complex acc{0.0, 0.0};
      for (const auto& sp : perms) {
        std::int64_t dot = 0;
        for (int t = 0; t < rank; ++t) dot += static_cast<std::int64_t>(a[sp.perm[t]]) * b[t];
        std::int64_t k = (n * dot - offset) % period;
        if (k < 0) k += period;
        if (sp.sign > 0)
          acc += phase[k];
        else
          acc -= phase[k];
      }
      raw(i, j) = acc;
      raw(j, i) = acc;
    }
  }

  double norm_sq = 0.0;
  for (std::size_t j = 0; j < dim; ++j) norm_sq += std::norm(raw(0, j));
  const Complex scale = std::abs(raw(0, 0)) / (raw(0, 0) * std::sqrt(norm_sq));

  ComplexMatrix s(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) s(i, j) = raw(i, j) * scale;

  std::vector<Complex> twists(dim);
  std::vector<double> qdims(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Rational h = frac(conformal_weight(basis[i]));
    twists[i] = std::polar(1.0, 2.0 * std::numbers::pi * to_double(h));
    qdims[i] = s(0, i).real() / s(0, 0).real();
  }
  return ModularData(rank, level, std::move(basis), std::move(s), std::move(twists),
                     std::move(qdims));
}

double quantum_dim(const ModularData& md, const LevelWeight& w) {
  return md.qdims()[md.index_of(w)];
}

double global_index(const ModularData& md) {
  double sum = 0.0;
  for (double d : md.qdims()) sum += d * d;
  return sum;
}

Complex monodromy_scalar(const ModularData& md, const LevelWeight& lambda, const LevelWeight& gamma,
                         const LevelWeight& delta) {
  const auto& t = md.twists();
  return t[md.index_of(delta)] / (t[md.index_of(lambda)] * t[md.index_of(gamma)]);
}

ModularResiduals modular_residuals(const ModularData& md) {
  const std::size_t dim = md.size();
  const auto& s = md.s();
  ModularResiduals r;
  r.min_vacuum_row = md.vacuum_row(0);
  r.min_qdim = md.qdims()[0];
  for (std::size_t i = 0; i < dim; ++i) {
    r.vacuum_row_imag = std::max(r.vacuum_row_imag, std::abs(s(0, i).imag()));
    r.min_vacuum_row = std::min(r.min_vacuum_row, s(0, i).real());
    r.min_qdim = std::min(r.min_qdim, md.qdims()[i]);
    r.twist_modulus = std::max(r.twist_modulus, std::abs(std::abs(md.twists()[i]) - 1.0));
    for (std::size_t j = 0; j < dim; ++j) {
      r.symmetry = std::max(r.symmetry, std::abs(s(i, j) - s(j, i)));
      Complex uu{0.0, 0.0}, sq{0.0, 0.0};
      const Complex* ri = s.row(i);
      const Complex* rj = s.row(j);
      for (std::size_t k = 0; k < dim; ++k) {
        uu += ri[k] * std::conj(rj[k]);
        sq += ri[k] * s(k, j);
      }
      const double id = i == j ? 1.0 : 0.0;
      const double cc = md.dual_index(i) == j ? 1.0 : 0.0;
      r.unitarity = std::max(r.unitarity, std::abs(uu - id));
      r.charge_conjugation = std::max(r.charge_conjugation, std::abs(sq - cc));
    }
  }
  r.global_index_rel = std::abs(global_index(md) * md.s00() * md.s00() - 1.0);
  return r;
}

std::vector<Check> verify_modular_data(const ModularData& md, const Tolerances& tol) {
  const ModularResiduals r = modular_residuals(md);
  std::vector<Check> checks;
  checks.push_back(make_check("s_symmetric", r.symmetry, tol.unitarity));
  checks.push_back(make_check("s_unitary", r.unitarity, tol.unitarity));
  checks.push_back(make_check("s_squared_is_charge_conjugation", r.charge_conjugation, tol.identity));
  checks.push_back(make_check("vacuum_row_real", r.vacuum_row_imag, tol.unitarity));
  // Positivity is reported as a margin: residual 0 when every entry is > 0.
  checks.push_back(make_check("vacuum_row_positive", r.min_vacuum_row > 0 ? 0.0 : 1.0, 0.5));
  checks.push_back(make_check("qdims_at_least_one", std::max(0.0, 1.0 - r.min_qdim), tol.identity));
  checks.push_back(make_check("twists_unimodular", r.twist_modulus, tol.unitarity));
  checks.push_back(make_check("global_index_equals_inverse_s00_squared", r.global_index_rel,
                              tol.unitarity));
  return checks;
}

}  // namespace loopfusion
