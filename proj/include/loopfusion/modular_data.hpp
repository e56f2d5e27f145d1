#pragma once

// Modular data of SU(n) at level m: the Kac-Peterson S-matrix, twists and
// quantum dimensions over the canonical weight basis.

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "loopfusion/checks.hpp"
#include "loopfusion/limits.hpp"
#include "loopfusion/weights.hpp"

namespace loopfusion {

using Complex = std::complex<double>;

// Dense row-major square matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  const Complex* row(std::size_t r) const { return data_.data() + r * dim_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

class ModularData {
 public:
  ModularData(int rank, int level, std::vector<LevelWeight> basis, ComplexMatrix s,
              std::vector<Complex> twists, std::vector<double> qdims);

  int rank() const { return rank_; }
  int level() const { return level_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<LevelWeight>& basis() const { return basis_; }
  const LevelWeight& weight(std::size_t i) const { return basis_[i]; }

  // Throws ArgumentError for a weight of another context.
  std::size_t index_of(const LevelWeight& w) const;
  // Basis index of conjugate(weight(i)).
  std::size_t dual_index(std::size_t i) const { return dual_[i]; }

  const ComplexMatrix& s() const { return s_; }
  Complex s(std::size_t i, std::size_t j) const { return s_(i, j); }
  double s00() const { return s_(0, 0).real(); }
  // S(vacuum, weight(i)), real and positive.
  double vacuum_row(std::size_t i) const { return s_(0, i).real(); }

  const std::vector<Complex>& twists() const { return twists_; }
  const std::vector<double>& qdims() const { return qdims_; }

 private:
  int rank_;
  int level_;
  std::vector<LevelWeight> basis_;
  std::map<LevelWeight, std::size_t> index_;
  std::vector<std::size_t> dual_;
  ComplexMatrix s_;
  std::vector<Complex> twists_;
  std::vector<double> qdims_;
};

// S_{lambda mu} = c * sum_{w in S_n} sign(w) exp(-2 pi i <w(lambda+rho), mu+rho> / (n+m))
// with c fixed by unitarity and a positive vacuum row. Throws ResourceError if
// the basis exceeds limits.max_basis.
ModularData build_modular_data(int rank, int level, const Limits& limits = {});

double quantum_dim(const ModularData& md, const LevelWeight& w);

// sum_lambda d_lambda^2, which equals S00^-2.
double global_index(const ModularData& md);

// theta_delta / (theta_lambda theta_gamma). Only meaningful when delta
// appears in lambda x gamma.
Complex monodromy_scalar(const ModularData& md, const LevelWeight& lambda, const LevelWeight& gamma,
                         const LevelWeight& delta);

struct ModularResiduals {
  double symmetry = 0;            // max |S - S^T|
  double unitarity = 0;           // max |S S^dagger - I|
  double charge_conjugation = 0;  // max |S^2 - C|
  double min_vacuum_row = 0;      // min_lambda S(0, lambda)
  double vacuum_row_imag = 0;     // max |Im S(0, lambda)|
  double global_index_rel = 0;    // |sum d^2 * S00^2 - 1|
  double min_qdim = 0;
  double twist_modulus = 0;       // max ||theta| - 1|
};

ModularResiduals modular_residuals(const ModularData& md);
std::vector<Check> verify_modular_data(const ModularData& md, const Tolerances& tol = {});

}  // namespace loopfusion
