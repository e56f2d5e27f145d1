#pragma once

// The U(1) sector model at level n: n sectors labelled by Z_n, fusing as the
// group ring, with twists exp(2 pi i j^2 / 2n) and monodromy exp(2 pi i jk/n).

#include <complex>
#include <optional>
#include <vector>

#include "loopfusion/checks.hpp"
#include "loopfusion/modular_data.hpp"

namespace loopfusion {

class AbelianModel {
 public:
  explicit AbelianModel(int n);

  int order() const { return n_; }
  bool even() const { return n_ % 2 == 0; }

  // Conformal weight j^2 / 2n of an integer label, not reduced mod n.
  Rational conformal_weight(long j) const;
  // exp(2 pi i j^2 / 2n) for any integer label.
  Complex twist(long j) const;
  // exp(2 pi i j k / n)
  Complex monodromy(long j, long k) const;

  const std::vector<Complex>& twists() const { return twists_; }  // j = 0..n-1
  // Row-major n x n.
  const std::vector<Complex>& monodromy_table() const { return table_; }

 private:
  int n_;
  std::vector<Complex> twists_;
  std::vector<Complex> table_;
};

// Throws ArgumentError for n < 1. Verifies the model invariants on
// construction and throws ConsistencyError on failure.
AbelianModel build_abelian(int n);

// Exact: ((j+k)^2 - j^2 - k^2) / 2n == jk / n mod 1 with labels unreduced.
bool monodromy_identity_exact(const AbelianModel& model, long j, long k);

// theta_{(j+k) mod n} / (theta_j theta_k) divided by M(j, k) for reduced labels:
// +1 except for odd n when j + k wraps, where it is -1.
int reduced_label_sign(const AbelianModel& model, int j, int k);

// Smallest j with M(j, k) != 1, or nothing when k == 0 mod n.
std::optional<int> nondegeneracy_witness(const AbelianModel& model, int k);

struct AbelianIndex {
  int n;
  int components;
  double lower_bound;               // n^{(l-1)/2}
  std::optional<double> value;      // equal to the bound
  bool even_level;                  // odd levels use twisted duality
};

AbelianIndex abelian_disconnected_index(int n, int components);

// Invariant suite: exact monodromy identity, bicharacter property,
// nondegeneracy, |theta| = 1.
std::vector<Check> verify_abelian(const AbelianModel& model, const Tolerances& tol = {});

// Largest |md.monodromy(L_i, L_j -> L_{i+j}) - conj(M(i, j))| over SU(n)_1.
// The SU(n)_1 twists give exp(-2 pi i ij/n), the U(1) table read with one
// label conjugated.
double level_one_monodromy_residual(const ModularData& level_one, const AbelianModel& model);

}  // namespace loopfusion
