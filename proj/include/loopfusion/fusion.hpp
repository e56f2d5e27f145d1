#pragma once

// Verlinde fusion ring Gr_m of SU(n) at level m, its l-fold tensor power and
// the multipoint (genus-0) invariants built from it.

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "loopfusion/checks.hpp"
#include "loopfusion/limits.hpp"
#include "loopfusion/modular_data.hpp"

namespace loopfusion {

class FusionTensor {
 public:
  struct Channel {
    std::size_t index;
    int multiplicity;
  };

  FusionTensor(std::shared_ptr<const ModularData> md, std::vector<int> coefficients);

  const ModularData& modular_data() const { return *md_; }
  std::shared_ptr<const ModularData> modular_data_ptr() const { return md_; }
  std::size_t size() const { return dim_; }

  // N_{lambda mu}^nu by basis index.
  int operator()(std::size_t lambda, std::size_t mu, std::size_t nu) const {
    return n_[(lambda * dim_ + mu) * dim_ + nu];
  }
  int coefficient(const LevelWeight& lambda, const LevelWeight& mu, const LevelWeight& nu) const;

  // Nonzero channels of lambda x mu, in basis order.
  const std::vector<Channel>& product(std::size_t lambda, std::size_t mu) const {
    return channels_[lambda * dim_ + mu];
  }

 private:
  std::shared_ptr<const ModularData> md_;
  std::size_t dim_;
  std::vector<int> n_;
  std::vector<std::vector<Channel>> channels_;
};

// Verlinde sum, rounded. Throws ConsistencyError naming the triple if an
// entry is farther than tol.integrality from a non-negative integer, or if
// commutativity, the vacuum unit or the conjugation symmetry fails.
FusionTensor fusion_tensor(std::shared_ptr<const ModularData> md, const Tolerances& tol = {});

// Largest distance of a raw Verlinde entry from its rounded value.
double verlinde_integrality_residual(const ModularData& md);

// Exhaustive sum_s N_{lm}^s N_{sg}^d == sum_s N_{mg}^s N_{ls}^d. O(dim^5).
bool is_associative(const FusionTensor& n);

// Element of Gr_m^{(x) l}: a finitely supported non-negative integer
// combination of l-tuples of weights.
class SectorVector {
 public:
  using Tuple = std::vector<LevelWeight>;

  explicit SectorVector(std::size_t arity) : arity_(arity) {}
  static SectorVector basis_element(Tuple tuple, std::int64_t multiplicity = 1);
  static SectorVector vacuum(int rank, int level, std::size_t arity);

  std::size_t arity() const { return arity_; }
  const std::map<Tuple, std::int64_t>& terms() const { return terms_; }
  std::int64_t multiplicity(const Tuple& t) const;
  bool empty() const { return terms_.empty(); }

  // Adds to the multiplicity of t. Throws ArgumentError on arity or context
  // mismatch; a zero amount is ignored.
  void add(const Tuple& t, std::int64_t amount);

  friend bool operator==(const SectorVector&, const SectorVector&) = default;

 private:
  std::size_t arity_;
  std::map<Tuple, std::int64_t> terms_;
};

// Slotwise fusion product, extended bilinearly.
SectorVector multiply(const SectorVector& a, const SectorVector& b, const FusionTensor& n);
SectorVector conjugate_sector(const SectorVector& a);

// Vector over nu of N^nu_{l1 ... lk}: the product folded left to right.
std::vector<std::int64_t> fold_product(const FusionTensor& n, const std::vector<std::size_t>& slots);

// Coefficient of the vacuum in l1 * l2 * ... * lk.
std::int64_t multipoint_invariant(const FusionTensor& n, const std::vector<LevelWeight>& weights);

// sum_delta prod_i S_{l_i delta} / S_{0 delta}^{k-2}, the direct genus-0
// Verlinde evaluation of the same number (unrounded).
Complex genus0_verlinde(const ModularData& md, const std::vector<std::size_t>& slots);

// sum over l-tuples of N^1 * prod d. The spectral path contracts
// sum_lambda d_lambda S_{lambda delta} first and never forms tuples.
double weighted_multipoint_sum_spectral(const ModularData& md, int arity);
// Explicit enumeration over dim^arity tuples; throws ResourceError past
// limits.max_tuples.
double weighted_multipoint_sum_enumerated(const FusionTensor& n, int arity, const Limits& limits = {});
// Spectral path for every arity, cross-checked against enumeration for
// arity <= 3 when that fits in the tuple cap.
double weighted_multipoint_sum(const FusionTensor& n, int arity, const Limits& limits = {});

std::vector<Check> verify_fusion(const FusionTensor& n, const Tolerances& tol = {});

}  // namespace loopfusion
