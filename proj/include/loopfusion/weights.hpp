#pragma once

// Level-m dominant weights of SU(n).
//
// A weight is stored by its Dynkin labels (lambda_1 .. lambda_{n-1}) together
// with the (rank, level) it belongs to. The affine (extended) form adds
// lambda_0 = m - sum(lambda_i); the shifted form k_i = lambda_i + 1 is the
// extended form of lambda + rho and sums to n + m.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace loopfusion {

using Rational = boost::rational<std::int64_t>;

// Extended labels of lambda + rho: k_0 .. k_{n-1}, all >= 1, sum = n + m.
struct ExtendedLabels {
  std::vector<int> k;
  friend bool operator==(const ExtendedLabels&, const ExtendedLabels&) = default;
};

class LevelWeight {
 public:
  // Throws ArgumentError unless rank >= 2, level >= 1, labels.size() == rank-1,
  // every label >= 0 and sum(labels) <= level.
  LevelWeight(int rank, int level, std::vector<int> labels);

  static LevelWeight vacuum(int rank, int level);
  static LevelWeight from_extended(int rank, int level, const ExtendedLabels& ext);

  int rank() const { return rank_; }
  int level() const { return level_; }
  std::span<const int> labels() const { return labels_; }
  int label_sum() const;
  bool is_vacuum() const;
  bool same_context(const LevelWeight& other) const {
    return rank_ == other.rank_ && level_ == other.level_;
  }

  ExtendedLabels extended() const;

  // "(a,b,...)"
  std::string to_string() const;

  // Context first, then labels lexicographically.
  friend auto operator<=>(const LevelWeight&, const LevelWeight&) = default;

 private:
  int rank_;
  int level_;
  std::vector<int> labels_;
};

// Throws ArgumentError unless rank >= 2 and level >= 1.
void validate_context(int rank, int level);

// C(n-1+m, n-1).
std::uint64_t weight_count(int rank, int level);

// All level-m weights of SU(n), lexicographic on labels (vacuum first).
std::vector<LevelWeight> enumerate_weights(int rank, int level);

// Label reversal: the weight of the dual representation.
LevelWeight conjugate(const LevelWeight& w);

// Simple-current action: the coefficient of the extended fundamental weight
// i moves to (i + sigma) mod n. sigma may be any integer.
LevelWeight rotate(const LevelWeight& w, int sigma);

// (sum_i i * lambda_i) mod n; zero exactly on the root lattice.
int congruence_class(const LevelWeight& w);

// h = <lambda, lambda + 2 rho> / (2 (n + m)), long roots of length^2 2.
Rational conformal_weight(const LevelWeight& w);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Fractional part in [0, 1).
Rational frac(const Rational& r);

// Orthonormal-coordinate helpers shared with the S-matrix. partition(w)[i]
// is sum_{j > i} lambda_j for i = 0..n-1 (last entry 0); shifted_partition
// adds rho, giving sum_{j > i} (lambda_j + 1).
std::vector<int> partition(const LevelWeight& w);
std::vector<int> shifted_partition(const LevelWeight& w);

}  // namespace loopfusion
