#include "loopfusion/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "loopfusion/errors.hpp"

namespace loopfusion {

void validate_context(int rank, int level) {
  if (rank < 2)
    throw ArgumentError("rank must be >= 2, got " + std::to_string(rank));
  if (level < 1)
    throw ArgumentError("level must be >= 1, got " + std::to_string(level));
}

LevelWeight::LevelWeight(int rank, int level, std::vector<int> labels)
    : rank_(rank), level_(level), labels_(std::move(labels)) {
  validate_context(rank, level);
  if (labels_.size() != static_cast<std::size_t>(rank - 1))
    throw ArgumentError("SU(" + std::to_string(rank) + ") weight needs " +
                        std::to_string(rank - 1) + " labels, got " +
                        std::to_string(labels_.size()));
  long sum = 0;
  for (int l : labels_) {
    if (l < 0) throw ArgumentError("negative Dynkin label in " + to_string());
    sum += l;
  }
  if (sum > level)
    throw ArgumentError("weight " + to_string() + " exceeds level " + std::to_string(level));
}

LevelWeight LevelWeight::vacuum(int rank, int level) {
  validate_context(rank, level);
  return LevelWeight(rank, level, std::vector<int>(rank - 1, 0));
}

LevelWeight LevelWeight::from_extended(int rank, int level, const ExtendedLabels& ext) {
  validate_context(rank, level);
  if (ext.k.size() != static_cast<std::size_t>(rank))
    throw ArgumentError("extended labels must have length rank");
  if (std::accumulate(ext.k.begin(), ext.k.end(), 0) != rank + level)
    throw ArgumentError("extended labels must sum to rank + level");
  std::vector<int> labels(rank - 1);
  for (int i = 1; i < rank; ++i) labels[i - 1] = ext.k[i] - 1;
  if (ext.k[0] < 1) throw ArgumentError("extended label k_0 must be >= 1");
  return LevelWeight(rank, level, std::move(labels));
}

int LevelWeight::label_sum() const { return std::accumulate(labels_.begin(), labels_.end(), 0); }

bool LevelWeight::is_vacuum() const {
  return std::all_of(labels_.begin(), labels_.end(), [](int l) { return l == 0; });
}

ExtendedLabels LevelWeight::extended() const {
  ExtendedLabels ext;
  ext.k.resize(rank_);
  ext.k[0] = level_ - label_sum() + 1;
  for (int i = 1; i < rank_; ++i) ext.k[i] = labels_[i - 1] + 1;
  return ext;
}

std::string LevelWeight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) os << ',';
    os << labels_[i];
  }
  os << ')';
  return os.str();
}

std::uint64_t weight_count(int rank, int level) {
  validate_context(rank, level);
  // C(rank-1+level, rank-1), built incrementally so each step stays integral.
  std::uint64_t c = 1;
  for (int i = 1; i < rank; ++i) c = c * static_cast<std::uint64_t>(level + i) / i;
  return c;
}

namespace {

void enumerate_into(int rank, int level, std::vector<int>& labels, std::size_t pos, int remaining,
                    std::vector<LevelWeight>& out) {
  if (pos == labels.size()) {
    out.emplace_back(rank, level, labels);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    labels[pos] = v;
    enumerate_into(rank, level, labels, pos + 1, remaining - v, out);
  }
  labels[pos] = 0;
}

}  // namespace

std::vector<LevelWeight> enumerate_weights(int rank, int level) {
  validate_context(rank, level);
  std::vector<LevelWeight> out;
  out.reserve(weight_count(rank, level));
  std::vector<int> labels(rank - 1, 0);
  enumerate_into(rank, level, labels, 0, level, out);
  return out;
}

LevelWeight conjugate(const LevelWeight& w) {
  std::vector<int> labels(w.labels().rbegin(), w.labels().rend());
  return LevelWeight(w.rank(), w.level(), std::move(labels));
}

LevelWeight rotate(const LevelWeight& w, int sigma) {
  const int n = w.rank();
  const int s = ((sigma % n) + n) % n;
  if (s == 0) return w;
  ExtendedLabels ext = w.extended();
  ExtendedLabels out;
  out.k.resize(n);
  for (int i = 0; i < n; ++i) out.k[(i + s) % n] = ext.k[i];
  return LevelWeight::from_extended(n, w.level(), out);
}

int congruence_class(const LevelWeight& w) {
  long c = 0;
  const auto labels = w.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) c += static_cast<long>(i + 1) * labels[i];
  return static_cast<int>(c % w.rank());
}

std::vector<int> partition(const LevelWeight& w) {
  // entry i holds lambda_{i+1} + ... + lambda_{n-1}
  const int n = w.rank();
  std::vector<int> p(n, 0);
  const auto labels = w.labels();
  for (int i = n - 2; i >= 0; --i) p[i] = p[i + 1] + labels[i];
  return p;
}

std::vector<int> shifted_partition(const LevelWeight& w) {
  std::vector<int> p = partition(w);
  const int n = w.rank();
  for (int i = 0; i < n; ++i) p[i] += n - 1 - i;
  return p;
}

Rational conformal_weight(const LevelWeight& w) {
  const std::int64_t n = w.rank();
  const std::vector<int> p = partition(w);
  std::int64_t sum = 0, sum_sq = 0, rho_pairing = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    sum += p[i];
    sum_sq += static_cast<std::int64_t>(p[i]) * p[i];
    rho_pairing += static_cast<std::int64_t>(p[i]) * (n - 1 - i);
  }
  // n * <lambda, lambda + 2 rho> after projecting the partition onto the
  // zero-sum hyperplane.
  const std::int64_t casimir_n = n * sum_sq - sum * sum + 2 * n * rho_pairing - n * (n - 1) * sum;
  return Rational(casimir_n, 2 * n * (n + w.level()));
}

Rational frac(const Rational& r) {
  const std::int64_t num = r.numerator(), den = r.denominator();
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return r - Rational(q);
}

}  // namespace loopfusion
