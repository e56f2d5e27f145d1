#include "loopfusion/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "loopfusion/errors.hpp"

namespace loopfusion {

namespace {

// Calls f(lambda, mu, nu, raw) for every lambda <= mu with the unrounded
// Verlinde value sum_delta S_{l d} S_{m d} conj(S_{n d}) / S_{0 d}.
template <typename F>
void for_each_verlinde(const ModularData& md, F&& f) {
  const std::size_t dim = md.size();
  const auto& s = md.s();
  std::vector<Complex> pair(dim);
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t m = l; m < dim; ++m) {
      for (std::size_t d = 0; d < dim; ++d) pair[d] = s(l, d) * s(m, d) / md.vacuum_row(d);
      for (std::size_t n = 0; n < dim; ++n) {
        const Complex* row = s.row(n);
        double re = 0.0, im = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
          // pair * conj(row)
          re += pair[d].real() * row[d].real() + pair[d].imag() * row[d].imag();
          im += pair[d].imag() * row[d].real() - pair[d].real() * row[d].imag();
        }
        f(l, m, n, Complex(re, im));
      }
    }
  }
}

std::string triple_string(const ModularData& md, std::size_t l, std::size_t m, std::size_t n) {
  return "N_{" + md.weight(l).to_string() + " " + md.weight(m).to_string() + "}^" +
         md.weight(n).to_string();
}

}  // namespace

FusionTensor::FusionTensor(std::shared_ptr<const ModularData> md, std::vector<int> coefficients)
    : md_(std::move(md)), dim_(md_->size()), n_(std::move(coefficients)) {
  if (n_.size() != dim_ * dim_ * dim_)
    throw ArgumentError("fusion coefficient array has the wrong size");
  channels_.resize(dim_ * dim_);
  for (std::size_t l = 0; l < dim_; ++l)
    for (std::size_t m = 0; m < dim_; ++m)
      for (std::size_t n = 0; n < dim_; ++n)
        if (int c = (*this)(l, m, n); c != 0) channels_[l * dim_ + m].push_back({n, c});
}

int FusionTensor::coefficient(const LevelWeight& lambda, const LevelWeight& mu,
                              const LevelWeight& nu) const {
  return (*this)(md_->index_of(lambda), md_->index_of(mu), md_->index_of(nu));
}

FusionTensor fusion_tensor(std::shared_ptr<const ModularData> md, const Tolerances& tol) {
  const std::size_t dim = md->size();
  std::vector<int> coeff(dim * dim * dim, 0);
  for_each_verlinde(*md, [&](std::size_t l, std::size_t m, std::size_t n, Complex raw) {
    const double rounded = std::round(raw.real());
    if (std::abs(raw - Complex(rounded, 0.0)) >= tol.integrality || rounded < 0) {
      std::ostringstream os;
      os << "Verlinde sum not a non-negative integer: " << triple_string(*md, l, m, n) << " = "
         << raw.real() << (raw.imag() < 0 ? " - " : " + ") << std::abs(raw.imag()) << "i";
      throw ConsistencyError(os.str());
    }
    const int v = static_cast<int>(rounded);
    coeff[(l * dim + m) * dim + n] = v;
    coeff[(m * dim + l) * dim + n] = v;
  });

  FusionTensor tensor(md, std::move(coeff));
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t m = 0; m < dim; ++m) {
      for (std::size_t n = 0; n < dim; ++n) {
        const int v = tensor(l, m, n);
        if (tensor(0, m, n) != (m == n ? 1 : 0))
          throw ConsistencyError("vacuum is not the fusion unit at " + triple_string(*md, 0, m, n));
        // N_{l m n*} is totally symmetric: N_{lm}^n = N_{l n*}^{m*}.
        if (v != tensor(l, md->dual_index(n), md->dual_index(m)))
          throw ConsistencyError("conjugation symmetry fails at " + triple_string(*md, l, m, n));
      }
    }
  }
  return tensor;
}

double verlinde_integrality_residual(const ModularData& md) {
  double worst = 0.0;
  for_each_verlinde(md, [&](std::size_t, std::size_t, std::size_t, Complex raw) {
    const double rounded = std::max(0.0, std::round(raw.real()));
    worst = std::max(worst, std::abs(raw - Complex(rounded, 0.0)));
  });
  return worst;
}

bool is_associative(const FusionTensor& t) {
  const std::size_t dim = t.size();
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t m = 0; m < dim; ++m)
      for (std::size_t g = 0; g < dim; ++g)
        for (std::size_t d = 0; d < dim; ++d) {
          long left = 0, right = 0;
          for (const auto& c : t.product(l, m)) left += static_cast<long>(c.multiplicity) * t(c.index, g, d);
          for (const auto& c : t.product(m, g)) right += static_cast<long>(c.multiplicity) * t(l, c.index, d);
          if (left != right) return false;
        }
  return true;
}

// ---------------------------------------------------------------------------
// SectorVector

SectorVector SectorVector::basis_element(Tuple tuple, std::int64_t multiplicity) {
  if (tuple.empty()) throw ArgumentError("sector tuples need arity >= 1");
  SectorVector v(tuple.size());
  v.add(tuple, multiplicity);
  return v;
}

SectorVector SectorVector::vacuum(int rank, int level, std::size_t arity) {
  if (arity == 0) throw ArgumentError("sector tuples need arity >= 1");
  return basis_element(Tuple(arity, LevelWeight::vacuum(rank, level)));
}

std::int64_t SectorVector::multiplicity(const Tuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

void SectorVector::add(const Tuple& t, std::int64_t amount) {
  if (t.size() != arity_)
    throw ArgumentError("tuple of arity " + std::to_string(t.size()) + " added to a sector vector of arity " +
                        std::to_string(arity_));
  for (const auto& w : t)
    if (!w.same_context(t.front())) throw ArgumentError("tuple mixes weights of different levels or ranks");
  if (!terms_.empty() && !terms_.begin()->first.front().same_context(t.front()))
    throw ArgumentError("sector vector mixes weights of different levels or ranks");
  if (amount == 0) return;
  std::int64_t& slot = terms_[t];
  slot += amount;
  if (slot < 0) throw ArgumentError("negative multiplicity in sector vector");
  if (slot == 0) terms_.erase(t);
}

SectorVector multiply(const SectorVector& a, const SectorVector& b, const FusionTensor& n) {
  if (a.arity() != b.arity())
    throw ArgumentError("cannot multiply sector vectors of arity " + std::to_string(a.arity()) + " and " +
                        std::to_string(b.arity()));
  const ModularData& md = n.modular_data();
  const std::size_t arity = a.arity();
  SectorVector out(arity);
  std::vector<const std::vector<FusionTensor::Channel>*> slots(arity);
  std::vector<std::size_t> cursor(arity);
  SectorVector::Tuple tuple;
  for (const auto& [ta, ma] : a.terms()) {
    for (const auto& [tb, mb] : b.terms()) {
      bool empty = false;
      for (std::size_t i = 0; i < arity; ++i) {
        slots[i] = &n.product(md.index_of(ta[i]), md.index_of(tb[i]));
        empty = empty || slots[i]->empty();
      }
      if (empty) continue;
      // Odometer over the cartesian product of per-slot channels.
      std::fill(cursor.begin(), cursor.end(), 0);
      while (true) {
        tuple.clear();
        std::int64_t mult = ma * mb;
        for (std::size_t i = 0; i < arity; ++i) {
          const auto& c = (*slots[i])[cursor[i]];
          tuple.push_back(md.weight(c.index));
          mult *= c.multiplicity;
        }
        out.add(tuple, mult);
        std::size_t i = 0;
        while (i < arity && ++cursor[i] == slots[i]->size()) cursor[i++] = 0;
        if (i == arity) break;
      }
    }
  }
  return out;
}

SectorVector conjugate_sector(const SectorVector& a) {
  SectorVector out(a.arity());
  SectorVector::Tuple tuple;
  for (const auto& [t, mult] : a.terms()) {
    tuple.clear();
    for (const auto& w : t) tuple.push_back(conjugate(w));
    out.add(tuple, mult);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multipoint invariants

std::vector<std::int64_t> fold_product(const FusionTensor& n, const std::vector<std::size_t>& slots) {
  const std::size_t dim = n.size();
  std::vector<std::int64_t> acc(dim, 0), next(dim);
  acc[0] = 1;  // empty product is the vacuum
  for (std::size_t w : slots) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t k = 0; k < dim; ++k) {
      if (acc[k] == 0) continue;
      for (const auto& c : n.product(k, w)) next[c.index] += acc[k] * c.multiplicity;
    }
    acc.swap(next);
  }
  return acc;
}

std::int64_t multipoint_invariant(const FusionTensor& n, const std::vector<LevelWeight>& weights) {
  std::vector<std::size_t> slots;
  for (const auto& w : weights) slots.push_back(n.modular_data().index_of(w));
  return fold_product(n, slots)[0];
}

Complex genus0_verlinde(const ModularData& md, const std::vector<std::size_t>& slots) {
  const int k = static_cast<int>(slots.size());
  Complex sum{0.0, 0.0};
  for (std::size_t d = 0; d < md.size(); ++d) {
    Complex term = std::pow(md.vacuum_row(d), 2 - k);
    for (std::size_t w : slots) term *= md.s(w, d);
    sum += term;
  }
  return sum;
}

double weighted_multipoint_sum_spectral(const ModularData& md, int arity) {
  if (arity < 1) throw ArgumentError("arity must be >= 1");
  const std::size_t dim = md.size();
  Complex sum{0.0, 0.0};
  for (std::size_t d = 0; d < dim; ++d) {
    Complex contracted{0.0, 0.0};
    for (std::size_t l = 0; l < dim; ++l) contracted += md.qdims()[l] * md.s(l, d);
    sum += std::pow(contracted, arity) * std::pow(md.vacuum_row(d), 2 - arity);
  }
  return sum.real();
}

double weighted_multipoint_sum_enumerated(const FusionTensor& n, int arity, const Limits& limits) {
  if (arity < 1) throw ArgumentError("arity must be >= 1");
  const std::size_t dim = n.size();
  double tuples = std::pow(static_cast<double>(dim), arity);
  if (tuples > static_cast<double>(limits.max_tuples))
    throw ResourceError("enumerating " + std::to_string(static_cast<unsigned long long>(tuples)) +
                        " tuples exceeds the cap of " + std::to_string(limits.max_tuples));
  const auto& d = n.modular_data().qdims();
  std::vector<std::size_t> slots(arity, 0);
  double sum = 0.0;
  while (true) {
    const std::int64_t n1 = fold_product(n, slots)[0];
    if (n1 != 0) {
      double prod = static_cast<double>(n1);
      for (std::size_t w : slots) prod *= d[w];
      sum += prod;
    }
    int i = 0;
    while (i < arity && ++slots[i] == dim) slots[i++] = 0;
    if (i == arity) break;
  }
  return sum;
}

double weighted_multipoint_sum(const FusionTensor& n, int arity, const Limits& limits) {
  const double spectral = weighted_multipoint_sum_spectral(n.modular_data(), arity);
  if (arity <= 3 && std::pow(static_cast<double>(n.size()), arity) <= static_cast<double>(limits.max_tuples)) {
    const double enumerated = weighted_multipoint_sum_enumerated(n, arity, limits);
    if (std::abs(enumerated - spectral) > 1e-8 * std::abs(spectral))
      throw ConsistencyError("multipoint sum: spectral " + std::to_string(spectral) + " vs enumerated " +
                             std::to_string(enumerated));
  }
  return spectral;
}

std::vector<Check> verify_fusion(const FusionTensor& t, const Tolerances& tol) {
  const ModularData& md = t.modular_data();
  const std::size_t dim = t.size();
  std::vector<Check> checks;
  checks.push_back(make_check("verlinde_integrality", verlinde_integrality_residual(md), tol.integrality));

  double commut = 0, unit = 0, conj = 0, homomorphism = 0;
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t m = 0; m < dim; ++m) {
      double dsum = 0.0;
      for (std::size_t n = 0; n < dim; ++n) {
        commut = std::max<double>(commut, std::abs(t(l, m, n) - t(m, l, n)));
        unit = std::max<double>(unit, std::abs(t(0, m, n) - (m == n ? 1 : 0)));
        conj = std::max<double>(conj, std::abs(t(l, m, n) - t(l, md.dual_index(n), md.dual_index(m))));
        dsum += t(l, m, n) * md.qdims()[n];
      }
      const double dl = md.qdims()[l] * md.qdims()[m];
      homomorphism = std::max(homomorphism, std::abs(dsum - dl) / dl);
    }
  checks.push_back(make_check("fusion_commutative", commut, 0.5));
  checks.push_back(make_check("vacuum_is_unit", unit, 0.5));
  checks.push_back(make_check("conjugation_symmetry", conj, 0.5));
  checks.push_back(make_check("qdim_ring_homomorphism", homomorphism, tol.identity));
  if (dim <= 60) checks.push_back(make_check("fusion_associative", is_associative(t) ? 0.0 : 1.0, 0.5));
  return checks;
}

}  // namespace loopfusion
