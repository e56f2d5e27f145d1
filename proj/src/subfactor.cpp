#include "loopfusion/subfactor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>

#include "loopfusion/errors.hpp"

namespace loopfusion {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

void require_components(int components) {
  if (components < 1) throw ArgumentError("number of components must be >= 1, got " + std::to_string(components));
}

// dim^k, or +inf past the double range; callers compare against a cap.
double tuple_count(std::size_t dim, int k) { return std::pow(static_cast<double>(dim), k); }

void require_tuples(std::size_t dim, int k, const Limits& limits) {
  if (tuple_count(dim, k) > static_cast<double>(limits.max_tuples))
    throw ResourceError(std::to_string(dim) + "^" + std::to_string(k) + " tuples exceed the cap of " +
                        std::to_string(limits.max_tuples));
}

// Visits every prefix of `length` slots in lexicographic order.
template <typename F>
void for_each_prefix(std::size_t dim, int length, F&& f) {
  std::vector<std::size_t> slots(length, 0);
  while (true) {
    f(slots);
    int i = length - 1;
    while (i >= 0 && ++slots[i] == dim) slots[i--] = 0;
    if (i < 0) break;
  }
}

SectorVector::Tuple to_tuple(const ModularData& md, const std::vector<std::size_t>& slots) {
  SectorVector::Tuple t;
  t.reserve(slots.size());
  for (std::size_t s : slots) t.push_back(md.weight(s));
  return t;
}

}  // namespace

IndexReport jw_index(const ModularData& md, int components, const LevelWeight& weight) {
  require_components(components);
  const std::size_t i = md.index_of(weight);
  IndexReport r{md.rank(), md.level(), components, weight, md.s00(), md.qdims()[i], 0.0, 0.0, {}};
  r.dimension = r.qdim * std::pow(r.s00, -(components - 1));
  r.index = r.dimension * r.dimension;
  r.trace.push_back("S00 = S(vacuum, vacuum) = " + fmt(r.s00));
  r.trace.push_back("d_lambda = S(vacuum, " + weight.to_string() + ") / S00 = " + fmt(r.qdim));
  r.trace.push_back("d = d_lambda * S00^-" + std::to_string(components - 1) + " = " + fmt(r.dimension));
  r.trace.push_back("index = d^2 = " + fmt(r.index));
  return r;
}

IndexReport jw_index(int rank, int level, int components, const LevelWeight& weight, const Limits& limits) {
  return jw_index(build_modular_data(rank, level, limits), components, weight);
}

double tau_s2_x_s1(const ModularData& md) { return 1.0 / md.s00(); }

double tau_s2_x_s1(int rank, int level, const Limits& limits) {
  return tau_s2_x_s1(build_modular_data(rank, level, limits));
}

SectorVector rho_bar_rho(const FusionTensor& n, int components, const Limits& limits) {
  require_components(components);
  const ModularData& md = n.modular_data();
  const std::size_t dim = md.size();
  require_tuples(dim, components - 1, limits);
  SectorVector out(components);
  for_each_prefix(dim, components - 1, [&](const std::vector<std::size_t>& prefix) {
    const std::vector<std::int64_t> folded = fold_product(n, prefix);
    std::vector<std::size_t> slots = prefix;
    slots.push_back(0);
    for (std::size_t last = 0; last < dim; ++last) {
      // The vacuum occurs in x * last exactly N^{last*}_x times.
      const std::int64_t n1 = folded[md.dual_index(last)];
      if (n1 == 0) continue;
      slots.back() = last;
      out.add(to_tuple(md, slots), n1);
    }
  });
  return out;
}

double total_dimension(const SectorVector& v, const ModularData& md) {
  double sum = 0.0;
  for (const auto& [tuple, mult] : v.terms()) {
    double prod = static_cast<double>(mult);
    for (const auto& w : tuple) prod *= md.qdims()[md.index_of(w)];
    sum += prod;
  }
  return sum;
}

PrincipalGraph dual_principal_graph(const FusionTensor& n, int components, const Limits& limits) {
  require_components(components);
  const ModularData& md = n.modular_data();
  const std::size_t dim = md.size();
  require_tuples(dim, components, limits);

  // Full incidence: tuple code (slot 0 most significant) -> channels.
  std::size_t total = 1;
  for (int i = 0; i < components; ++i) total *= dim;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> channels(total);
  std::vector<std::vector<std::size_t>> odd_neighbours(dim);
  std::vector<std::int64_t> out(dim);
  for_each_prefix(dim, components - 1, [&](const std::vector<std::size_t>& prefix) {
    const std::vector<std::int64_t> folded = fold_product(n, prefix);
    std::size_t code = 0;
    for (std::size_t s : prefix) code = code * dim + s;
    for (std::size_t last = 0; last < dim; ++last) {
      std::fill(out.begin(), out.end(), 0);
      for (std::size_t k = 0; k < dim; ++k) {
        if (folded[k] == 0) continue;
        for (const auto& c : n.product(k, last)) out[c.index] += folded[k] * c.multiplicity;
      }
      const std::size_t full = code * dim + last;
      for (std::size_t nu = 0; nu < dim; ++nu)
        if (out[nu] != 0) {
          channels[full].emplace_back(nu, out[nu]);
          odd_neighbours[nu].push_back(full);
        }
    }
  });

  // Alternating BFS from the vacuum tuple (code 0).
  std::vector<int> even_dist(total, -1), odd_dist(dim, -1);
  std::queue<std::pair<bool, std::size_t>> frontier;  // (is_even, id)
  even_dist[0] = 0;
  frontier.push({true, 0});
  int depth = 0;
  while (!frontier.empty()) {
    auto [is_even, id] = frontier.front();
    frontier.pop();
    const int here = is_even ? even_dist[id] : odd_dist[id];
    depth = std::max(depth, here);
    if (is_even) {
      for (const auto& [nu, mult] : channels[id])
        if (odd_dist[nu] < 0) {
          odd_dist[nu] = here + 1;
          frontier.push({false, nu});
        }
    } else {
      for (std::size_t t : odd_neighbours[id])
        if (even_dist[t] < 0) {
          even_dist[t] = here + 1;
          frontier.push({true, t});
        }
    }
  }

  PrincipalGraph g{md.rank(), md.level(), components, {}, md.basis(), {}, depth};
  std::vector<std::size_t> slots(components);
  for (std::size_t code = 0; code < total; ++code) {
    if (even_dist[code] < 0) continue;
    std::size_t rest = code;
    for (int i = components - 1; i >= 0; --i) {
      slots[i] = rest % dim;
      rest /= dim;
    }
    const std::size_t even_id = g.even.size();
    g.even.push_back(to_tuple(md, slots));
    for (const auto& [nu, mult] : channels[code]) g.edges.push_back({even_id, nu, mult});
  }
  return g;
}

std::vector<bool> odd_vertex_reachable(const PrincipalGraph& g) {
  std::vector<bool> reached(g.odd.size(), false);
  for (const auto& e : g.edges) reached[e.odd] = true;
  return reached;
}

std::vector<Check> verify_principal_graph(const PrincipalGraph& g, const ModularData& md, const Tolerances& tol) {
  std::vector<double> edge_dim(g.even.size(), 0.0);
  bool positive = true, sorted = std::is_sorted(g.even.begin(), g.even.end());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    positive = positive && e.multiplicity > 0;
    edge_dim[e.even] += static_cast<double>(e.multiplicity) * md.qdims()[e.odd];
    if (i > 0) {
      const auto& p = g.edges[i - 1];
      sorted = sorted && (p.even < e.even || (p.even == e.even && p.odd < e.odd));
    }
  }
  double worst = 0.0;
  for (std::size_t v = 0; v < g.even.size(); ++v) {
    double prod = 1.0;
    for (const auto& w : g.even[v]) prod *= md.qdims()[md.index_of(w)];
    worst = std::max(worst, std::abs(edge_dim[v] - prod) / prod);
  }

  const bool has_vacuum =
      !g.even.empty() &&
      std::all_of(g.even.front().begin(), g.even.front().end(), [](const LevelWeight& w) { return w.is_vacuum(); });

  // Connectivity of the edge-carrying part, by union-find over even + odd ids.
  const std::size_t ne = g.even.size();
  std::vector<std::size_t> parent(ne + g.odd.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) parent[find(e.even)] = find(ne + e.odd);
  std::vector<bool> touched(parent.size(), false);
  for (const auto& e : g.edges) touched[e.even] = touched[ne + e.odd] = true;
  std::size_t roots = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (touched[i] && find(i) == i) ++roots;

  return {make_check("even_vertex_dimension_consistency", worst, tol.identity),
          make_check("vacuum_tuple_present", has_vacuum ? 0.0 : 1.0, 0.5),
          make_check("edge_part_connected", roots == 1 ? 0.0 : 1.0, 0.5),
          make_check("multiplicities_positive", positive ? 0.0 : 1.0, 0.5),
          make_check("canonical_order", sorted ? 0.0 : 1.0, 0.5)};
}

double conformal_inclusion_index(Inclusion kind, int m, int n, int components, const Limits& limits) {
  require_components(components);
  switch (kind) {
    case Inclusion::U1xSUn_in_Un:
      if (n < 1) throw ArgumentError("n must be >= 1");
      return std::pow(static_cast<double>(n), components);
    case Inclusion::SUmxSUn_in_SUmn: {
      if (m < 2) throw ArgumentError("SU(m) x SU(n) inclusion needs m >= 2");
      const double s00 = build_modular_data(n, m, limits).s00();
      return 1.0 / (std::pow(static_cast<double>(n), components) * std::pow(s00, 2 * components));
    }
  }
  throw ArgumentError("unknown inclusion kind");
}

FactorizationReport verify_index_factorization(int m, int n, int components, const Tolerances& tol,
                                               const Limits& limits) {
  require_components(components);
  const double up = build_modular_data(m, n, limits).s00();
  const double low = build_modular_data(n, m, limits).s00();
  const int l = components;
  FactorizationReport r{m, n, l, up, low, 0, 0, 0, 0, false};
  r.lhs = std::pow(static_cast<double>(n) * m, (l - 1) / 2.0) /
          (std::pow(static_cast<double>(n), l) * std::pow(low, 2 * l));
  const double d_upper = std::pow(up, -(l - 1));
  const double d_lower = std::pow(low, -(l - 1));
  r.rhs = d_upper * d_lower / (n * low * low);
  r.factorization_residual = std::abs(r.lhs - r.rhs) / std::abs(r.lhs);
  r.vacuum_ratio_residual = std::abs(up - std::sqrt(static_cast<double>(n) / m) * low) / up;
  r.pass = r.factorization_residual < tol.identity && r.vacuum_ratio_residual < tol.identity;
  return r;
}

}  // namespace loopfusion
