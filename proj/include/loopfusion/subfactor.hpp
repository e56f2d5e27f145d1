#pragma once

// Invariants of the Jones-Wassermann subfactor of SU(n) at level m for an
// interval with l components: index, the decomposition of [rho-bar rho],
// the dual principal graph, and the conformal-inclusion index identities.
//
// "components" is always the number l of disjoint arcs (an interval that is
// (l-1)-disconnected).

#include <string>
#include <vector>

#include "loopfusion/checks.hpp"
#include "loopfusion/fusion.hpp"

namespace loopfusion {

struct IndexReport {
  int rank;
  int level;
  int components;
  LevelWeight weight;
  double s00;
  double qdim;
  double dimension;  // statistical dimension d
  double index;      // d^2
  std::vector<std::string> trace;
};

// d = d_lambda * S00^{-(l-1)}.
IndexReport jw_index(const ModularData& md, int components, const LevelWeight& weight);
IndexReport jw_index(int rank, int level, int components, const LevelWeight& weight,
                     const Limits& limits = {});

// The S^2 x S^1 invariant 1/S00.
double tau_s2_x_s1(const ModularData& md);
double tau_s2_x_s1(int rank, int level, const Limits& limits = {});

// sum over l-tuples of N^1 [l1 (x) ... (x) ll]. Enumerates dim^(l-1) prefixes
// (the last slot is fixed by contraction); throws ResourceError past
// limits.max_tuples.
SectorVector rho_bar_rho(const FusionTensor& n, int components, const Limits& limits = {});

// sum over terms of multiplicity * prod d.
double total_dimension(const SectorVector& v, const ModularData& md);

struct PrincipalGraph {
  struct Edge {
    std::size_t even;
    std::size_t odd;
    std::int64_t multiplicity;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  int rank;
  int level;
  int components;
  std::vector<SectorVector::Tuple> even;  // sorted
  std::vector<LevelWeight> odd;           // every weight, basis order
  std::vector<Edge> edges;                // sorted by (even, odd)
  int depth;                              // BFS layers until no new vertex
};

// Even vertices: l-tuples reachable from the vacuum tuple by alternating
// through odd vertices. Odd vertices: all weights nu (standing for [rho nu]).
// Edge multiplicity N^nu_{l1 ... ll}. Throws ResourceError when dim^l
// exceeds limits.max_tuples.
PrincipalGraph dual_principal_graph(const FusionTensor& n, int components, const Limits& limits = {});

// Residual of sum_nu mult * d_nu = prod d_{l_i} at the worst even vertex, and
// structural checks (vacuum tuple present, edge-carrying part connected).
std::vector<Check> verify_principal_graph(const PrincipalGraph& g, const ModularData& md,
                                          const Tolerances& tol = {});

// Odd vertices that carry at least one edge.
std::vector<bool> odd_vertex_reachable(const PrincipalGraph& g);

enum class Inclusion { SUmxSUn_in_SUmn, U1xSUn_in_Un };

// Squared statistical dimension of the conformal inclusion for l components.
// SU(m) x SU(n) in SU(mn): 1 / (n^l S00^{2l}) with S the SU(n) level-m matrix.
// U(1) x SU(n) in U(n): n^l.
double conformal_inclusion_index(Inclusion kind, int m, int n, int components, const Limits& limits = {});

struct FactorizationReport {
  int m;
  int n;
  int components;
  double upper_s00;    // SU(m) level n
  double lower_s00;    // SU(n) level m
  double lhs;          // (nm)^{(l-1)/2} / (n^l S00_low^{2l})
  double rhs;          // d_rho' d_rho / (n S00_low^2)
  double factorization_residual;  // |lhs - rhs| / |lhs|
  double vacuum_ratio_residual;   // |S00_up - sqrt(n/m) S00_low| / S00_up
  bool pass;
};

FactorizationReport verify_index_factorization(int m, int n, int components, const Tolerances& tol = {},
                                               const Limits& limits = {});

}  // namespace loopfusion
