#pragma once

#include <vector>

#include "adenets/classify.hpp"
#include "adenets/dynkin.hpp"
#include "adenets/theta.hpp"

namespace adenets {

/// Separation between the PF-ratio set {mu_a/mu_b} of a graph with Coxeter
/// number m +- 1 and the set {d_2, ..., d_{m-2}}, d_j = sin(j pi/m)/sin(pi/m),
/// for odd m.
struct DisjointnessReport {
  int m = 0;
  GraphKind graph;
  std::vector<double> ratio_set;  // sorted, duplicates within 1e-12 merged
  std::vector<double> d_set;      // d_2..d_{(m-1)/2}, increasing (d_j = d_{m-j})
  double min_separation = 0;      // +infinity when d_set is empty
  double tol = 0;
  bool disjoint = false;          // min_separation > tol
};

/// Throws std::invalid_argument unless m is odd and positive, |h - m| = 1 and tol > 0.
DisjointnessReport lemma_disjointness(int m, const DynkinGraph& g, double tol = 1e-9);

/// Graphs eligible for odd m: every A-D-E kind with Coxeter number m-1 or m+1.
std::vector<GraphKind> lemma_graphs(int m);

/// Maximum absolute deviation, over the classes of the fusion graph, of
/// d(theta_lambda) / (nu(v1) mu(v2))^2 from its mean. The trivial extension
/// gives 0.
double dim_consistency(const VirInvariant& inv);

struct DimConsistency {
  double max_deviation = 0;
  double mean_ratio = 0;
  int classes = 0;
};
DimConsistency dim_consistency(const FusionGraph& fg, const SectorAction& action);

}  // namespace adenets
