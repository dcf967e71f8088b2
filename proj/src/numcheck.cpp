#include "adenets/numcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace adenets {

std::vector<GraphKind> lemma_graphs(int m) {
  std::vector<GraphKind> out;
  for (int h : {m - 1, m + 1})
    for (auto k : graphs_with_coxeter(h)) out.push_back(k);
  return out;
}

DisjointnessReport lemma_disjointness(int m, const DynkinGraph& g, double tol) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("lemma_disjointness: m must be odd and positive");
  if (std::abs(g.coxeter() - m) != 1)
    throw std::invalid_argument("lemma_disjointness: |coxeter - m| must be 1");
  if (!(tol > 0)) throw std::invalid_argument("lemma_disjointness: tol must be positive");

  DisjointnessReport r;
  r.m = m;
  r.graph = g.kind();
  r.tol = tol;

  const auto pf = pf_data(g, 1e-12);
  const auto& mu = pf.eigenvector;
  std::vector<double> ratios;
  ratios.reserve(mu.size() * mu.size());
  for (double a : mu)
    for (double b : mu) ratios.push_back(a / b);
  std::sort(ratios.begin(), ratios.end());
  for (double x : ratios)
    if (r.ratio_set.empty() || x - r.ratio_set.back() > 1e-12) r.ratio_set.push_back(x);

  const double s1 = std::sin(std::numbers::pi / m);
  // d_j = d_{m-j}, so j <= m/2 already covers every value
  for (int j = 2; j <= m / 2; ++j) r.d_set.push_back(std::sin(j * std::numbers::pi / m) / s1);

  // Both sets sorted: a merge walk finds the closest pair.
  r.min_separation = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  for (double d : r.d_set) {
    while (i + 1 < r.ratio_set.size() && r.ratio_set[i + 1] <= d) ++i;
    r.min_separation = std::min(r.min_separation, std::abs(r.ratio_set[i] - d));
    if (i + 1 < r.ratio_set.size())
      r.min_separation = std::min(r.min_separation, std::abs(r.ratio_set[i + 1] - d));
  }
  r.disjoint = r.min_separation > tol;
  return r;
}

DimConsistency dim_consistency(const FusionGraph& fg, const SectorAction& action) {
  const auto nu = pf_data(fg.g1).eigenvector;
  const auto mu = pf_data(fg.g2).eigenvector;
  std::vector<double> ratios;
  for (int c = 0; c < fg.size(); ++c) {
    const auto [v1, v2] = fg.classes[c];
    const double weight = nu[v1] * mu[v2];
    ratios.push_back(sector_dim(action.theta(c)) / (weight * weight));
  }
  double mean = 0;
  for (double x : ratios) mean += x;
  mean /= static_cast<double>(ratios.size());
  double dev = 0;
  for (double x : ratios) dev = std::max(dev, std::abs(x - mean));
  return {dev, mean, fg.size()};
}

double dim_consistency(const VirInvariant& inv) {
  const auto fg = fusion_graph(inv);
  return dim_consistency(fg, SectorAction(fg)).max_deviation;
}

}  // namespace adenets
