#include "adenets/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

namespace adenets {

bool expected_tau_nontrivial(GraphKind kind) {
  switch (kind.family) {
    case Family::A: return kind.rank >= 2;
    case Family::D: return kind.rank % 2 == 1;
    case Family::E: return kind.rank == 6;
    case Family::Tadpole: return false;
  }
  return false;
}

namespace {

template <class Fn>
void for_each_index(int count, Execution exec, Fn&& fn) {
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) fn(i);
  } else {
    for (int i = 0; i < count; ++i) fn(i);
  }
}

NimrepCheck check_nimrep(GraphKind kind) {
  NimrepCheck c{kind, coxeter_number(kind), false, false, false, {}};
  try {
    const DynkinGraph g(kind);
    const auto family = chebyshev_family(g.adjacency(), g.coxeter() - 1);
    c.nonnegative = std::all_of(family.begin(), family.end(),
                                [](const IntMatrix& v) { return v.is_nonnegative(); });
    c.permutation = !family.back().as_permutation().empty();
    if (c.nonnegative && c.permutation) c.tau_nontrivial = !tau_automorphism(g).is_identity();
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

ThetaCheck check_pair(int m, GraphKind k1, GraphKind k2, ThetaSweepOptions opts) {
  ThetaCheck c;
  c.m = m;
  c.g1 = k1;
  c.g2 = k2;
  try {
    const auto inv = make_vir_invariant(m, k1, 0, k2, 0);
    c.invariants = static_cast<int>(vertex_orbits(inv.g1).size() * vertex_orbits(inv.g2).size());
    const auto fg = fusion_graph(inv);
    const SectorAction action(fg);
    c.classes = fg.size();

    std::vector<MinimalMultiset> thetas;
    thetas.reserve(fg.size());
    for (int cls = 0; cls < fg.size(); ++cls) thetas.push_back(action.theta(cls));
    c.identified_agree = true;  // theta() throws otherwise

    const auto vac = MinimalSector::vacuum(m);
    c.vacuum_once = std::all_of(thetas.begin(), thetas.end(),
                                [&](const auto& t) { return t.multiplicity(vac) == 1; });

    c.symmetric = true;
    if (opts.symmetry) {
      for (int j = 0; j <= m - 2 && c.symmetric; ++j)
        for (int k = 0; k <= m - 1 && c.symmetric; ++k)
          c.symmetric = action.matrix(j, k).is_symmetric();
    }

    c.dim_deviation = dim_consistency(fg, action).max_deviation;

    if (opts.shift) {
      for (int cls = 0; cls < fg.size(); ++cls)
        for (const auto& [v1, v2] : fg.members(cls))
          for (const auto& p1 : extremal_decompositions(fg.g1, v1))
            for (const auto& p2 : extremal_decompositions(fg.g2, v2)) {
              const auto& base = thetas[fg.class_index(p1.tip, p2.tip)];
              const auto shifted = theta_shift(base, MinimalSector(m, p1.distance, p2.distance));
              ++c.shift_checked;
              if (shifted != thetas[cls]) ++c.shift_mismatches;
            }
    }
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

}  // namespace

std::vector<NimrepCheck> nimrep_sweep(int max_h, Execution exec) {
  std::vector<GraphKind> kinds;
  for (int h = 2; h <= max_h; ++h)
    for (auto k : graphs_with_coxeter(h)) kinds.push_back(k);
  std::vector<NimrepCheck> out(kinds.size());
  for_each_index(static_cast<int>(kinds.size()), exec,
                 [&](int i) { out[i] = check_nimrep(kinds[i]); });
  return out;
}

std::vector<DisjointnessReport> lemma_sweep(int max_m, double tol, Execution exec) {
  std::vector<std::pair<int, GraphKind>> items;
  for (int m = 1; m <= max_m; m += 2)
    for (auto k : lemma_graphs(m)) items.emplace_back(m, k);
  std::vector<DisjointnessReport> out(items.size());
  for_each_index(static_cast<int>(items.size()), exec, [&](int i) {
    out[i] = lemma_disjointness(items[i].first, DynkinGraph(items[i].second), tol);
  });
  return out;
}

std::vector<ThetaCheck> theta_sweep(int max_m, Execution exec, ThetaSweepOptions opts) {
  std::vector<std::tuple<int, GraphKind, GraphKind>> items;
  for (int m = 3; m <= max_m; ++m)
    for (auto k1 : graphs_with_coxeter(m))
      for (auto k2 : graphs_with_coxeter(m + 1)) items.emplace_back(m, k1, k2);
  std::vector<ThetaCheck> out(items.size());
  for_each_index(static_cast<int>(items.size()), exec, [&](int i) {
    const auto& [m, k1, k2] = items[i];
    out[i] = check_pair(m, k1, k2, opts);
  });
  return out;
}

double fusion_dim_sweep(int max_m, Execution exec) {
  std::vector<int> ms;
  for (int m = 3; m <= max_m; ++m) ms.push_back(m);
  std::vector<double> worst(ms.size(), 0.0);
  for_each_index(static_cast<int>(ms.size()), exec, [&](int i) {
    const auto sectors = enumerate_sectors(ms[i]);
    for (const auto& a : sectors)
      for (const auto& b : sectors) {
        const double err =
            std::abs(sector_dim(a) * sector_dim(b) - sector_dim(minimal_fuse(a, b)));
        worst[i] = std::max(worst[i], err);
      }
  });
  return ms.empty() ? 0.0 : *std::max_element(worst.begin(), worst.end());
}

}  // namespace adenets
