#include "adenets/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace adenets {

namespace {

void require_ade(GraphKind kind) {
  if (!kind.is_ade())
    throw std::invalid_argument("tadpole graphs are not bipartite and never classification data");
}

void require_limit(int h, const Limits& limits) {
  if (h > limits.max_coxeter)
    throw std::invalid_argument("Coxeter number " + std::to_string(h) + " exceeds limit " +
                                std::to_string(limits.max_coxeter));
}

void require_vertex(const DynkinGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in " + g.kind().name());
}

}  // namespace

Su2Invariant make_su2_invariant(int level, GraphKind kind, int v) {
  require_ade(kind);
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (coxeter_number(kind) != level + 2)
    throw std::invalid_argument(kind.name() + " has Coxeter number " +
                                std::to_string(coxeter_number(kind)) + ", level " +
                                std::to_string(level) + " needs " + std::to_string(level + 2));
  DynkinGraph g(kind);
  require_vertex(g, v);
  auto orbit = orbit_of(g, v);
  return Su2Invariant{level, std::move(g), std::move(orbit)};
}

VirInvariant make_vir_invariant(int m, GraphKind k1, int v1, GraphKind k2, int v2) {
  require_ade(k1);
  require_ade(k2);
  if (m < 3) throw std::invalid_argument("m must be >= 3");
  if (coxeter_number(k1) != m)
    throw std::invalid_argument("G1 = " + k1.name() + " has Coxeter number " +
                                std::to_string(coxeter_number(k1)) + ", expected m = " +
                                std::to_string(m));
  if (coxeter_number(k2) != m + 1)
    throw std::invalid_argument("G2 = " + k2.name() + " has Coxeter number " +
                                std::to_string(coxeter_number(k2)) + ", expected m+1 = " +
                                std::to_string(m + 1));
  DynkinGraph g1(k1), g2(k2);
  require_vertex(g1, v1);
  require_vertex(g2, v2);
  auto o1 = orbit_of(g1, v1);
  auto o2 = orbit_of(g2, v2);
  return VirInvariant{m, std::move(g1), std::move(o1), std::move(g2), std::move(o2)};
}

std::vector<Su2Invariant> enumerate_su2(int level, const Limits& limits) {
  if (level < 1) throw std::invalid_argument("enumerate_su2: level must be >= 1");
  require_limit(level + 2, limits);
  std::vector<Su2Invariant> out;
  for (auto kind : graphs_with_coxeter(level + 2)) {
    DynkinGraph g(kind);
    for (auto& orbit : vertex_orbits(g)) out.push_back(Su2Invariant{level, g, std::move(orbit)});
  }
  return out;
}

std::vector<VirInvariant> enumerate_vir(int m, const Limits& limits) {
  if (m < 3) throw std::invalid_argument("enumerate_vir: m must be >= 3");
  require_limit(m + 1, limits);
  std::vector<VirInvariant> out;
  std::vector<std::pair<DynkinGraph, std::vector<VertexOrbit>>> side2;
  for (auto k2 : graphs_with_coxeter(m + 1)) {
    DynkinGraph g2(k2);
    auto orbits = vertex_orbits(g2);
    side2.emplace_back(std::move(g2), std::move(orbits));
  }
  // lexicographic in (G1, [v1], G2, [v2])
  for (auto k1 : graphs_with_coxeter(m)) {
    DynkinGraph g1(k1);
    for (const auto& o1 : vertex_orbits(g1))
      for (const auto& [g2, orbits2] : side2)
        for (const auto& o2 : orbits2) out.push_back(VirInvariant{m, g1, o1, g2, o2});
  }
  return out;
}

BratteliDiagram bratteli(const DynkinGraph& g, int v, int depth) {
  g.check_vertex(v);
  if (depth < 0) throw std::invalid_argument("bratteli: depth must be >= 0");
  const int n = g.vertex_count();
  const auto& a = g.adjacency();
  BratteliDiagram out;
  std::vector<std::int64_t> level(n, 0);
  level[v] = 1;
  out.levels.push_back(level);
  for (int d = 0; d < depth; ++d) {
    std::vector<std::int64_t> next(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) next[i] += a(i, j) * level[j];
    level = std::move(next);
    out.levels.push_back(level);
  }
  return out;
}

bool is_min_pf_orbit(const DynkinGraph& g, const VertexOrbit& orbit) {
  const auto pf = pf_data(g);
  const double lo = *std::min_element(pf.eigenvector.begin(), pf.eigenvector.end());
  return std::all_of(orbit.begin(), orbit.end(),
                     [&](int v) { return pf.eigenvector[v] - lo < 1e-9; });
}

namespace {

bool is_a(GraphKind k, int n) { return k.family == Family::A && k.rank == n; }

// (G1, G2) pairs of the seven local families.
bool local_family(GraphKind g1, GraphKind g2) {
  if (g1.family == Family::A && is_a(g2, g1.rank + 1)) return true;  // (A_{n-1}, A_n)
  if (g1.family == Family::A && g2.family == Family::D && g2.rank % 2 == 0) {
    const int n = (g2.rank - 2) / 2;  // (A_{4n}, D_{2n+2})
    if (n >= 1 && g1.rank == 4 * n) return true;
  }
  if (g1.family == Family::D && g1.rank % 2 == 0) {
    const int n = (g1.rank - 2) / 2;  // (D_{2n+2}, A_{4n+2})
    if (n >= 1 && is_a(g2, 4 * n + 2)) return true;
  }
  if (is_a(g1, 10) && g2 == GraphKind::E(6)) return true;
  if (g1 == GraphKind::E(6) && is_a(g2, 12)) return true;
  if (is_a(g1, 28) && g2 == GraphKind::E(8)) return true;
  if (g1 == GraphKind::E(8) && is_a(g2, 30)) return true;
  return false;
}

}  // namespace

bool is_known_local(const VirInvariant& inv) {
  return local_family(inv.g1.kind(), inv.g2.kind()) && is_min_pf_orbit(inv.g1, inv.orbit1) &&
         is_min_pf_orbit(inv.g2, inv.orbit2);
}

}  // namespace adenets
