#pragma once

#include <vector>

#include "adenets/dynkin.hpp"

namespace adenets {

/// Enumeration bounds. Coxeter numbers above max_coxeter are rejected.
struct Limits {
  int max_coxeter = 60;
};

/// Complete invariant (G, [v]) of an irreducible extension of SU(2)_k.
struct Su2Invariant {
  int level = 0;
  DynkinGraph graph;
  VertexOrbit orbit;

  int vertex() const { return orbit.front(); }
};

/// Complete invariant (G1, [v1], G2, [v2]) of an irreducible extension of
/// the Virasoro net with c = 1 - 6/(m(m+1)); coxeter(G1) = m, coxeter(G2) = m+1.
struct VirInvariant {
  int m = 0;
  DynkinGraph g1;
  VertexOrbit orbit1;
  DynkinGraph g2;
  VertexOrbit orbit2;

  int v1() const { return orbit1.front(); }
  int v2() const { return orbit2.front(); }
};

/// Validating constructors; throw std::invalid_argument on Coxeter-number
/// violations, tadpoles or out-of-range vertices. Any vertex of the orbit
/// may be given.
Su2Invariant make_su2_invariant(int level, GraphKind kind, int v);
VirInvariant make_vir_invariant(int m, GraphKind g1, int v1, GraphKind g2, int v2);

std::vector<Su2Invariant> enumerate_su2(int level, const Limits& limits = {});
std::vector<VirInvariant> enumerate_vir(int m, const Limits& limits = {});

struct BratteliDiagram {
  std::vector<std::vector<std::int64_t>> levels;
  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

/// Levels 0..depth; level 0 is the unit vector at v and level n+1 is the
/// adjacency applied to level n.
BratteliDiagram bratteli(const DynkinGraph& g, int v, int depth);
inline BratteliDiagram bratteli(const DynkinGraph& g, int v) {
  return bratteli(g, v, 2 * g.coxeter());
}

/// Membership in the published list of local extensions: (A_{n-1},A_n),
/// (A_{4n},D_{2n+2}), (D_{2n+2},A_{4n+2}), (A_10,E6), (E6,A_12), (A_28,E8),
/// (E8,A_30), with both vertices carrying the smallest Perron-Frobenius
/// entry. A lookup, not a derivation.
bool is_known_local(const VirInvariant& inv);

/// True iff every vertex of the orbit attains the minimal PF entry.
bool is_min_pf_orbit(const DynkinGraph& g, const VertexOrbit& orbit);

}  // namespace adenets
