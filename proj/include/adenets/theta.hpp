#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adenets/classify.hpp"
#include "adenets/dynkin.hpp"
#include "adenets/fusion.hpp"

namespace adenets {

/// G1 x G2 with horizontal edges from G1 (second coordinate fixed) and
/// vertical edges from G2 (first coordinate fixed). Vertex (v1, v2) has
/// index v1 * |G2| + v2.
struct ProductGraph {
  IntMatrix horizontal;
  IntMatrix vertical;
  int n1 = 0;
  int n2 = 0;

  int index(int v1, int v2) const { return v1 * n2 + v2; }
};

ProductGraph product_graph(const DynkinGraph& g1, const DynkinGraph& g2);

/// Vertex permutation induced by fusion with the simple sector, read off
/// V_{h-2} of the nimrep. Throws std::logic_error if it is not a graph
/// automorphism.
Automorphism tau_automorphism(const DynkinGraph& g);

/// (G1 x G2) / (alpha1 x alpha2). Classes are identified by their
/// lexicographically minimal member and stored in increasing order.
struct FusionGraph {
  int m = 0;
  DynkinGraph g1;
  DynkinGraph g2;
  Automorphism alpha1;
  Automorphism alpha2;
  std::vector<std::pair<int, int>> classes;
  std::vector<int> class_of;  // product index -> class
  int distinguished = 0;
  IntMatrix horizontal;  // class adjacency for fusion with sigma_{1,0}
  IntMatrix vertical;    // class adjacency for fusion with sigma_{0,1}

  int size() const { return static_cast<int>(classes.size()); }
  int class_index(int v1, int v2) const;
  std::vector<std::pair<int, int>> members(int cls) const;
};

/// Quotient fusion graph with the distinguished class of (v1, v2). Asserts
/// that alpha is fixed-point free and that the two class adjacencies commute.
FusionGraph fusion_graph(const VirInvariant& inv, Execution exec = Execution::Serial);

/// Action of every sector sigma_{j,k} on the classes of a fusion graph,
/// T_j(H) T_k(V) with T the Chebyshev recursion. Both families are computed
/// independently per direction.
class SectorAction {
 public:
  explicit SectorAction(const FusionGraph& fg, Execution exec = Execution::Serial);

  int m() const { return m_; }
  const std::vector<IntMatrix>& horizontal_family() const { return horizontal_; }
  const std::vector<IntMatrix>& vertical_family() const { return vertical_; }

  IntMatrix matrix(int j, int k, Execution exec = Execution::Serial) const;
  /// (T_j(H) T_k(V))_{cls, cls}
  std::int64_t diagonal(int cls, int j, int k) const;

  /// Multiplicity of each sector in the canonical endomorphism for the
  /// extension whose inclusion sits at `cls`. Throws std::logic_error if the
  /// two labels of an identified sector disagree.
  MinimalMultiset theta(int cls) const;

 private:
  int m_;
  std::vector<IntMatrix> horizontal_;
  std::vector<IntMatrix> vertical_;
};

/// Label pair in the frame where the first index belongs to the A graph of
/// odd Coxeter number. Identification (a,b) ~ (h_A-2-a, h_B-2-b); canonical
/// form has the smaller a.
struct NormalizedTerm {
  int a = 0;
  int b = 0;
  int mult = 0;
  bool operator==(const NormalizedTerm&) const = default;
};

struct CanonicalEndo {
  MinimalMultiset theta;  // native labels sigma_{j,k}, j along G1
  /// True when m is even, i.e. the odd-Coxeter A graph is G2 and the
  /// normalized frame swaps the two directions.
  bool swapped = false;
  std::vector<NormalizedTerm> normalized;
};

CanonicalEndo canonical_endo(const VirInvariant& inv);
/// Canonical endomorphism at an arbitrary class of an existing fusion graph.
CanonicalEndo canonical_endo(const FusionGraph& fg, const SectorAction& action, int cls);

/// Expresses native labels in the normalized frame.
std::vector<NormalizedTerm> normalize_labels(int m, const MinimalMultiset& theta);

/// The invariant at (walk v1 j steps, walk v2 k steps) from the extremal pair.
VirInvariant shifted_invariant(const VirInvariant& inv_extremal, int j, int k);

/// theta at the extremal pair fused twice with sigma_{j,k}. Throws
/// std::invalid_argument if a vertex is not extremal or a distance leaves its leg.
CanonicalEndo theta_shift(const VirInvariant& inv_extremal, int j, int k);
/// Same from an already computed extremal theta.
MinimalMultiset theta_shift(const MinimalMultiset& extremal_theta, const MinimalSector& shift);

/// Canonical endomorphism of the SU(2)_k extension: multiplicity of lambda_j
/// is (V_j)_{v,v}.
Su2Multiset su2_canonical_endo(const Su2Invariant& inv);

struct OrbitGraph {
  GraphKind kind;
  int distinguished = 0;  // position in the canonical labeling of `kind`
  int size = 0;
};

/// Connected component of the distinguished class under vertical edges
/// only, identified up to isomorphism as an A-D-E graph or a tadpole.
OrbitGraph vertical_orbit_graph(const VirInvariant& inv);
OrbitGraph vertical_orbit_graph(const FusionGraph& fg);

/// Identifies a connected graph (loops allowed on the diagonal) as one of
/// A_n, D_n, E6-8, T_n. Throws std::logic_error if none matches.
OrbitGraph identify_graph(const IntMatrix& adjacency, int distinguished);

/// Closed-form theta for G2 = D_n at extremal distance 1 (fork tip) or
/// n-3 (end of the long leg), with G1 = A_{2n-4} at an end vertex.
MinimalMultiset d_series_theta(int n, int dist);

struct Table41Instance {
  GraphKind g2;
  int m = 0;
  int tip = 0;
  MinimalMultiset theta;
};

struct Table41Row {
  std::string g2;        // "A_n", "D_n", "E6", ...
  std::string coxeter;   // "n+1", "2n-2", "12", ...
  std::string distance;  // "-", "1", "n-3", ...
  std::string theta;     // rendered; symbolic for the A_n and D_n rows
  std::vector<Table41Instance> instances;
  bool pattern_holds = true;  // every instance matches the closed form
};

/// theta at all pairs of extremal vertices, G1 = A_{m-1} at vertex 0 and
/// coxeter(G2) = m+1. A_n instantiated for odd 3 <= n <= 11, D_n for 4 <= n <= 12.
std::vector<Table41Row> table41(Execution exec = Execution::Serial);

}  // namespace adenets
