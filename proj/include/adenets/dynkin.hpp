#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adenets/int_matrix.hpp"

namespace adenets {

enum class Family { A, D, E, Tadpole };

/// Type and rank of a Dynkin graph: A_n (n>=1), D_n (n>=4), E6/E7/E8, or the
/// tadpole T_n (n>=1). Tadpoles only ever appear as outputs (folded vertical
/// orbits), never as classification data.
struct GraphKind {
  Family family = Family::A;
  int rank = 1;

  static GraphKind A(int n);
  static GraphKind D(int n);
  static GraphKind E(int n);
  static GraphKind Tadpole(int n);

  /// Parses "A4", "D5", "E6", "T2" (CLI spelling). Throws std::invalid_argument.
  static GraphKind parse(std::string_view text);

  std::string name() const;  // "A4", "D5", "E6", "T2"
  bool is_ade() const { return family != Family::Tadpole; }
  int vertex_count() const { return rank; }

  auto operator<=>(const GraphKind&) const = default;
};

/// Coxeter number h; the spectral radius of the graph is 2cos(pi/h).
/// For T_n this is 2n+1.
int coxeter_number(GraphKind kind);

/// All A-D-E kinds with Coxeter number h, in the order A, D, E.
std::vector<GraphKind> graphs_with_coxeter(int h);

enum class Parity { Even, Odd };

/// An A-D-E (or tadpole) graph with the canonical vertex labeling:
///   A_n:   path 0-1-...-(n-1)
///   D_n:   spine 0-...-(n-3), fork tips n-2 and n-1 both attached to n-3
///   E6/7/8: path 0-...-(N-2), extra vertex N-1 attached to vertex 2
///   T_n:   path 0-...-(n-1) with a loop at n-1
class DynkinGraph {
 public:
  explicit DynkinGraph(GraphKind kind);

  GraphKind kind() const { return kind_; }
  int vertex_count() const { return adjacency_.size(); }
  int coxeter() const { return coxeter_number(kind_); }
  const IntMatrix& adjacency() const { return adjacency_; }

  bool is_bipartite() const { return kind_.is_ade(); }
  /// Bipartition class; vertex 0 is even. Throws for tadpoles.
  Parity parity(int v) const;

  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  bool is_extremal(int v) const { return degree(v) <= 1; }

  /// The trivalent vertex of D/E graphs.
  std::optional<int> trivalent_vertex() const;
  /// Distance from the trivalent vertex (D/E only).
  std::optional<int> leg_distance(int v) const;

  /// Distance between two vertices along the graph.
  int distance(int a, int b) const;

  void check_vertex(int v) const;

 private:
  GraphKind kind_;
  IntMatrix adjacency_;
  std::vector<Parity> parity_;
  std::vector<int> leg_distance_;
};

inline DynkinGraph build_graph(GraphKind kind) { return DynkinGraph(kind); }

/// Vertex permutation; perm[v] is the image of v.
struct Automorphism {
  std::vector<int> perm;

  int operator()(int v) const { return perm[v]; }
  bool is_identity() const;
  bool operator==(const Automorphism&) const = default;
};

/// All bijections between the vertex sets of two graphs (given by adjacency
/// matrices, loops on the diagonal allowed) that preserve every adjacency
/// entry. Lexicographically ordered.
std::vector<std::vector<int>> enumerate_isomorphisms(const IntMatrix& from, const IntMatrix& to);

/// Full automorphism group, identity first. D_4 yields all of S_3.
std::vector<Automorphism> automorphism_group(const DynkinGraph& g);

using VertexOrbit = std::vector<int>;  // sorted ascending

/// Orbits under automorphism_group, ordered by minimal vertex.
std::vector<VertexOrbit> vertex_orbits(const DynkinGraph& g);
VertexOrbit orbit_of(const DynkinGraph& g, int v);

/// Perron-Frobenius data; eigenvector normalized so its minimum entry is 1.
struct PFData {
  double eigenvalue = 0;
  std::vector<double> eigenvector;
  double residual = 0;  // max |(A x - lambda x)_v|
};

/// Throws std::runtime_error if the residual or the deviation of the
/// eigenvalue from 2cos(pi/h) exceeds tol.
PFData pf_data(const DynkinGraph& g, double tol = 1e-12);

/// Extremal vertex together with the length of the leg it terminates.
/// For A_n the whole path counts as one leg of length n-1 ending at vertex 0.
struct LegTip {
  int tip = 0;
  int length = 0;
};

/// Leg tips of D/E graphs (sorted by tip index), or {0, n-1} for A_n.
std::vector<LegTip> leg_tips(const DynkinGraph& g);

/// The vertex reached by walking `dist` steps from `tip` towards the
/// trivalent vertex (or along the path for A_n). Throws if dist exceeds the leg.
int walk_leg(const DynkinGraph& g, int tip, int dist);

struct LegPosition {
  int tip = 0;
  int distance = 0;
};

/// Ways to write v as (extremal tip, distance along that tip's leg). The
/// trivalent vertex of D/E has one entry per leg; every other vertex has one.
/// A_n vertices are measured from tip 0.
std::vector<LegPosition> extremal_decompositions(const DynkinGraph& g, int v);

/// Graphviz rendering; vertex attributes `parity` and, for D/E, `leg`.
std::string to_dot(const DynkinGraph& g);

}  // namespace adenets
