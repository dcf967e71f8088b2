#include "adenets/dynkin.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace adenets {

GraphKind GraphKind::A(int n) {
  if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
  return {Family::A, n};
}

GraphKind GraphKind::D(int n) {
  if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
  return {Family::D, n};
}

GraphKind GraphKind::E(int n) {
  if (n < 6 || n > 8) throw std::invalid_argument("E_n requires n in {6,7,8}");
  return {Family::E, n};
}

GraphKind GraphKind::Tadpole(int n) {
  if (n < 1) throw std::invalid_argument("T_n requires n >= 1");
  return {Family::Tadpole, n};
}

GraphKind GraphKind::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad graph kind: '" + std::string(text) + "'");
  int n = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw std::invalid_argument("bad graph kind: '" + std::string(text) + "'");
  switch (text[0]) {
    case 'A': return A(n);
    case 'D': return D(n);
    case 'E': return E(n);
    case 'T': return Tadpole(n);
    default: throw std::invalid_argument("bad graph kind: '" + std::string(text) + "'");
  }
}

std::string GraphKind::name() const {
  static constexpr char letters[] = {'A', 'D', 'E', 'T'};
  return letters[static_cast<int>(family)] + std::to_string(rank);
}

int coxeter_number(GraphKind kind) {
  switch (kind.family) {
    case Family::A: return kind.rank + 1;
    case Family::D: return 2 * kind.rank - 2;
    case Family::E: return kind.rank == 6 ? 12 : kind.rank == 7 ? 18 : 30;
    case Family::Tadpole: return 2 * kind.rank + 1;
  }
  return 0;
}

std::vector<GraphKind> graphs_with_coxeter(int h) {
  std::vector<GraphKind> out;
  if (h >= 2) out.push_back(GraphKind::A(h - 1));
  if (h >= 6 && h % 2 == 0) out.push_back(GraphKind::D((h + 2) / 2));
  if (h == 12) out.push_back(GraphKind::E(6));
  if (h == 18) out.push_back(GraphKind::E(7));
  if (h == 30) out.push_back(GraphKind::E(8));
  return out;
}

namespace {

void link(IntMatrix& a, int u, int v) {
  a(u, v) = 1;
  a(v, u) = 1;
}

IntMatrix build_adjacency(GraphKind kind) {
  const int n = kind.rank;
  IntMatrix a(n);
  switch (kind.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 2; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 2);
      link(a, n - 3, n - 1);
      break;
    case Family::E:
      for (int i = 0; i + 1 < n - 1; ++i) link(a, i, i + 1);
      link(a, 2, n - 1);
      break;
    case Family::Tadpole:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a(n - 1, n - 1) = 1;
      break;
  }
  return a;
}

std::vector<int> bfs_distances(const IntMatrix& a, int source) {
  const int n = a.size();
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w = 0; w < n; ++w) {
      if (w != u && a(u, w) != 0 && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

DynkinGraph::DynkinGraph(GraphKind kind) : kind_(kind), adjacency_(build_adjacency(kind)) {
  const int n = adjacency_.size();
  const auto from0 = bfs_distances(adjacency_, 0);
  if (kind_.is_ade()) {
    parity_.resize(n);
    for (int v = 0; v < n; ++v) parity_[v] = from0[v] % 2 == 0 ? Parity::Even : Parity::Odd;
  }
  if (auto t = trivalent_vertex()) leg_distance_ = bfs_distances(adjacency_, *t);
}

void DynkinGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw std::out_of_range("vertex " + std::to_string(v) + " not in " + kind_.name());
}

Parity DynkinGraph::parity(int v) const {
  check_vertex(v);
  if (parity_.empty()) throw std::logic_error(kind_.name() + " is not bipartite");
  return parity_[v];
}

std::vector<int> DynkinGraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int w = 0; w < vertex_count(); ++w)
    if (w != v && adjacency_(v, w) != 0) out.push_back(w);
  return out;
}

int DynkinGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::optional<int> DynkinGraph::trivalent_vertex() const {
  switch (kind_.family) {
    case Family::D: return kind_.rank - 3;
    case Family::E: return 2;
    default: return std::nullopt;
  }
}

std::optional<int> DynkinGraph::leg_distance(int v) const {
  check_vertex(v);
  if (leg_distance_.empty()) return std::nullopt;
  return leg_distance_[v];
}

int DynkinGraph::distance(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  return bfs_distances(adjacency_, a)[b];
}

bool Automorphism::is_identity() const {
  for (std::size_t v = 0; v < perm.size(); ++v)
    if (perm[v] != static_cast<int>(v)) return false;
  return true;
}

namespace {

struct IsoSearch {
  const IntMatrix& from;
  const IntMatrix& to;
  std::vector<int> order;  // BFS order of `from` vertices
  std::vector<int> image;
  std::vector<bool> used;
  std::vector<std::int64_t> deg_from, deg_to;
  std::vector<std::vector<int>> found;

  void run(std::size_t depth) {
    if (depth == order.size()) {
      found.push_back(image);
      return;
    }
    const int u = order[depth];
    const int n = to.size();
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || deg_from[u] != deg_to[cand] || from(u, u) != to(cand, cand)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int w = order[d];
        ok = from(u, w) == to(cand, image[w]) && from(w, u) == to(image[w], cand);
      }
      if (!ok) continue;
      image[u] = cand;
      used[cand] = true;
      run(depth + 1);
      used[cand] = false;
      image[u] = -1;
    }
  }
};

std::vector<std::int64_t> row_sums(const IntMatrix& a) {
  std::vector<std::int64_t> out(a.size(), 0);
  for (int i = 0; i < a.size(); ++i)
    for (auto x : a.row(i)) out[i] += x;
  return out;
}

}  // namespace

std::vector<std::vector<int>> enumerate_isomorphisms(const IntMatrix& from, const IntMatrix& to) {
  if (from.size() != to.size()) return {};
  const int n = from.size();
  if (n == 0) return {{}};
  IsoSearch s{from, to, {}, std::vector<int>(n, -1), std::vector<bool>(n, false),
              row_sums(from), row_sums(to), {}};
  // Visit vertices component by component in BFS order so that each new
  // vertex is constrained by an already-placed neighbour.
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::queue<int> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      s.order.push_back(u);
      for (int w = 0; w < n; ++w)
        if (!seen[w] && (from(u, w) != 0 || from(w, u) != 0)) {
          seen[w] = true;
          q.push(w);
        }
    }
  }
  s.run(0);
  std::sort(s.found.begin(), s.found.end());
  return s.found;
}

std::vector<Automorphism> automorphism_group(const DynkinGraph& g) {
  std::vector<Automorphism> out;
  for (auto& p : enumerate_isomorphisms(g.adjacency(), g.adjacency()))
    out.push_back(Automorphism{std::move(p)});
  // identity is lexicographically first
  return out;
}

std::vector<VertexOrbit> vertex_orbits(const DynkinGraph& g) {
  const int n = g.vertex_count();
  const auto group = automorphism_group(g);
  std::vector<int> owner(n, -1);
  std::vector<VertexOrbit> orbits;
  for (int v = 0; v < n; ++v) {
    if (owner[v] >= 0) continue;
    VertexOrbit orbit;
    for (const auto& a : group) orbit.push_back(a(v));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (int w : orbit) owner[w] = static_cast<int>(orbits.size());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

VertexOrbit orbit_of(const DynkinGraph& g, int v) {
  g.check_vertex(v);
  for (auto& orbit : vertex_orbits(g))
    if (std::binary_search(orbit.begin(), orbit.end(), v)) return orbit;
  throw std::logic_error("orbit_of: vertex not covered");
}

PFData pf_data(const DynkinGraph& g, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("pf_data: tol must be positive");
  const int n = g.vertex_count();
  const auto& a = g.adjacency();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<double>(a(i, j));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("pf_data: eigen-solve failed");
  const double lambda = solver.eigenvalues()(n - 1);
  Eigen::VectorXd x = solver.eigenvectors().col(n - 1).cwiseAbs();

  // A few Rayleigh-refined power steps on A + 2I tighten the residual; the
  // shift keeps the spectrum positive for bipartite graphs.
  for (int it = 0; it < 4; ++it) {
    Eigen::VectorXd y = m * x + 2.0 * x;
    x = y / y.norm();
  }
  const double rayleigh = x.dot(m * x) / x.dot(x);
  x /= x.minCoeff();

  PFData out;
  if (std::abs(rayleigh - lambda) > 1e-9) throw std::runtime_error("pf_data: refinement drifted");
  out.eigenvalue = rayleigh;
  out.eigenvector.assign(x.data(), x.data() + n);
  out.residual = (m * x - out.eigenvalue * x).cwiseAbs().maxCoeff();

  const double expected = 2.0 * std::cos(std::numbers::pi / g.coxeter());
  if (out.residual > tol)
    throw std::runtime_error("pf_data: residual " + std::to_string(out.residual) +
                             " above tolerance for " + g.kind().name());
  if (std::abs(out.eigenvalue - expected) > tol)
    throw std::runtime_error("pf_data: eigenvalue deviates from 2cos(pi/h) for " +
                             g.kind().name());
  if (x.minCoeff() <= 0) throw std::runtime_error("pf_data: non-positive entry");
  return out;
}

std::vector<LegTip> leg_tips(const DynkinGraph& g) {
  const auto kind = g.kind();
  if (kind.family == Family::A) return {LegTip{0, kind.rank - 1}};
  if (kind.family == Family::Tadpole) throw std::invalid_argument("leg_tips: tadpole has no legs");
  std::vector<LegTip> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back({v, *g.leg_distance(v)});
  return out;
}

int walk_leg(const DynkinGraph& g, int tip, int dist) {
  g.check_vertex(tip);
  if (!g.is_extremal(tip)) throw std::invalid_argument("walk_leg: vertex is not extremal");
  int limit = g.vertex_count() - 1;
  if (auto ld = g.leg_distance(tip)) limit = *ld;
  if (dist < 0 || dist > limit)
    throw std::invalid_argument("walk_leg: distance " + std::to_string(dist) +
                                " outside leg of length " + std::to_string(limit));
  int prev = -1, cur = tip;
  for (int step = 0; step < dist; ++step) {
    for (int w : g.neighbors(cur)) {
      if (w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    }
  }
  return cur;
}

std::vector<LegPosition> extremal_decompositions(const DynkinGraph& g, int v) {
  g.check_vertex(v);
  if (g.kind().family == Family::A) return {LegPosition{0, v}};
  std::vector<LegPosition> out;
  for (const auto& leg : leg_tips(g)) {
    const int d = g.distance(leg.tip, v);
    if (d <= leg.length && walk_leg(g, leg.tip, d) == v) out.push_back({leg.tip, d});
  }
  return out;
}

std::string to_dot(const DynkinGraph& g) {
  std::ostringstream os;
  os << "graph " << g.kind().name() << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v << " [";
    if (g.is_bipartite()) os << "parity=" << (g.parity(v) == Parity::Even ? "even" : "odd");
    if (auto leg = g.leg_distance(v)) os << ", leg=" << *leg;
    os << "];\n";
  }
  const auto& a = g.adjacency();
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int w = u; w < g.vertex_count(); ++w)
      if (a(u, w) != 0) os << "  " << u << " -- " << w << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace adenets
