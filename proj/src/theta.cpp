#include "adenets/theta.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace adenets {

ProductGraph product_graph(const DynkinGraph& g1, const DynkinGraph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  ProductGraph p{IntMatrix(n1 * n2), IntMatrix(n1 * n2), n1, n2};
  const auto& a1 = g1.adjacency();
  const auto& a2 = g2.adjacency();
  for (int v1 = 0; v1 < n1; ++v1)
    for (int v2 = 0; v2 < n2; ++v2) {
      for (int w1 = 0; w1 < n1; ++w1) p.horizontal(p.index(v1, v2), p.index(w1, v2)) = a1(v1, w1);
      for (int w2 = 0; w2 < n2; ++w2) p.vertical(p.index(v1, v2), p.index(v1, w2)) = a2(v2, w2);
    }
  return p;
}

Automorphism tau_automorphism(const DynkinGraph& g) {
  const auto rep = nimrep(g);
  Automorphism tau{rep.top().as_permutation()};
  if (tau.perm.empty()) throw std::logic_error("tau_automorphism: V_{h-2} is not a permutation");
  const auto p = IntMatrix::permutation(tau.perm);
  if (p * g.adjacency() != g.adjacency() * p)
    throw std::logic_error("tau_automorphism: permutation does not preserve adjacency of " +
                           g.kind().name());
  return tau;
}

int FusionGraph::class_index(int v1, int v2) const {
  g1.check_vertex(v1);
  g2.check_vertex(v2);
  return class_of[v1 * g2.vertex_count() + v2];
}

std::vector<std::pair<int, int>> FusionGraph::members(int cls) const {
  std::vector<std::pair<int, int>> out;
  const int n2 = g2.vertex_count();
  for (std::size_t p = 0; p < class_of.size(); ++p)
    if (class_of[p] == cls) out.emplace_back(static_cast<int>(p) / n2, static_cast<int>(p) % n2);
  return out;
}

namespace {

IntMatrix quotient(const IntMatrix& product, const std::vector<std::pair<int, int>>& classes,
                   const std::vector<int>& class_of, int n2) {
  const int nc = static_cast<int>(classes.size());
  IntMatrix q(nc);
  for (int c = 0; c < nc; ++c) {
    const int rep = classes[c].first * n2 + classes[c].second;
    for (int p = 0; p < product.size(); ++p)
      if (product(rep, p) != 0) q(c, class_of[p]) += product(rep, p);
  }
  return q;
}

}  // namespace

FusionGraph fusion_graph(const VirInvariant& inv, Execution exec) {
  const auto& g1 = inv.g1;
  const auto& g2 = inv.g2;
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  const auto prod = product_graph(g1, g2);
  auto alpha1 = tau_automorphism(g1);
  auto alpha2 = tau_automorphism(g2);

  std::vector<int> class_of(n1 * n2, -1);
  std::vector<std::pair<int, int>> classes;
  for (int v1 = 0; v1 < n1; ++v1)
    for (int v2 = 0; v2 < n2; ++v2) {
      const int p = prod.index(v1, v2);
      if (class_of[p] >= 0) continue;
      const int q = prod.index(alpha1(v1), alpha2(v2));
      if (q == p)
        throw std::logic_error("fusion_graph: alpha fixes (" + std::to_string(v1) + "," +
                               std::to_string(v2) + ")");
      class_of[p] = class_of[q] = static_cast<int>(classes.size());
      classes.emplace_back(v1, v2);
    }

  auto h = quotient(prod.horizontal, classes, class_of, n2);
  auto v = quotient(prod.vertical, classes, class_of, n2);
  if (h.multiply(v, exec) != v.multiply(h, exec))
    throw std::logic_error("fusion_graph: horizontal and vertical actions do not commute");

  const int ip = prod.index(inv.v1(), inv.v2());
  const int distinguished = class_of[ip];
  return FusionGraph{inv.m,           g1,       g2, std::move(alpha1), std::move(alpha2),
                     std::move(classes), std::move(class_of), distinguished, std::move(h),
                     std::move(v)};
}

SectorAction::SectorAction(const FusionGraph& fg, Execution exec)
    : m_(fg.m),
      horizontal_(chebyshev_family(fg.horizontal, fg.m - 1, exec)),
      vertical_(chebyshev_family(fg.vertical, fg.m, exec)) {}

IntMatrix SectorAction::matrix(int j, int k, Execution exec) const {
  return horizontal_.at(j).multiply(vertical_.at(k), exec);
}

std::int64_t SectorAction::diagonal(int cls, int j, int k) const {
  const auto& hj = horizontal_.at(j);
  const auto& vk = vertical_.at(k);
  std::int64_t s = 0;
  for (int l = 0; l < hj.size(); ++l) s += hj(cls, l) * vk(l, cls);
  return s;
}

MinimalMultiset SectorAction::theta(int cls) const {
  MinimalMultiset out;
  for (const auto& s : enumerate_sectors(m_)) {
    const auto mult = diagonal(cls, s.j(), s.k());
    const auto [pj, pk] = s.partner();
    if (diagonal(cls, pj, pk) != mult)
      throw std::logic_error("canonical_endo: identified labels of " + to_string(s) +
                             " disagree");
    if (mult < 0) throw std::logic_error("canonical_endo: negative multiplicity");
    out.add(s, static_cast<int>(mult));
  }
  return out;
}

std::vector<NormalizedTerm> normalize_labels(int m, const MinimalMultiset& theta) {
  const bool swapped = m % 2 == 0;
  const int ha = swapped ? m + 1 : m;
  const int hb = swapped ? m : m + 1;
  std::vector<NormalizedTerm> out;
  for (const auto& [s, n] : theta) {
    int a = swapped ? s.k() : s.j();
    int b = swapped ? s.j() : s.k();
    const int pa = ha - 2 - a, pb = hb - 2 - b;
    if (pa < a || (pa == a && pb < b)) {
      a = pa;
      b = pb;
    }
    out.push_back({a, b, n});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
  return out;
}

CanonicalEndo canonical_endo(const FusionGraph& fg, const SectorAction& action, int cls) {
  CanonicalEndo out;
  out.theta = action.theta(cls);
  out.swapped = fg.m % 2 == 0;
  out.normalized = normalize_labels(fg.m, out.theta);
  return out;
}

CanonicalEndo canonical_endo(const VirInvariant& inv) {
  const auto fg = fusion_graph(inv);
  const SectorAction action(fg);
  return canonical_endo(fg, action, fg.distinguished);
}

VirInvariant shifted_invariant(const VirInvariant& inv, int j, int k) {
  if (!inv.g1.is_extremal(inv.v1()) || !inv.g2.is_extremal(inv.v2()))
    throw std::invalid_argument("theta_shift: base vertices must be extremal");
  const int w1 = walk_leg(inv.g1, inv.v1(), j);
  const int w2 = walk_leg(inv.g2, inv.v2(), k);
  return make_vir_invariant(inv.m, inv.g1.kind(), w1, inv.g2.kind(), w2);
}

MinimalMultiset theta_shift(const MinimalMultiset& extremal_theta, const MinimalSector& shift) {
  return minimal_fuse(minimal_fuse(extremal_theta, shift), shift);
}

CanonicalEndo theta_shift(const VirInvariant& inv, int j, int k) {
  shifted_invariant(inv, j, k);  // validates extremality and leg distances
  CanonicalEndo out;
  out.theta = theta_shift(canonical_endo(inv).theta, MinimalSector(inv.m, j, k));
  out.swapped = inv.m % 2 == 0;
  out.normalized = normalize_labels(inv.m, out.theta);
  return out;
}

Su2Multiset su2_canonical_endo(const Su2Invariant& inv) {
  const auto rep = nimrep(inv.graph);
  Su2Multiset out;
  for (int j = 0; j < rep.count(); ++j) {
    const auto mult = rep[j](inv.vertex(), inv.vertex());
    out.add(Su2Sector(j, inv.level), static_cast<int>(mult));
  }
  return out;
}

OrbitGraph identify_graph(const IntMatrix& adjacency, int distinguished) {
  const int n = adjacency.size();
  std::vector<GraphKind> candidates{GraphKind::A(n), GraphKind::Tadpole(n)};
  if (n >= 4) candidates.push_back(GraphKind::D(n));
  if (n >= 6 && n <= 8) candidates.push_back(GraphKind::E(n));
  for (auto kind : candidates) {
    const DynkinGraph g(kind);
    const auto isos = enumerate_isomorphisms(adjacency, g.adjacency());
    if (isos.empty()) continue;
    int best = n;
    for (const auto& iso : isos) best = std::min(best, iso[distinguished]);
    return {kind, best, n};
  }
  throw std::logic_error("identify_graph: component of size " + std::to_string(n) +
                         " is neither A-D-E nor a tadpole");
}

OrbitGraph vertical_orbit_graph(const FusionGraph& fg) {
  const auto& v = fg.vertical;
  std::vector<bool> seen(fg.size(), false);
  std::queue<int> q;
  q.push(fg.distinguished);
  seen[fg.distinguished] = true;
  std::vector<int> comp;
  while (!q.empty()) {
    const int c = q.front();
    q.pop();
    comp.push_back(c);
    for (int d = 0; d < fg.size(); ++d)
      if (!seen[d] && v(c, d) != 0) {
        seen[d] = true;
        q.push(d);
      }
  }
  std::sort(comp.begin(), comp.end());
  const int n = static_cast<int>(comp.size());
  IntMatrix sub(n);
  int local = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] == fg.distinguished) local = i;
    for (int j = 0; j < n; ++j) sub(i, j) = v(comp[i], comp[j]);
  }
  return identify_graph(sub, local);
}

OrbitGraph vertical_orbit_graph(const VirInvariant& inv) {
  return vertical_orbit_graph(fusion_graph(inv));
}

MinimalMultiset d_series_theta(int n, int dist) {
  if (n < 4) throw std::invalid_argument("d_series_theta: n must be >= 4");
  const int m = 2 * n - 3;
  MinimalMultiset out;
  if (dist == n - 3) {
    out.add(MinimalSector(m, 0, 0));
    out.add(MinimalSector(m, 0, 2 * n - 4));
    // D_4 has every leg of length 1 and both closed forms coincide.
    return out;
  }
  if (dist != 1) throw std::invalid_argument("d_series_theta: dist must be 1 or n-3");
  for (int k = 0; k <= 4 * (n / 2) - 4; k += 4) out.add(MinimalSector(m, 0, k));
  return out;
}

namespace {

Table41Instance table_instance(GraphKind g2kind, int tip, Execution exec) {
  const int m = coxeter_number(g2kind) - 1;
  const auto inv = make_vir_invariant(m, GraphKind::A(m - 1), 0, g2kind, tip);
  const auto fg = fusion_graph(inv, exec);
  const SectorAction action(fg, exec);
  return {g2kind, m, tip, action.theta(fg.distinguished)};
}

int tip_with_length(const DynkinGraph& g, int length) {
  for (const auto& leg : leg_tips(g))
    if (leg.length == length) return leg.tip;
  throw std::logic_error("no leg of length " + std::to_string(length) + " in " + g.kind().name());
}

}  // namespace

std::vector<Table41Row> table41(Execution exec) {
  std::vector<Table41Row> rows;

  Table41Row a{"A_n", "n+1", "-", "s(0,0)", {}, true};
  for (int n = 3; n <= 11; n += 2) {
    auto inst = table_instance(GraphKind::A(n), 0, exec);
    a.pattern_holds &= inst.theta == MinimalMultiset{{MinimalSector(inst.m, 0, 0), 1}};
    a.instances.push_back(std::move(inst));
  }
  rows.push_back(std::move(a));

  Table41Row d1{"D_n", "2n-2", "1", "s(0,0) + s(0,4) + s(0,8) + ... + s(0,4[n/2]-4)", {}, true};
  Table41Row dl{"D_n", "2n-2", "n-3", "s(0,0) + s(0,2n-4)", {}, true};
  for (int n = 4; n <= 12; ++n) {
    auto fork = table_instance(GraphKind::D(n), n - 2, exec);
    d1.pattern_holds &= fork.theta == d_series_theta(n, 1);
    d1.instances.push_back(std::move(fork));
    auto end = table_instance(GraphKind::D(n), 0, exec);
    dl.pattern_holds &= end.theta == d_series_theta(n, n - 3);
    dl.instances.push_back(std::move(end));
  }
  rows.push_back(std::move(d1));
  rows.push_back(std::move(dl));

  const std::pair<int, std::vector<int>> exceptional[] = {{6, {1, 2}}, {7, {1, 2, 3}}, {8, {1, 2, 4}}};
  for (const auto& [rank, lengths] : exceptional) {
    const auto kind = GraphKind::E(rank);
    const DynkinGraph g(kind);
    for (int len : lengths) {
      auto inst = table_instance(kind, tip_with_length(g, len), exec);
      Table41Row row{kind.name(), std::to_string(g.coxeter()), std::to_string(len),
                     to_string(inst.theta), {}, true};
      row.instances.push_back(std::move(inst));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace adenets
