#include "adenets/render.hpp"

#include <cmath>
#include <sstream>

namespace adenets {

namespace {

// D4 orbits are taken under the full S3 symmetry, which merges all three tips.
bool s3_orbit(const DynkinGraph& g, const VertexOrbit& orbit) {
  return g.kind() == GraphKind::D(4) && orbit.size() == 3;
}

}  // namespace

Json to_json(const MinimalMultiset& theta) {
  Json out = Json::array();
  for (const auto& [s, n] : theta) out.push_back({{"j", s.j()}, {"k", s.k()}, {"mult", n}});
  return out;
}

Json to_json(const Su2Multiset& theta) {
  Json out = Json::array();
  for (const auto& [s, n] : theta) out.push_back({{"j", s.j}, {"mult", n}});
  return out;
}

Json to_json(const std::vector<NormalizedTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back({{"a", t.a}, {"b", t.b}, {"mult", t.mult}});
  return out;
}

Json to_json(const Su2Invariant& inv) {
  Json out = {{"level", inv.level},
              {"graph", inv.graph.kind().name()},
              {"v", inv.vertex()},
              {"orbit", inv.orbit},
              {"coxeter", inv.graph.coxeter()}};
  if (s3_orbit(inv.graph, inv.orbit)) out["d4_s3_orbit"] = true;
  return out;
}

Json to_json(const VirInvariant& inv) {
  Json out = {{"m", inv.m},
          {"g1", inv.g1.kind().name()},
          {"v1", inv.v1()},
          {"orbit1", inv.orbit1},
          {"coxeter1", inv.g1.coxeter()},
          {"g2", inv.g2.kind().name()},
          {"v2", inv.v2()},
          {"orbit2", inv.orbit2},
          {"coxeter2", inv.g2.coxeter()},
          {"known_local", is_known_local(inv)}};
  if (s3_orbit(inv.g1, inv.orbit1) || s3_orbit(inv.g2, inv.orbit2)) out["d4_s3_orbit"] = true;
  return out;
}

Json to_json(const BratteliDiagram& b) {
  return {{"depth", b.depth()}, {"levels", b.levels}};
}

Json to_json(const DisjointnessReport& r) {
  Json sep = std::isinf(r.min_separation) ? Json(nullptr) : Json(r.min_separation);
  return {{"m", r.m},
          {"graph", r.graph.name()},
          {"ratio_count", r.ratio_set.size()},
          {"d_count", r.d_set.size()},
          {"min_separation", sep},
          {"disjoint", r.disjoint}};
}

Json to_json(const NimrepCheck& c) {
  Json out = {{"graph", c.kind.name()},
              {"coxeter", c.coxeter},
              {"nonnegative", c.nonnegative},
              {"permutation", c.permutation},
              {"tau_nontrivial", c.tau_nontrivial},
              {"expected_nontrivial", expected_tau_nontrivial(c.kind)},
              {"ok", c.ok()}};
  if (!c.error.empty()) out["error"] = c.error;
  return out;
}

Json to_json(const ThetaCheck& c) {
  Json out = {{"m", c.m},
              {"g1", c.g1.name()},
              {"g2", c.g2.name()},
              {"classes", c.classes},
              {"invariants", c.invariants},
              {"vacuum_once", c.vacuum_once},
              {"identified_agree", c.identified_agree},
              {"symmetric", c.symmetric},
              {"dim_deviation", c.dim_deviation},
              {"shift_checked", c.shift_checked},
              {"shift_mismatches", c.shift_mismatches},
              {"ok", c.ok()}};
  if (!c.error.empty()) out["error"] = c.error;
  return out;
}

Json to_json(const Table41Row& row) {
  Json inst = Json::array();
  for (const auto& i : row.instances)
    inst.push_back({{"g2", i.g2.name()}, {"m", i.m}, {"tip", i.tip}, {"theta", to_json(i.theta)}});
  return {{"g2", row.g2},
          {"coxeter", row.coxeter},
          {"dist", row.distance},
          {"theta", row.theta},
          {"pattern_holds", row.pattern_holds},
          {"instances", inst}};
}

Json theta_json(const VirInvariant& inv, const FusionGraph& fg, const CanonicalEndo& endo,
                const OrbitGraph& vertical) {
  return {{"invariant", to_json(inv)},
          {"classes", fg.size()},
          {"distinguished_class", {fg.classes[fg.distinguished].first,
                                   fg.classes[fg.distinguished].second}},
          {"theta", to_json(endo.theta)},
          {"theta_dim", sector_dim(endo.theta)},
          {"swapped", endo.swapped},
          {"theta_normalized", to_json(endo.normalized)},
          {"known_local", is_known_local(inv)},
          {"vertical_orbit", vertical.kind.name()},
          {"vertical_orbit_size", vertical.size},
          {"vertical_orbit_position", vertical.distinguished}};
}

std::string to_dot(const FusionGraph& fg) {
  std::ostringstream os;
  os << "graph fusion_" << fg.g1.kind().name() << "_" << fg.g2.kind().name() << " {\n";
  for (int c = 0; c < fg.size(); ++c) {
    const auto [v1, v2] = fg.classes[c];
    os << "  c" << c << " [label=\"(" << v1 << "," << v2 << ")\"";
    if (c == fg.distinguished) os << ", shape=doublecircle";
    os << "];\n";
  }
  auto edges = [&](const IntMatrix& a, const char* style) {
    for (int c = 0; c < fg.size(); ++c)
      for (int d = c; d < fg.size(); ++d)
        for (std::int64_t e = 0; e < a(c, d); ++e)
          os << "  c" << c << " -- c" << d << " [style=" << style << "];\n";
  };
  edges(fg.horizontal, "solid");
  edges(fg.vertical, "dashed");
  os << "}\n";
  return os.str();
}

}  // namespace adenets
