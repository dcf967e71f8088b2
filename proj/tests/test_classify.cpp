#include <doctest.h>

#include <set>
#include <stdexcept>
#include <tuple>

#include "adenets/classify.hpp"

using namespace adenets;

namespace {

// Orbit counts under the full automorphism group.
int orbit_count(GraphKind k) {
  switch (k.family) {
    case Family::A: return (k.rank + 1) / 2;
    case Family::D: return k.rank == 4 ? 2 : k.rank - 1;
    case Family::E: return k.rank == 6 ? 4 : k.rank;
    default: return 0;
  }
}

// Minimal-PF vertex in the canonical labeling: the end of the longest leg.
int min_pf_vertex(GraphKind k) {
  if (k.family == Family::E) return k.rank == 8 ? 6 : k.rank == 7 ? 5 : 0;
  return 0;
}

using Key = std::tuple<int, std::string, int, std::string, int>;

// The seven families, listed directly.
std::set<Key> local_oracle(int max_m) {
  std::set<Key> out;
  auto add = [&](int m, GraphKind g1, GraphKind g2) {
    if (m <= max_m) out.insert({m, g1.name(), min_pf_vertex(g1), g2.name(), min_pf_vertex(g2)});
  };
  for (int m = 3; m <= max_m; ++m) add(m, GraphKind::A(m - 1), GraphKind::A(m));
  for (int n = 1; 4 * n + 1 <= max_m; ++n) {
    add(4 * n + 1, GraphKind::A(4 * n), GraphKind::D(2 * n + 2));
    add(4 * n + 2, GraphKind::D(2 * n + 2), GraphKind::A(4 * n + 2));
  }
  add(11, GraphKind::A(10), GraphKind::E(6));
  add(12, GraphKind::E(6), GraphKind::A(12));
  add(29, GraphKind::A(28), GraphKind::E(8));
  add(30, GraphKind::E(8), GraphKind::A(30));
  return out;
}

}  // namespace

TEST_CASE("SU(2) invariants are counted by vertex orbits") {
  for (int level = 1; level <= 40; ++level) {
    int expected = 0;
    for (auto k : graphs_with_coxeter(level + 2)) expected += orbit_count(k);
    const auto invs = enumerate_su2(level);
    CHECK(static_cast<int>(invs.size()) == expected);
    for (const auto& inv : invs) {
      CHECK(inv.level == level);
      CHECK(inv.graph.coxeter() == level + 2);
    }
  }
}

TEST_CASE("Virasoro invariants: counts and ordering") {
  CHECK(enumerate_vir(3).size() == 2);
  const auto m4 = enumerate_vir(4);
  REQUIRE(m4.size() == 4);
  CHECK(m4[0].g1.kind() == GraphKind::A(3));
  CHECK(m4[0].g2.kind() == GraphKind::A(4));
  for (int m = 3; m <= 31; ++m) {
    int n1 = 0, n2 = 0;
    for (auto k : graphs_with_coxeter(m)) n1 += orbit_count(k);
    for (auto k : graphs_with_coxeter(m + 1)) n2 += orbit_count(k);
    const auto invs = enumerate_vir(m);
    CHECK(static_cast<int>(invs.size()) == n1 * n2);
    for (std::size_t i = 1; i < invs.size(); ++i) {
      const auto& a = invs[i - 1];
      const auto& b = invs[i];
      CHECK(std::make_tuple(a.g1.kind(), a.orbit1, a.g2.kind(), a.orbit2) <
            std::make_tuple(b.g1.kind(), b.orbit1, b.g2.kind(), b.orbit2));
    }
  }
  // m=11 has A10 on the left and A11, D7, E6 on the right
  CHECK(enumerate_vir(11).size() == 5 * (6 + 6 + 4));
}

TEST_CASE("validating constructors") {
  const auto inv = make_vir_invariant(4, GraphKind::A(3), 2, GraphKind::A(4), 3);
  CHECK(inv.orbit1 == VertexOrbit{0, 2});
  CHECK(inv.orbit2 == VertexOrbit{0, 3});
  CHECK(inv.v1() == 0);
  CHECK_THROWS_AS(make_vir_invariant(4, GraphKind::A(4), 0, GraphKind::A(4), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_vir_invariant(4, GraphKind::A(3), 3, GraphKind::A(4), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_vir_invariant(5, GraphKind::A(4), 0, GraphKind::Tadpole(2), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_su2_invariant(4, GraphKind::A(4), 0), std::invalid_argument);
  CHECK(make_su2_invariant(4, GraphKind::D(4), 3).orbit == VertexOrbit{0, 2, 3});
}

TEST_CASE("enumeration limits") {
  Limits small{10};
  CHECK(enumerate_vir(9, small).size() > 0);
  CHECK_THROWS_AS(enumerate_vir(10, small), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_su2(9, small), std::invalid_argument);
}

TEST_CASE("known local extensions match the seven families") {
  std::set<Key> got;
  for (int m = 3; m <= 30; ++m)
    for (const auto& inv : enumerate_vir(m))
      if (is_known_local(inv))
        got.insert({m, inv.g1.kind().name(), inv.v1(), inv.g2.kind().name(), inv.v2()});
  CHECK(got == local_oracle(30));

  CHECK(is_known_local(make_vir_invariant(4, GraphKind::A(3), 0, GraphKind::A(4), 0)));
  CHECK_FALSE(is_known_local(make_vir_invariant(4, GraphKind::A(3), 1, GraphKind::A(4), 0)));
  CHECK(is_known_local(make_vir_invariant(5, GraphKind::A(4), 0, GraphKind::D(4), 2)));
}

TEST_CASE("minimal PF orbits") {
  const DynkinGraph e7(GraphKind::E(7));
  CHECK(is_min_pf_orbit(e7, {5}));
  CHECK_FALSE(is_min_pf_orbit(e7, {0}));
  CHECK(is_min_pf_orbit(DynkinGraph(GraphKind::D(4)), {0, 2, 3}));
}

TEST_CASE("Bratteli diagrams reproduce binomial path counts away from the ends") {
  // On a long path, walks from vertex 0 never reach the far end within the
  // depth, so level d at vertex x counts reflected lattice paths:
  // C(d, (d-x)/2) - C(d, (d-x)/2 - 1).
  auto binom = [](int n, int k) -> std::int64_t {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  const DynkinGraph a(GraphKind::A(30));
  const auto b = bratteli(a, 0, 12);
  REQUIRE(b.depth() == 12);
  for (int d = 0; d <= 12; ++d)
    for (int x = 0; x < 30; ++x) {
      const std::int64_t expected =
          (d - x) % 2 || x > d ? 0 : binom(d, (d - x) / 2) - binom(d, (d - x) / 2 - 1);
      CHECK(b.levels[d][x] == expected);
    }
  CHECK(bratteli(DynkinGraph(GraphKind::E(6)), 0).depth() == 24);
}
