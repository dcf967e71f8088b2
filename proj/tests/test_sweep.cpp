#include <doctest.h>

#include "adenets/sweep.hpp"

using namespace adenets;

TEST_CASE("nimrep sweep: parallel matches serial and every graph passes") {
  const auto serial = nimrep_sweep(30, Execution::Serial);
  const auto parallel = nimrep_sweep(30, Execution::Parallel);
  CHECK(serial == parallel);
  int count = 0;
  for (int h = 2; h <= 30; ++h) count += static_cast<int>(graphs_with_coxeter(h).size());
  CHECK(static_cast<int>(serial.size()) == count);
  for (const auto& c : serial) {
    CAPTURE(c.kind.name());
    CHECK(c.ok());
  }
}

TEST_CASE("expected tau pattern") {
  CHECK_FALSE(expected_tau_nontrivial(GraphKind::A(1)));
  CHECK(expected_tau_nontrivial(GraphKind::A(2)));
  CHECK(expected_tau_nontrivial(GraphKind::D(5)));
  CHECK_FALSE(expected_tau_nontrivial(GraphKind::D(6)));
  CHECK(expected_tau_nontrivial(GraphKind::E(6)));
  CHECK_FALSE(expected_tau_nontrivial(GraphKind::E(7)));
  CHECK_FALSE(expected_tau_nontrivial(GraphKind::E(8)));
}

TEST_CASE("lemma sweep: parallel matches serial") {
  const auto serial = lemma_sweep(45, 1e-9, Execution::Serial);
  const auto parallel = lemma_sweep(45, 1e-9, Execution::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].m == parallel[i].m);
    CHECK(serial[i].graph == parallel[i].graph);
    CHECK(serial[i].ratio_set == parallel[i].ratio_set);
    CHECK(serial[i].min_separation == parallel[i].min_separation);
    CHECK(serial[i].disjoint);
  }
}

TEST_CASE("theta sweep: parallel matches serial and every check passes") {
  const auto serial = theta_sweep(11, Execution::Serial);
  const auto parallel = theta_sweep(11, Execution::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CAPTURE(serial[i].g1.name());
    CAPTURE(serial[i].g2.name());
    CHECK(serial[i].m == parallel[i].m);
    CHECK(serial[i].classes == parallel[i].classes);
    CHECK(serial[i].shift_checked == parallel[i].shift_checked);
    CHECK(serial[i].dim_deviation == parallel[i].dim_deviation);
    CHECK(serial[i].ok());
    CHECK(serial[i].shift_checked > 0);
  }
}

TEST_CASE("fusion dimension sweep") {
  CHECK(fusion_dim_sweep(12, Execution::Serial) <= 1e-9);
  CHECK(fusion_dim_sweep(12, Execution::Parallel) == fusion_dim_sweep(12, Execution::Serial));
}
