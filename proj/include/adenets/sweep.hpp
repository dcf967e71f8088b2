#pragma once

#include <string>
#include <vector>

#include "adenets/execution.hpp"
#include "adenets/numcheck.hpp"

namespace adenets {

// Verification sweeps. Each one has an OpenMP path and a serial reference
// path; results are stored by item index so the output order never depends
// on the schedule.

/// Nontrivial tau-automorphism expected for A_n (n >= 2), E6 and D_odd.
bool expected_tau_nontrivial(GraphKind kind);

struct NimrepCheck {
  GraphKind kind;
  int coxeter = 0;
  bool nonnegative = false;
  bool permutation = false;
  bool tau_nontrivial = false;
  std::string error;

  bool ok() const {
    return error.empty() && nonnegative && permutation &&
           tau_nontrivial == expected_tau_nontrivial(kind);
  }
  bool operator==(const NimrepCheck&) const = default;
};

/// Every A-D-E graph with Coxeter number 2 <= h <= max_h.
std::vector<NimrepCheck> nimrep_sweep(int max_h, Execution exec);

/// lemma_disjointness for every odd 1 <= m <= max_m and every eligible graph.
std::vector<DisjointnessReport> lemma_sweep(int max_m, double tol, Execution exec);

/// Structural checks on one fusion graph (one pair G1, G2 at level m).
/// Every invariant with these graphs sits at one of the classes, so the
/// per-class checks cover all of them.
struct ThetaCheck {
  int m = 0;
  GraphKind g1;
  GraphKind g2;
  int classes = 0;
  int invariants = 0;
  bool vacuum_once = false;        // sigma_{0,0} has multiplicity 1 at every class
  bool identified_agree = false;   // both labels of every sector agree
  bool symmetric = false;          // every T_j(H) T_k(V) is symmetric
  double dim_deviation = 0;        // see dim_consistency
  int shift_checked = 0;
  int shift_mismatches = 0;
  std::string error;

  bool ok(double dim_tol = 1e-8) const {
    return error.empty() && vacuum_once && identified_agree && symmetric &&
           dim_deviation <= dim_tol && shift_mismatches == 0;
  }
};

struct ThetaSweepOptions {
  bool symmetry = true;
  bool shift = true;
};

std::vector<ThetaCheck> theta_sweep(int max_m, Execution exec, ThetaSweepOptions opts = {});

/// Largest |d(a) d(b) - sum_c N_ab^c d(c)| over all sector pairs, 3 <= m <= max_m.
double fusion_dim_sweep(int max_m, Execution exec);

}  // namespace adenets
