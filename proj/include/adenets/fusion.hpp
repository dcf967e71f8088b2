#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "adenets/dynkin.hpp"
#include "adenets/int_matrix.hpp"

namespace adenets {

/// Irreducible sector lambda_j of SU(2) at level k, 0 <= j <= k.
struct Su2Sector {
  int j = 0;
  int level = 0;

  Su2Sector() = default;
  Su2Sector(int j, int level);

  auto operator<=>(const Su2Sector&) const = default;
};

/// Irreducible sector sigma_{j,k} of the c<1 Virasoro net with
/// c = 1 - 6/(m(m+1)). Always stored as the canonical representative of
/// (j,k) ~ (m-2-j, m-1-k): smaller j, ties broken by smaller k.
class MinimalSector {
 public:
  MinimalSector(int m, int j, int k);

  static MinimalSector vacuum(int m) { return {m, 0, 0}; }

  int m() const { return m_; }
  int j() const { return j_; }
  int k() const { return k_; }

  /// The other label of the same sector, (m-2-j, m-1-k).
  std::pair<int, int> partner() const { return {m_ - 2 - j_, m_ - 1 - k_}; }

  auto operator<=>(const MinimalSector&) const = default;

 private:
  int m_, j_, k_;
};

/// Finite formal sum of sectors with positive multiplicities.
template <class Sector>
class SectorMultiset {
 public:
  SectorMultiset() = default;
  SectorMultiset(std::initializer_list<std::pair<const Sector, int>> init) {
    for (const auto& [s, n] : init) add(s, n);
  }

  void add(const Sector& s, int mult = 1) {
    if (mult < 0) throw std::invalid_argument("SectorMultiset: negative multiplicity");
    if (mult == 0) return;
    entries_[s] += mult;
  }

  int multiplicity(const Sector& s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<Sector, int>& entries() const { return entries_; }
  std::size_t distinct() const { return entries_.size(); }
  int total() const {
    int t = 0;
    for (const auto& e : entries_) t += e.second;
    return t;
  }
  bool empty() const { return entries_.empty(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const SectorMultiset&) const = default;

 private:
  std::map<Sector, int> entries_;
};

using Su2Multiset = SectorMultiset<Su2Sector>;
using MinimalMultiset = SectorMultiset<MinimalSector>;

/// Truncated Clebsch-Gordan rule at level k.
Su2Multiset su2_fuse(const Su2Sector& a, const Su2Sector& b);

/// Fusion in the minimal-model ring: product of the su(2) rules at levels
/// m-2 and m-1, folded onto canonical labels.
MinimalMultiset minimal_fuse(const MinimalSector& a, const MinimalSector& b);

/// Linear extension of minimal_fuse: (sum_i n_i s_i) x b.
MinimalMultiset minimal_fuse(const MinimalMultiset& lhs, const MinimalSector& b);

/// Statistical dimension of sigma_{j,k}.
double sector_dim(const MinimalSector& s);
double sector_dim(const MinimalMultiset& s);
double su2_dim(const Su2Sector& s);

/// All canonical sectors for m, ordered by (j,k). Size m(m-1)/2.
std::vector<MinimalSector> enumerate_sectors(int m);

/// Chebyshev family V_0..V_{h-2} of the adjacency of an A-D-E graph. Every
/// entry is a nonnegative integer and V_{h-2} is a permutation matrix.
class NimRep {
 public:
  NimRep(DynkinGraph graph, std::vector<IntMatrix> matrices)
      : graph_(std::move(graph)), matrices_(std::move(matrices)) {}

  const DynkinGraph& graph() const { return graph_; }
  const std::vector<IntMatrix>& matrices() const { return matrices_; }
  const IntMatrix& operator[](int j) const { return matrices_.at(j); }
  int count() const { return static_cast<int>(matrices_.size()); }
  /// V_{h-2}: the action of the simple sector of dimension 1.
  const IntMatrix& top() const { return matrices_.back(); }

 private:
  DynkinGraph graph_;
  std::vector<IntMatrix> matrices_;
};

/// Throws std::logic_error if a negative entry appears or V_{h-2} is not a
/// permutation; neither can happen for A-D-E input.
NimRep nimrep(const DynkinGraph& g, Execution exec = Execution::Serial);

std::string to_string(const MinimalSector& s);            // "s(0,6)"
std::string to_string(const MinimalMultiset& theta);       // "s(0,0) + 2*s(0,10)"
std::string to_string(const Su2Sector& s);                 // "l(4)"
std::string to_string(const Su2Multiset& theta);

}  // namespace adenets
