#include "adenets/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace adenets {

Su2Sector::Su2Sector(int j_, int level_) : j(j_), level(level_) {
  if (level < 0 || j < 0 || j > level)
    throw std::invalid_argument("Su2Sector: need 0 <= j <= level, got j=" + std::to_string(j) +
                                " level=" + std::to_string(level));
}

MinimalSector::MinimalSector(int m, int j, int k) : m_(m), j_(j), k_(k) {
  if (m < 3) throw std::invalid_argument("MinimalSector: m must be >= 3");
  if (j < 0 || j > m - 2 || k < 0 || k > m - 1)
    throw std::invalid_argument("MinimalSector: label (" + std::to_string(j) + "," +
                                std::to_string(k) + ") out of range for m=" + std::to_string(m));
  const int pj = m - 2 - j, pk = m - 1 - k;
  if (pj < j || (pj == j && pk < k)) {
    j_ = pj;
    k_ = pk;
  }
}

namespace {

// Multiplicity of lambda_c in lambda_a x lambda_b at level k (0 or 1).
int su2_coefficient(int a, int b, int c, int level) {
  if ((a + b + c) % 2 != 0) return 0;
  return (c >= std::abs(a - b) && c <= std::min(a + b, 2 * level - a - b)) ? 1 : 0;
}

}  // namespace

Su2Multiset su2_fuse(const Su2Sector& a, const Su2Sector& b) {
  if (a.level != b.level) throw std::invalid_argument("su2_fuse: level mismatch");
  Su2Multiset out;
  for (int c = 0; c <= a.level; ++c)
    if (su2_coefficient(a.j, b.j, c, a.level)) out.add(Su2Sector(c, a.level));
  return out;
}

MinimalMultiset minimal_fuse(const MinimalSector& a, const MinimalSector& b) {
  if (a.m() != b.m()) throw std::invalid_argument("minimal_fuse: m mismatch");
  const int m = a.m();
  // Each canonical result c collects the grid coefficients at both of its
  // labels. By the parity rule at most one of the two is nonzero.
  std::map<MinimalSector, std::pair<int, int>> hits;
  for (int c1 = 0; c1 <= m - 2; ++c1) {
    const int n1 = su2_coefficient(a.j(), b.j(), c1, m - 2);
    if (n1 == 0) continue;
    for (int c2 = 0; c2 <= m - 1; ++c2) {
      const int n2 = su2_coefficient(a.k(), b.k(), c2, m - 1);
      if (n2 == 0) continue;
      MinimalSector c(m, c1, c2);
      auto& slot = hits[c];
      (c.j() == c1 && c.k() == c2 ? slot.first : slot.second) += n1 * n2;
    }
  }
  MinimalMultiset out;
  for (const auto& [c, pair] : hits) {
    if (pair.first != 0 && pair.second != 0)
      throw std::logic_error("minimal_fuse: both labels of " + to_string(c) + " were hit");
    out.add(c, pair.first + pair.second);
  }
  return out;
}

MinimalMultiset minimal_fuse(const MinimalMultiset& lhs, const MinimalSector& b) {
  MinimalMultiset out;
  for (const auto& [s, n] : lhs)
    for (const auto& [c, nc] : minimal_fuse(s, b)) out.add(c, n * nc);
  return out;
}

namespace {

double quantum_integer(int n, int h) {
  return std::sin(n * std::numbers::pi / h) / std::sin(std::numbers::pi / h);
}

}  // namespace

double sector_dim(const MinimalSector& s) {
  return quantum_integer(s.j() + 1, s.m()) * quantum_integer(s.k() + 1, s.m() + 1);
}

double sector_dim(const MinimalMultiset& s) {
  double d = 0;
  for (const auto& [sec, n] : s) d += n * sector_dim(sec);
  return d;
}

double su2_dim(const Su2Sector& s) { return quantum_integer(s.j + 1, s.level + 2); }

std::vector<MinimalSector> enumerate_sectors(int m) {
  if (m < 3) throw std::invalid_argument("enumerate_sectors: m must be >= 3");
  std::vector<MinimalSector> out;
  for (int j = 0; j <= m - 2; ++j)
    for (int k = 0; k <= m - 1; ++k) {
      MinimalSector s(m, j, k);
      if (s.j() == j && s.k() == k) out.push_back(s);
    }
  return out;
}

NimRep nimrep(const DynkinGraph& g, Execution exec) {
  if (!g.kind().is_ade()) throw std::invalid_argument("nimrep: tadpole graphs are not supported");
  const int h = g.coxeter();
  auto family = chebyshev_family(g.adjacency(), h - 1, exec);
  for (int j = 0; j < static_cast<int>(family.size()); ++j)
    if (!family[j].is_nonnegative())
      throw std::logic_error("nimrep: negative entry in V_" + std::to_string(j) + " of " +
                             g.kind().name());
  if (family.back().as_permutation().empty())
    throw std::logic_error("nimrep: V_{h-2} is not a permutation for " + g.kind().name());
  return NimRep(g, std::move(family));
}

std::string to_string(const MinimalSector& s) {
  return "s(" + std::to_string(s.j()) + "," + std::to_string(s.k()) + ")";
}

std::string to_string(const Su2Sector& s) { return "l(" + std::to_string(s.j) + ")"; }

namespace {

template <class Multiset>
std::string join_terms(const Multiset& ms) {
  if (ms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, n] : ms) {
    if (!first) os << " + ";
    first = false;
    if (n != 1) os << n << '*';
    os << to_string(s);
  }
  return os.str();
}

}  // namespace

std::string to_string(const MinimalMultiset& theta) { return join_terms(theta); }
std::string to_string(const Su2Multiset& theta) { return join_terms(theta); }

}  // namespace adenets
