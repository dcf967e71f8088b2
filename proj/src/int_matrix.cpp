#include "adenets/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace adenets {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::permutation(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  IntMatrix m(n);
  for (int v = 0; v < n; ++v) m(v, perm[v]) = 1;
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("IntMatrix: size mismatch");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("IntMatrix: size mismatch");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs, Execution exec) const {
  if (rhs.n_ != n_) throw std::invalid_argument("IntMatrix: size mismatch");
  IntMatrix out(n_);
  const int n = n_;
  // i-k-j loop order; rows of the result are independent.
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const std::int64_t a = (*this)(i, k);
        if (a == 0) continue;
        for (int j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const std::int64_t a = (*this)(i, k);
        if (a == 0) continue;
        for (int j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_nonnegative() const {
  for (auto x : data_)
    if (x < 0) return false;
  return true;
}

std::vector<int> IntMatrix::as_permutation() const {
  std::vector<int> perm(n_, -1);
  std::vector<int> col_hits(n_, 0);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      const auto x = (*this)(r, c);
      if (x == 0) continue;
      if (x != 1 || perm[r] != -1) return {};
      perm[r] = c;
      ++col_hits[c];
    }
    if (perm[r] == -1) return {};
  }
  for (int h : col_hits)
    if (h != 1) return {};
  return perm;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

std::vector<IntMatrix> chebyshev_family(const IntMatrix& generator, int count, Execution exec) {
  std::vector<IntMatrix> family;
  if (count <= 0) return family;
  family.reserve(count);
  family.push_back(IntMatrix::identity(generator.size()));
  if (count == 1) return family;
  family.push_back(generator);
  for (int j = 1; j + 1 < count; ++j)
    family.push_back(generator.multiply(family[j], exec) - family[j - 1]);
  return family;
}

}  // namespace adenets
