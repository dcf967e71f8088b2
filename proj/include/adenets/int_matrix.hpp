#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adenets/execution.hpp"

namespace adenets {

/// Dense square matrix of 64-bit integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  static IntMatrix identity(int n);
  static IntMatrix permutation(std::span<const int> perm);  // row v has a 1 in column perm[v]

  int size() const { return n_; }

  std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }
  std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }

  std::span<const std::int64_t> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * n_, static_cast<std::size_t>(n_)};
  }

  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator*(const IntMatrix& rhs) const { return multiply(rhs, Execution::Serial); }
  IntMatrix multiply(const IntMatrix& rhs, Execution exec) const;
  IntMatrix transpose() const;

  bool operator==(const IntMatrix&) const = default;

  bool is_symmetric() const;
  bool is_nonnegative() const;
  /// If every row and column holds exactly one 1 (rest zero), returns the
  /// permutation v -> column of the 1 in row v; otherwise an empty vector.
  std::vector<int> as_permutation() const;

  std::string to_string() const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * n_ + c; }

  int n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Chebyshev family T_0 = I, T_1 = x, T_{j+1} = x T_j - T_{j-1}, for j < count.
std::vector<IntMatrix> chebyshev_family(const IntMatrix& generator, int count,
                                        Execution exec = Execution::Serial);

}  // namespace adenets
