#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "wordlab/bigint.hpp"

namespace wordlab {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor);
  void add_col(std::size_t dst, std::size_t src, const BigInt& factor);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);

/// left * input * right == diagonal, diagonal entries non-negative and each
/// dividing the next; left and right unimodular.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::vector<BigInt> divisors;  // nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& m);

/// For antisymmetric A: transform * A * transform^T is block diagonal with
/// blocks [[0, d_i], [-d_i, 0]] (d_1 | d_2 | ..., all positive) followed by zeros.
struct SkewForm {
  IntMatrix canonical;
  IntMatrix transform;
  std::vector<BigInt> divisors;  // d_1..d_r
};

SkewForm skew_normal_form(const IntMatrix& antisymmetric);

/// Unimodular `transform` with row * transform == (d, 0, ..., 0), d = gcd >= 0.
struct RowGcdForm {
  BigInt gcd;
  IntMatrix transform;
};

RowGcdForm row_gcd_form(const std::vector<BigInt>& row);

}  // namespace wordlab
