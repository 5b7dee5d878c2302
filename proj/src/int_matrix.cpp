#include "wordlab/int_matrix.hpp"

#include <utility>

#include "wordlab/errors.hpp"

namespace wordlab {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Floor division; boost's operator/ truncates toward zero.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DomainError("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("matrix dimension mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

BigInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (!found || abs_big(a(i, j)) < best)) {
            found = true;
            best = abs_big(a(i, j));
            pi = i;
            pj = j;
          }
      if (!found) break;
      a.swap_rows(t, pi);
      left.swap_rows(t, pi);
      a.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = floor_div(a(i, t), a(t, t));
        a.add_row(i, t, -q);
        left.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = floor_div(a(t, j), a(t, t));
        a.add_col(j, t, -q);
        right.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row(t, i, 1);
            left.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) left(t, j) = -left(t, j);
    }
  }

  SmithForm out{a, left, right, {}};
  for (std::size_t t = 0; t < n; ++t)
    if (a(t, t) != 0) out.divisors.push_back(a(t, t));
  return out;
}

namespace {

// Congruence operations: each acts on rows and columns of `a` simultaneously
// and records the row operation in `u`, so u * A0 * u^T == a throughout.
struct Congruence {
  IntMatrix& a;
  IntMatrix& u;

  void swap(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
    u.swap_rows(i, j);
  }
  void add(std::size_t dst, std::size_t src, const BigInt& q) {
    a.add_row(dst, src, q);
    a.add_col(dst, src, q);
    u.add_row(dst, src, q);
  }
  void negate(std::size_t i) {
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = -a(i, j);
      a(j, i) = -a(j, i);
      u(i, j) = -u(i, j);
    }
  }
};

}  // namespace

SkewForm skew_normal_form(const IntMatrix& antisymmetric) {
  const std::size_t n = antisymmetric.rows();
  if (antisymmetric.cols() != n) throw DomainError("skew form needs a square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (antisymmetric(i, j) != -antisymmetric(j, i))
        throw DomainError("matrix is not antisymmetric");

  IntMatrix a = antisymmetric;
  IntMatrix u = IntMatrix::identity(n);
  Congruence op{a, u};
  std::vector<BigInt> divisors;

  for (std::size_t s = 0; s + 1 < n; s += 2) {
    bool any = false;
    while (true) {
      bool found = false;
      std::size_t pi = 0, pj = 0;
      BigInt best;
      for (std::size_t i = s; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0 && (!found || abs_big(a(i, j)) < best)) {
            found = true;
            best = abs_big(a(i, j));
            pi = i;
            pj = j;
          }
      if (!found) break;
      any = true;
      op.swap(s, pi);
      if (pj == s) pj = pi;
      op.swap(s + 1, pj);
      if (a(s, s + 1) < 0) op.negate(s + 1);
      const BigInt d = a(s, s + 1);

      bool clean = true;
      for (std::size_t l = s + 2; l < n; ++l) {
        if (a(s, l) != 0) {
          op.add(l, s + 1, -floor_div(a(s, l), d));
          if (a(s, l) != 0) clean = false;
        }
        if (a(s + 1, l) != 0) {
          op.add(l, s, floor_div(a(s + 1, l), d));
          if (a(s + 1, l) != 0) clean = false;
        }
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t l = s + 2; l < n && divisible; ++l)
        for (std::size_t m = l + 1; m < n; ++m)
          if (a(l, m) % d != 0) {
            op.add(s, l, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!any) break;
    divisors.push_back(a(s, s + 1));
  }
  return SkewForm{a, u, divisors};
}

RowGcdForm row_gcd_form(const std::vector<BigInt>& row) {
  const std::size_t k = row.size();
  IntMatrix t = IntMatrix::identity(k);
  if (k == 0) return {0, t};
  std::vector<BigInt> v = row;
  for (std::size_t j = 1; j < k; ++j) {
    // Euclid on columns 0 and j.
    while (v[j] != 0) {
      BigInt q = floor_div(v[0], v[j]);
      v[0] -= q * v[j];
      t.add_col(0, j, -q);
      std::swap(v[0], v[j]);
      t.swap_cols(0, j);
    }
  }
  if (v[0] < 0) {
    v[0] = -v[0];
    for (std::size_t i = 0; i < k; ++i) t(i, 0) = -t(i, 0);
  }
  return {v[0], t};
}

}  // namespace wordlab
