#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <numeric>
#include <vector>

#include "fistab/detail/checked.hpp"
#include "fistab/matrix.hpp"

namespace fistab::detail {

/// Row-major integer matrix used inside the elimination kernels.
template <class T>
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  T& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols; ++k) std::swap(at(i, k), at(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap(at(k, i), at(k, j));
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const T& q) {
    for (std::size_t k = 0; k < cols; ++k)
      if (!is_zero(at(j, k))) addmul(at(i, k), q, at(j, k));
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const T& q) {
    for (std::size_t k = 0; k < rows; ++k)
      if (!is_zero(at(k, j))) addmul(at(k, i), q, at(k, j));
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols; ++k) at(i, k) = neg(at(i, k));
  }
  void negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows; ++k) at(k, i) = neg(at(k, i));
  }
  // (row_i, row_j) <- (p row_i + q row_j, r row_i + s row_j)
  void mix_rows(std::size_t i, std::size_t j, const T& p, const T& q, const T& r, const T& s) {
    for (std::size_t k = 0; k < cols; ++k) {
      T a = at(i, k), b = at(j, k);
      at(i, k) = add(mul(p, a), mul(q, b));
      at(j, k) = add(mul(r, a), mul(s, b));
    }
  }
  // (col_i, col_j) <- (p col_i + r col_j, q col_i + s col_j), i.e. right
  // multiplication by [[p, q], [r, s]] on columns (i, j).
  void mix_cols(std::size_t i, std::size_t j, const T& p, const T& q, const T& r, const T& s) {
    for (std::size_t k = 0; k < rows; ++k) {
      T a = at(k, i), b = at(k, j);
      at(k, i) = add(mul(p, a), mul(r, b));
      at(k, j) = add(mul(q, a), mul(s, b));
    }
  }
};

inline mpz_class lcm_of_denominators_row(const ExactMatrix& m, std::size_t i) {
  mpz_class l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  return l;
}

inline mpz_class lcm_of_denominators_col(const ExactMatrix& m, std::size_t j) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  return l;
}

/// Integer matrix with the same kernel (and row space over Q) as `m`:
/// every row is scaled by the lcm of its denominators.
template <class T>
IntMatrix<T> integer_rows(const ExactMatrix& m) {
  IntMatrix<T> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = lcm_of_denominators_row(m, i);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& v = m(i, j);
      if (sgn(v) == 0) continue;
      mpz_class z = v.get_num() * (l / v.get_den());
      r.at(i, j) = from_mpz<T>(z);
    }
  }
  return r;
}

/// Integer matrix with the same column space over Q as `m`: every column is
/// scaled by the lcm of its denominators.
template <class T>
IntMatrix<T> integer_cols(const ExactMatrix& m) {
  IntMatrix<T> r(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_class l = lcm_of_denominators_col(m, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const mpq_class& v = m(i, j);
      if (sgn(v) == 0) continue;
      mpz_class z = v.get_num() * (l / v.get_den());
      r.at(i, j) = from_mpz<T>(z);
    }
  }
  return r;
}

template <class T>
ExactMatrix to_exact(const IntMatrix<T>& m, Ring ring) {
  ExactMatrix e(ring, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!is_zero(m.at(i, j))) e.set(i, j, mpq_class(to_mpz(m.at(i, j))));
  return e;
}

}  // namespace fistab::detail
