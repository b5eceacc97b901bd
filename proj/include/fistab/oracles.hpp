#pragma once

// Slow reference computations used by the test suites and the verification
// battery. Nothing in the library proper depends on this header.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "fistab/matrix.hpp"

namespace fistab::oracle {

/// Rank by fraction-free (Bareiss) elimination.
inline std::size_t bareiss_rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // clear denominators row by row; rank is unchanged
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Diagonal, nonnegative, zeros last, each nonzero entry dividing the next.
inline bool is_smith_form(const ExactMatrix& s) {
  mpz_class prev = 0;
  bool zero_seen = false;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const mpq_class& v = s(i, j);
      if (i != j) {
        if (v != 0) return false;
        continue;
      }
      if (v == 0) {
        zero_seen = true;
        continue;
      }
      if (zero_seen || v < 0) return false;
      if (prev != 0 && !mpz_divisible_p(v.get_num_mpz_t(), prev.get_mpz_t())) return false;
      prev = v.get_num();
    }
  return true;
}

/// Determinant by Bareiss elimination.
inline mpq_class determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  mpq_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return n == 0 ? mpq_class(1) : mpq_class(sign * a[n - 1][n - 1]);
}

/// Calls `visit` with every set partition of {0..n-1}, as a list of block
/// bitmasks, by walking restricted growth strings.
inline void for_each_set_partition(unsigned n, const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (n == 0) {
    visit({});
    return;
  }
  std::vector<unsigned> a(n, 0), b(n, 1);  // b[i] = 1 + max(a[0..i-1])
  std::vector<std::uint32_t> blocks;
  for (;;) {
    unsigned nblocks = 0;
    for (unsigned i = 0; i < n; ++i) nblocks = std::max(nblocks, a[i] + 1);
    blocks.assign(nblocks, 0);
    for (unsigned i = 0; i < n; ++i) blocks[a[i]] |= 1u << i;
    visit(blocks);
    // next restricted growth string
    int i = static_cast<int>(n) - 1;
    while (i > 0 && a[i] == b[i]) --i;
    if (i <= 0) return;
    ++a[i];
    for (unsigned j = i + 1; j < n; ++j) {
      a[j] = 0;
      b[j] = std::max(b[j - 1], a[j - 1] + 1);
    }
  }
}

}  // namespace fistab::oracle
