#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fistab/detail/checked.hpp"
#include "fistab/error.hpp"

namespace fistab {

enum class Ring { Integers, Rationals };

inline const char* ring_name(Ring r) { return r == Ring::Integers ? "Z" : "Q"; }

/// Dense matrix with exact entries over Z or Q.
///
/// Entries are stored as reduced fractions. Over the integers every
/// denominator is 1; `set` rejects non-integral values in that case.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(Ring ring, std::size_t n) {
    ExactMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
  }

  static ExactMatrix from_rows(Ring ring, std::initializer_list<std::initializer_list<mpq_class>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ExactMatrix m(ring, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionMismatch("from_rows: ragged rows");
      std::size_t j = 0;
      for (const auto& v : row) m.set(i, j++, v);
      ++i;
    }
    return m;
  }

  /// Column vector from a list of entries.
  static ExactMatrix column(Ring ring, const std::vector<mpq_class>& entries) {
    ExactMatrix m(ring, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
    return m;
  }

  Ring ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void set(std::size_t i, std::size_t j, mpq_class v) {
    v.canonicalize();
    if (ring_ == Ring::Integers && v.get_den() != 1)
      throw RingMismatch("non-integral entry " + v.get_str() + " in an integer matrix");
    data_[i * cols_ + j] = std::move(v);
  }

  std::span<const mpq_class> entries() const { return data_; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (sgn(v) != 0) return false;
    return true;
  }

  bool is_integral() const {
    for (const auto& v : data_)
      if (v.get_den() != 1) return false;
    return true;
  }

  ExactMatrix with_ring(Ring ring) const {
    if (ring == ring_) return *this;
    if (ring == Ring::Integers && !is_integral())
      throw RingMismatch("cannot view a non-integral rational matrix over Z");
    ExactMatrix m = *this;
    m.ring_ = ring;
    return m;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
  }

  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    ExactMatrix b(ring_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b.data_[i * nc + j] = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("set_block out of range");
    if (b.ring_ != ring_) throw RingMismatch("set_block: ring mismatch");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] = b(i, j);
  }

  /// Rows listed in `idx`, in that order.
  ExactMatrix select_rows(std::span<const std::size_t> idx) const {
    ExactMatrix m(ring_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.data_[i * cols_ + j] = (*this)(idx[i], j);
    return m;
  }

  ExactMatrix select_cols(std::span<const std::size_t> idx) const {
    ExactMatrix m(ring_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m.data_[i * idx.size() + j] = (*this)(i, idx[j]);
    return m;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += (*this)(i, j).get_str();
      }
      s += "]\n";
    }
    return s;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    check_same_shape(a, b);
    ExactMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
      if (sgn(b.data_[k]) != 0) c.data_[k] += b.data_[k];
    return c;
  }

  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    check_same_shape(a, b);
    ExactMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
      if (sgn(b.data_[k]) != 0) c.data_[k] -= b.data_[k];
    return c;
  }

  friend ExactMatrix operator-(const ExactMatrix& a) {
    ExactMatrix c = a;
    for (auto& v : c.data_) v = -v;
    return c;
  }

  friend ExactMatrix operator*(const mpq_class& s, const ExactMatrix& a) {
    ExactMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.set(k / c.cols_, k % c.cols_, s * a.data_[k]);
    return c;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.ring_ != b.ring_) throw RingMismatch("matrix product across rings");
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                              " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    if (a.is_integral() && b.is_integral()) {
      try {
        return multiply_small(a, b);
      } catch (const detail::Overflow&) {
      }
    }
    ExactMatrix c(a.ring_, a.rows_, b.cols_);
    mpq_class t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const mpq_class& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const mpq_class& bkj = b(k, j);
          if (sgn(bkj) == 0) continue;
          t = aik * bkj;
          c.data_[i * b.cols_ + j] += t;
        }
      }
    return c;
  }

 private:
  static void check_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.ring_ != b.ring_) throw RingMismatch("matrix sum across rings");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  }

  // Integral product through checked int64; throws Overflow when entries or
  // partial sums do not fit.
  static ExactMatrix multiply_small(const ExactMatrix& a, const ExactMatrix& b) {
    auto narrow = [](const ExactMatrix& m) {
      std::vector<std::int64_t> v(m.data_.size());
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = detail::from_mpz<std::int64_t>(m.data_[k].get_num());
      return v;
    };
    const auto av = narrow(a);
    const auto bv = narrow(b);
    std::vector<std::int64_t> cv(a.rows_ * b.cols_, 0);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        std::int64_t aik = av[i * a.cols_ + k];
        if (aik == 0) continue;
        const std::int64_t* brow = &bv[k * b.cols_];
        std::int64_t* crow = &cv[i * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (brow[j] != 0) detail::addmul(crow[j], aik, brow[j]);
      }
    ExactMatrix c(a.ring_, a.rows_, b.cols_);
    for (std::size_t k = 0; k < cv.size(); ++k)
      if (cv[k] != 0) c.data_[k] = mpq_class(detail::to_mpz(cv[k]));
    return c;
  }

  Ring ring_ = Ring::Integers;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

inline std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  return os << ring_name(m.ring()) << " " << m.rows() << "x" << m.cols() << "\n" << m.to_string();
}

/// Block-diagonal sum.
inline ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.ring() != b.ring()) throw RingMismatch("direct_sum across rings");
  ExactMatrix m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

inline ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  if (a.ring() != b.ring()) throw RingMismatch("hstack across rings");
  ExactMatrix m(a.ring(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

inline ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  if (a.ring() != b.ring()) throw RingMismatch("vstack across rings");
  ExactMatrix m(a.ring(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

}  // namespace fistab
