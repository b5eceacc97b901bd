#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "fistab/detail/int_matrix.hpp"

namespace fistab::detail {

/// Smith normal form by row/column reduction with minimal-magnitude pivots.
///
/// Maintains U * A0 * V = A. When tracking is on, the inverses of U and V are
/// updated alongside, so callers get bases for kernels, images and cokernels
/// together with their one-sided inverses.
template <class T>
class SmithEngine {
 public:
  SmithEngine(IntMatrix<T> m, bool track_u, bool track_v)
      : a(std::move(m)), track_u_(track_u), track_v_(track_v) {
    if (track_u_) {
      u = IntMatrix<T>::identity(a.rows);
      uinv = u;
    }
    if (track_v_) {
      v = IntMatrix<T>::identity(a.cols);
      vinv = v;
    }
  }

  void run() {
    reduce_to_diagonal();
    fix_divisibility();
    for (std::size_t i = 0; i < rank; ++i)
      if (sign_of(a.at(i, i)) < 0) row_neg(i);
  }

  IntMatrix<T> a, u, uinv, v, vinv;
  std::size_t rank = 0;

 private:
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    if (track_u_) {
      u.swap_rows(i, j);
      uinv.swap_cols(i, j);
    }
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_cols(i, j);
    if (track_v_) {
      v.swap_cols(i, j);
      vinv.swap_rows(i, j);
    }
  }
  // row_i += q row_j
  void row_add(std::size_t i, std::size_t j, const T& q) {
    a.add_row(i, j, q);
    if (track_u_) {
      u.add_row(i, j, q);
      uinv.add_col(j, i, neg(q));
    }
  }
  // col_i += q col_j
  void col_add(std::size_t i, std::size_t j, const T& q) {
    a.add_col(i, j, q);
    if (track_v_) {
      v.add_col(i, j, q);
      vinv.add_row(j, i, neg(q));
    }
  }
  void row_neg(std::size_t i) {
    a.negate_row(i);
    if (track_u_) {
      u.negate_row(i);
      uinv.negate_col(i);
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a.rows; ++i)
      for (std::size_t j = t; j < a.cols; ++j) {
        const T& x = a.at(i, j);
        if (is_zero(x)) continue;
        if (is_unit(x)) return std::pair{i, j};
        if (!best || abs_less(x, a.at(best->first, best->second))) best = std::pair{i, j};
      }
    return best;
  }

  void reduce_to_diagonal() {
    const std::size_t limit = std::min(a.rows, a.cols);
    std::size_t t = 0;
    for (; t < limit; ++t) {
      auto piv = find_pivot(t);
      if (!piv) break;
      row_swap(t, piv->first);
      col_swap(t, piv->second);
      for (;;) {
        // clear column t below the pivot
        std::optional<std::size_t> smallest;
        for (std::size_t i = t + 1; i < a.rows; ++i) {
          if (is_zero(a.at(i, t))) continue;
          T q = quot(a.at(i, t), a.at(t, t));
          if (!is_zero(q)) row_add(i, t, neg(q));
          if (!is_zero(a.at(i, t)) && (!smallest || abs_less(a.at(i, t), a.at(*smallest, t)))) smallest = i;
        }
        if (smallest) {
          row_swap(t, *smallest);
          continue;
        }
        // clear row t to the right; rows != t are zero in column t, so only
        // row t of `a` changes
        std::optional<std::size_t> smallest_col;
        for (std::size_t j = t + 1; j < a.cols; ++j) {
          if (is_zero(a.at(t, j))) continue;
          T q = quot(a.at(t, j), a.at(t, t));
          if (!is_zero(q)) {
            if (track_v_) {
              col_add(j, t, neg(q));
            } else {
              submul(a.at(t, j), q, a.at(t, t));
            }
          }
          if (!is_zero(a.at(t, j)) && (!smallest_col || abs_less(a.at(t, j), a.at(t, *smallest_col))))
            smallest_col = j;
        }
        if (smallest_col) {
          col_swap(t, *smallest_col);
          continue;
        }
        break;
      }
    }
    rank = t;
  }

  // diag(x, y) -> diag(gcd, lcm) for every pair violating the chain.
  void fix_divisibility() {
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = i + 1; j < rank; ++j) {
        const T x = a.at(i, i), y = a.at(j, j);
        if (divides(x, y)) continue;
        auto [g, s, t] = ext_gcd(x, y);
        T xg = quot(x, g), yg = quot(y, g);
        if (track_u_) {
          // rows: [[s, t], [-y/g, x/g]], inverse [[x/g, -t], [y/g, s]]
          u.mix_rows(i, j, s, t, neg(yg), xg);
          uinv.mix_cols(i, j, xg, neg(t), yg, s);
        }
        if (track_v_) {
          // cols: [[1, -t y/g], [1, s x/g]], inverse [[s x/g, t y/g], [-1, 1]]
          T q = neg(mul(t, yg)), r = mul(s, xg);
          v.mix_cols(i, j, T(1), q, T(1), r);
          vinv.mix_rows(i, j, r, mul(t, yg), T(-1), T(1));
        }
        a.at(i, i) = g;
        a.at(j, j) = mul(x, yg);
      }
  }

  bool track_u_, track_v_;
};

}  // namespace fistab::detail
