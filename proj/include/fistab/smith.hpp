#pragma once

#include <gmpxx.h>

#include <vector>

#include "fistab/detail/smith_engine.hpp"
#include "fistab/matrix.hpp"

namespace fistab {

/// U * M * V = S with S diagonal, d_1 | d_2 | ... | d_r > 0 and U, V unimodular.
struct SNFResult {
  ExactMatrix S, U, V;
};

namespace detail {

struct SmithFull {
  ExactMatrix S, U, Uinv, V, Vinv;
  std::size_t rank = 0;
};

/// Smith form of an integer matrix, tracking the requested transforms and
/// their inverses. Matrices that were not requested are left empty.
inline SmithFull smith_full(const ExactMatrix& m, bool track_u, bool track_v) {
  return with_overflow_fallback([&]<class T>() {
    SmithEngine<T> e(integer_rows<T>(m), track_u, track_v);
    e.run();
    SmithFull r;
    r.S = to_exact(e.a, Ring::Integers);
    if (track_u) {
      r.U = to_exact(e.u, Ring::Integers);
      r.Uinv = to_exact(e.uinv, Ring::Integers);
    }
    if (track_v) {
      r.V = to_exact(e.v, Ring::Integers);
      r.Vinv = to_exact(e.vinv, Ring::Integers);
    }
    r.rank = e.rank;
    return r;
  });
}

}  // namespace detail

inline SNFResult snf(const ExactMatrix& m) {
  if (m.ring() != Ring::Integers) throw RingMismatch("snf requires an integer matrix");
  auto full = detail::smith_full(m, true, true);
  return {std::move(full.S), std::move(full.U), std::move(full.V)};
}

/// Nonzero diagonal entries of the Smith form, in divisibility order.
/// Over Q the matrix is first scaled row by row to an integer matrix, which
/// keeps the count (the rank) but not the values.
inline std::vector<mpz_class> invariant_factors(const ExactMatrix& m) {
  return detail::with_overflow_fallback([&]<class T>() {
    detail::SmithEngine<T> e(detail::integer_rows<T>(m), false, false);
    e.run();
    std::vector<mpz_class> d;
    d.reserve(e.rank);
    for (std::size_t i = 0; i < e.rank; ++i) d.push_back(detail::to_mpz(e.a.at(i, i)));
    return d;
  });
}

}  // namespace fistab
