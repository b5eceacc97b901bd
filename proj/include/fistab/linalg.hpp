#pragma once

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fistab/matrix.hpp"
#include "fistab/smith.hpp"

namespace fistab {

/// Isomorphism class of a finitely generated abelian group (or of a Q-vector
/// space, with empty torsion): Z^rank + Z/t_1 + ... with t_1 | t_2 | ...
struct AbelianClass {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }

  friend bool operator==(const AbelianClass&, const AbelianClass&) = default;

  std::string to_string(Ring ring = Ring::Integers) const {
    if (is_zero()) return "0";
    std::string s;
    if (rank > 0) {
      s = ring == Ring::Integers ? "Z" : "Q";
      if (rank > 1) s += "^" + std::to_string(rank);
    }
    for (const auto& t : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + t.get_str();
    }
    return s;
  }
};

struct RankKernel {
  std::size_t rank = 0;
  /// Columns form a basis of the kernel; over Z the basis spans a saturated
  /// sublattice. The first nonzero entry of each column is positive.
  ExactMatrix kernel;
  /// left_inverse * kernel = identity.
  ExactMatrix left_inverse;
};

inline std::size_t rank(const ExactMatrix& m) {
  if (m.empty()) return 0;
  return invariant_factors(m).size();
}

inline RankKernel rank_kernel(const ExactMatrix& m) {
  const Ring ring = m.ring();
  RankKernel out;
  if (m.cols() == 0) {
    out.kernel = ExactMatrix(ring, 0, 0);
    out.left_inverse = ExactMatrix(ring, 0, 0);
    return out;
  }
  if (m.rows() == 0) {
    out.kernel = ExactMatrix::identity(ring, m.cols());
    out.left_inverse = out.kernel;
    return out;
  }
  auto full = detail::smith_full(m.with_ring(Ring::Rationals), false, true);
  // integer_rows scaling keeps the kernel; the transforms are integral
  const std::size_t r = full.rank, n = m.cols();
  out.rank = r;
  out.kernel = ExactMatrix(ring, n, n - r);
  out.left_inverse = ExactMatrix(ring, n - r, n);
  for (std::size_t c = r; c < n; ++c) {
    int flip = 0;
    for (std::size_t i = 0; i < n && flip == 0; ++i) flip = sgn(full.V(i, c));
    for (std::size_t i = 0; i < n; ++i) {
      out.kernel.set(i, c - r, flip < 0 ? mpq_class(-full.V(i, c)) : full.V(i, c));
      out.left_inverse.set(c - r, i, flip < 0 ? mpq_class(-full.Vinv(c, i)) : full.Vinv(c, i));
    }
  }
  return out;
}

/// Projection onto coker(m) = target / im(m), with a section.
///
/// Over Z the projection kills im(m) and is split only when the cokernel is
/// torsion-free; `torsion` lists the invariant factors > 1.
struct Cokernel {
  ExactMatrix projection;  // (m.rows - rank) x m.rows
  ExactMatrix section;     // m.rows x (m.rows - rank), projection * section = I
  std::vector<mpz_class> torsion;
  std::size_t rank = 0;
};

inline Cokernel cokernel(const ExactMatrix& m) {
  const Ring ring = m.ring();
  const std::size_t rows = m.rows();
  Cokernel out;
  if (m.cols() == 0 || rows == 0) {
    out.projection = ExactMatrix::identity(ring, rows);
    out.section = out.projection;
    return out;
  }
  // Column scaling keeps the column space over Q; over Z nothing is scaled.
  ExactMatrix scaled = ring == Ring::Rationals ? detail::to_exact(detail::integer_cols<mpz_class>(m), Ring::Integers) : m;
  auto full = detail::smith_full(scaled, true, false);
  const std::size_t r = full.rank;
  out.rank = r;
  if (ring == Ring::Integers)
    for (std::size_t i = 0; i < r; ++i)
      if (full.S(i, i) != 1) out.torsion.push_back(full.S(i, i).get_num());
  out.projection = full.U.block(r, 0, rows - r, rows).with_ring(ring);
  out.section = full.Uinv.block(0, r, rows, rows - r).with_ring(ring);
  return out;
}

/// Basis of the column space of m (over Z: a lattice basis of the span).
struct Image {
  ExactMatrix basis;         // rows x rank, over m.ring()
  ExactMatrix left_inverse;  // rank x rows, over Q: left_inverse * basis = I
};

inline Image image(const ExactMatrix& m) {
  const Ring ring = m.ring();
  const std::size_t rows = m.rows();
  Image out;
  if (m.cols() == 0 || rows == 0 || m.is_zero()) {
    out.basis = ExactMatrix(ring, rows, 0);
    out.left_inverse = ExactMatrix(Ring::Rationals, 0, rows);
    return out;
  }
  ExactMatrix scaled = ring == Ring::Rationals ? detail::to_exact(detail::integer_cols<mpz_class>(m), Ring::Integers) : m;
  auto full = detail::smith_full(scaled, true, false);
  const std::size_t r = full.rank;
  out.basis = ExactMatrix(ring, rows, r);
  out.left_inverse = ExactMatrix(Ring::Rationals, r, rows);
  for (std::size_t c = 0; c < r; ++c) {
    // over Q the invariant factor is a unit
    const mpq_class d = ring == Ring::Integers ? full.S(c, c) : mpq_class(1);
    for (std::size_t i = 0; i < rows; ++i) {
      out.basis.set(i, c, full.Uinv(i, c) * d);
      out.left_inverse.set(c, i, full.U(c, i) / d);
    }
  }
  return out;
}

/// Solves basis * x = y for x, where basis has full column rank; returns
/// nullopt if y is not in the span (over the basis ring).
inline std::optional<ExactMatrix> solve_in_span(const ExactMatrix& basis, const ExactMatrix& left_inverse,
                                                const ExactMatrix& y) {
  ExactMatrix x = left_inverse * y.with_ring(Ring::Rationals);
  if (!(basis.with_ring(Ring::Rationals) * x == y.with_ring(Ring::Rationals))) return std::nullopt;
  if (basis.ring() == Ring::Integers) {
    if (!x.is_integral()) return std::nullopt;
    return x.with_ring(Ring::Integers);
  }
  return x;
}

/// Rank plus nontrivial invariant factors of one boundary map.
struct BoundaryData {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;
};

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Row and column index sets of the connected blocks of the support of m.
inline std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> support_blocks(
    const ExactMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  UnionFind uf(r + c);
  std::vector<bool> touched(r + c, false);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (sgn(m(i, j)) != 0) {
        uf.join(i, r + j);
        touched[i] = touched[r + j] = true;
      }
  std::map<std::size_t, std::size_t> slot;
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
  for (std::size_t x = 0; x < r + c; ++x) {
    if (!touched[x]) continue;
    auto [it, fresh] = slot.try_emplace(uf.find(x), blocks.size());
    if (fresh) blocks.emplace_back();
    auto& blk = blocks[it->second];
    if (x < r)
      blk.first.push_back(x);
    else
      blk.second.push_back(x - r);
  }
  return blocks;
}

/// Invariant factors (> 1) of the direct sum of cyclic groups Z/t.
inline std::vector<mpz_class> normalize_torsion(const std::vector<mpz_class>& ts) {
  if (ts.size() <= 1) return ts;
  ExactMatrix diag(Ring::Integers, ts.size(), ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) diag.set(i, i, mpq_class(ts[i]));
  std::vector<mpz_class> out;
  for (auto& x : invariant_factors(diag))
    if (x != 1) out.push_back(std::move(x));
  return out;
}

}  // namespace detail

/// Rank and torsion of one boundary map, block by block when its support
/// splits.
inline BoundaryData boundary_data(const ExactMatrix& d) {
  BoundaryData b;
  if (d.empty() || d.is_zero()) return b;
  auto blocks = detail::support_blocks(d);
  for (const auto& [rows, cols] : blocks) {
    auto f = invariant_factors(blocks.size() == 1 ? d : d.select_rows(rows).select_cols(cols));
    b.rank += f.size();
    if (d.ring() == Ring::Integers)
      for (auto& x : f)
        if (x != 1) b.torsion.push_back(std::move(x));
  }
  if (blocks.size() > 1) b.torsion = detail::normalize_torsion(b.torsion);
  return b;
}

/// Homology at a chain group of dimension `dim`, from the data of the
/// incoming and outgoing boundaries.
inline AbelianClass homology_from(std::size_t dim, const BoundaryData& in, const BoundaryData& out) {
  AbelianClass h;
  h.rank = dim - out.rank - in.rank;
  h.torsion = in.torsion;
  return h;
}

/// ker(d_out) / im(d_in).
inline AbelianClass homology_class(const ExactMatrix& d_in, const ExactMatrix& d_out) {
  if (d_in.ring() != d_out.ring()) throw RingMismatch("homology_class: ring mismatch");
  if (d_out.cols() != d_in.rows()) throw DimensionMismatch("homology_class: d_out and d_in are not composable");
  if (!d_in.empty() && !d_out.empty() && !(d_out * d_in).is_zero())
    throw NotAComplex("homology_class: d_out * d_in != 0");
  return homology_from(d_in.rows(), boundary_data(d_in), boundary_data(d_out));
}

}  // namespace fistab
