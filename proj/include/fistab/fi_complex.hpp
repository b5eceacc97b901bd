#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fistab/fi_homology.hpp"
#include "fistab/fi_module.hpp"
#include "fistab/linalg.hpp"

namespace fistab {

/// Bounded FI-chain complex W_qmin .. W_qmax with d_q: W_q -> W_{q-1}.
struct FIComplex {
  std::string name;
  Ring ring = Ring::Rationals;
  std::size_t N = 0;
  int qmin = 0, qmax = 0;
  std::vector<FIModule> modules;  // index q - qmin
  std::vector<FIMorphism> diffs;  // index q - qmin - 1, for q = qmin+1 .. qmax

  const FIModule& module(int q) const { return modules.at(static_cast<std::size_t>(q - qmin)); }
  const FIMorphism& diff(int q) const { return diffs.at(static_cast<std::size_t>(q - qmin - 1)); }

  friend bool operator==(const FIComplex& a, const FIComplex& b) {
    if (a.ring != b.ring || a.N != b.N || a.qmin != b.qmin || a.qmax != b.qmax || !(a.modules == b.modules))
      return false;
    for (std::size_t i = 0; i < a.diffs.size(); ++i)
      if (a.diffs[i].f != b.diffs[i].f) return false;
    return true;
  }
};

/// Complex with a single module in degree q.
inline FIComplex single_degree(const FIModule& v, int q = 0) {
  FIComplex w;
  w.name = v.name;
  w.ring = v.ring;
  w.N = v.N;
  w.qmin = w.qmax = q;
  w.modules.push_back(v);
  return w;
}

inline std::vector<std::string> validate(const FIComplex& w) {
  std::vector<std::string> bad;
  if (w.qmax < w.qmin) return {"complex: empty degree range"};
  if (w.modules.size() != static_cast<std::size_t>(w.qmax - w.qmin + 1)) return {"complex: module count mismatch"};
  if (w.diffs.size() != w.modules.size() - 1) return {"complex: differential count mismatch"};
  for (int q = w.qmin; q <= w.qmax; ++q) {
    const auto& m = w.module(q);
    if (m.ring != w.ring || m.N != w.N) bad.push_back("module in degree " + std::to_string(q) + ": ring or truncation mismatch");
    for (auto& e : validate(m)) bad.push_back("module in degree " + std::to_string(q) + ": " + e);
  }
  if (!bad.empty()) return bad;
  for (int q = w.qmin + 1; q <= w.qmax; ++q) {
    const auto& d = w.diff(q);
    if (d.source.dims != w.module(q).dims || d.target.dims != w.module(q - 1).dims) {
      bad.push_back("differential in degree " + std::to_string(q) + ": wrong source or target");
      continue;
    }
    for (auto& e : validate(d)) bad.push_back("differential in degree " + std::to_string(q) + ": " + e);
  }
  if (!bad.empty()) return bad;
  for (int q = w.qmin + 2; q <= w.qmax; ++q)
    for (std::size_t n = 0; n <= w.N; ++n)
      if (!(w.diff(q - 1).f[n] * w.diff(q).f[n]).is_zero())
        bad.push_back("d^2 != 0 at level " + std::to_string(n) + ", degree " + std::to_string(q));
  return bad;
}

/// Two-term complex [V -> SV] in degrees 1 and 0 (truncated at N-1).
inline FIComplex derivative_two_term(const FIModule& v) {
  auto eta = shift_unit(v);
  FIComplex w;
  w.name = "D" + v.name;
  w.ring = v.ring;
  w.N = eta.target.N;
  w.qmin = 0;
  w.qmax = 1;
  w.modules = {eta.target, eta.source};
  w.diffs = {eta};
  return w;
}

/// Total complex of the cube bicomplex at level n: T_m = sum over p + q = m
/// of S_p(W_q), with D = d_cube + (-1)^p d_W.
struct TotalComplexAt {
  std::size_t n = 0;
  Ring ring = Ring::Rationals;
  int mmin = 0, mmax = 0;
  std::vector<std::size_t> dims;  // index m - mmin
  std::vector<ExactMatrix> D;     // D[m - mmin]: T_m -> T_{m-1}

  std::size_t dim(int m) const {
    return m < mmin || m > mmax ? 0 : dims[static_cast<std::size_t>(m - mmin)];
  }
  ExactMatrix boundary(int m) const {
    if (m <= mmin || m > mmax) return ExactMatrix(ring, dim(m - 1), dim(m));
    return D[static_cast<std::size_t>(m - mmin)];
  }
};

inline TotalComplexAt hyper_total_complex(const FIComplex& w, std::size_t n) {
  if (n > w.N) throw TruncationExceeded("hyper_total_complex: level beyond truncation");
  std::vector<FIHComplexAt> cubes;
  for (int q = w.qmin; q <= w.qmax; ++q) cubes.push_back(fih_chain_complex(w.module(q), n));
  auto cube = [&](int q) -> const FIHComplexAt& { return cubes[static_cast<std::size_t>(q - w.qmin)]; };

  TotalComplexAt t;
  t.n = n;
  t.ring = w.ring;
  t.mmin = w.qmin;
  t.mmax = w.qmax + static_cast<int>(n);
  // offset of S_p(W_q) inside T_{p+q}
  std::map<std::pair<int, int>, std::size_t> off;
  for (int m = t.mmin; m <= t.mmax; ++m) {
    std::size_t o = 0;
    for (int q = w.qmin; q <= w.qmax; ++q) {
      const int p = m - q;
      if (p < 0 || p > static_cast<int>(n)) continue;
      off[{p, q}] = o;
      o += cube(q).dims[static_cast<std::size_t>(p)];
    }
    t.dims.push_back(o);
  }
  t.D.push_back(ExactMatrix(w.ring, 0, t.dims[0]));
  for (int m = t.mmin + 1; m <= t.mmax; ++m) {
    ExactMatrix d(w.ring, t.dim(m - 1), t.dim(m));
    for (int q = w.qmin; q <= w.qmax; ++q) {
      const int p = m - q;
      if (p < 0 || p > static_cast<int>(n)) continue;
      const std::size_t col = off.at({p, q});
      if (p >= 1) d.set_block(off.at({p - 1, q}), col, cube(q).d[static_cast<std::size_t>(p)]);
      if (q > w.qmin) {
        // d_W applied summand by summand, each summand V(S) at level |S| = n - p
        const auto& c = cube(q);
        const auto& dq = w.diff(q).f[n - static_cast<std::size_t>(p)];
        const ExactMatrix blk = p % 2 ? -dq : dq;
        const std::size_t row0 = off.at({p, q - 1});
        const auto& cprev = cube(q - 1);
        for (auto s : c.masks[static_cast<std::size_t>(p)])
          d.set_block(row0 + cprev.offset[static_cast<std::size_t>(p)].at(s),
                      col + c.offset[static_cast<std::size_t>(p)].at(s), blk);
      }
    }
    t.D.push_back(std::move(d));
  }
  for (int m = t.mmin + 2; m <= t.mmax; ++m) {
    square_zero_tally().total_checks.fetch_add(1, std::memory_order_relaxed);
    if (!(t.boundary(m - 1) * t.boundary(m)).is_zero())
      throw NotAComplex("total complex: D^2 != 0 at level " + std::to_string(n) + ", degree " + std::to_string(m));
  }
  return t;
}

/// Hyperhomology groups H_m of the total complex at level n, by m.
inline std::map<int, AbelianClass> hyper_groups(const FIComplex& w, std::size_t n) {
  auto t = hyper_total_complex(w, n);
  std::map<int, BoundaryData> bd;
  for (int m = t.mmin; m <= t.mmax + 1; ++m) bd[m] = boundary_data(t.boundary(m));
  std::map<int, AbelianClass> out;
  for (int m = t.mmin; m <= t.mmax; ++m) out[m] = homology_from(t.dim(m), bd[m + 1], bd[m]);
  return out;
}

inline DegreeProfile hyper_degrees(const FIComplex& w, int kmin, int kmax) {
  DegreeProfile prof;
  prof.N = w.N;
  for (int k = kmin; k <= kmax; ++k) prof.t[k] = {};
  for (std::size_t n = 0; n <= w.N; ++n)
    for (auto& [m, h] : hyper_groups(w, n))
      if (m >= kmin && m <= kmax && !h.is_zero()) prof.t[m].value = static_cast<int>(n);
  for (auto& [k, e] : prof.t) e.exact = e.value >= 0 && static_cast<std::size_t>(e.value) < w.N;
  return prof;
}

/// Levelwise homology H_q(W) as an FI-module (over Q).
inline FIModule homology_module(const FIComplex& w, int q) {
  if (w.ring != Ring::Rationals) throw RingMismatch("homology_module is computed over Q");
  const auto& wq = w.module(q);
  KernelModule k;
  if (q > w.qmin) {
    k = fi_kernel(w.diff(q));
  } else {
    k.module = wq;
    for (std::size_t n = 0; n <= wq.N; ++n) {
      k.inclusion.push_back(ExactMatrix::identity(w.ring, wq.dims[n]));
      k.left_inverse.push_back(k.inclusion.back());
    }
  }
  if (q == w.qmax) {
    auto h = k.module;
    h.name = "H" + std::to_string(q);
    return h;
  }
  const auto& up = w.diff(q + 1);
  FIMorphism lift{up.source, k.module, {}};
  for (std::size_t n = 0; n <= wq.N; ++n) lift.f.push_back(k.left_inverse[n] * up.f[n]);
  auto h = fi_coker(lift);
  h.name = "H" + std::to_string(q);
  return h;
}

// ---------------------------------------------------------------------------
// Shift cone

namespace detail {

/// Block-diagonal map A_p -> B_p of the unit, summand by summand.
inline ExactMatrix cone_chain_map(const FIModule& v, const FIHComplexAt& a, const FIHComplexAt& b, std::size_t p) {
  const std::size_t k = a.n - p;
  ExactMatrix f(v.ring, b.dims[p], a.dims[p]);
  if (v.dims[k] == 0 || v.dims[k + 1] == 0) return f;
  const auto eta = induced_injection_matrix(v, skip_injection(k, 0), k + 1);
  for (auto s : a.masks[p]) f.set_block(b.offset[p].at(s), a.offset[p].at(s), eta);
  return f;
}

/// Positions of the C_p basis (level n+1 cube) in the order A_{p-1} then B_p,
/// where 0 is the distinguished point.
inline std::vector<std::size_t> cone_order(const FIHComplexAt& c, const FIHComplexAt& a, const FIHComplexAt& b,
                                           std::size_t p, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> order;
  if (p >= 1)
    for (auto s : a.masks[p - 1]) {
      const std::size_t t = s << 1;
      for (std::size_t x = 0; x < dims[std::popcount(t)]; ++x) order.push_back(c.offset[p].at(t) + x);
    }
  if (p <= b.n)
    for (auto s : b.masks[p]) {
      const std::size_t t = (s << 1) | 1;
      for (std::size_t x = 0; x < dims[std::popcount(t)]; ++x) order.push_back(c.offset[p].at(t) + x);
    }
  return order;
}

struct ShiftCone {
  FIHComplexAt a, b, c;
  std::vector<std::vector<std::size_t>> order;  // by p = 0..n+1
};

inline ShiftCone shift_cone(const FIModule& v, std::size_t n) {
  if (n + 1 > v.N) throw TruncationExceeded("shift_cone_check needs n + 1 <= N");
  ShiftCone sc{fih_chain_complex(v, n), fih_chain_complex(shift_module(v), n), fih_chain_complex(v, n + 1), {}};
  for (std::size_t p = 0; p <= n + 1; ++p) sc.order.push_back(cone_order(sc.c, sc.a, sc.b, p, v.dims));
  return sc;
}

inline ExactMatrix zero_or(const FIHComplexAt& x, std::size_t p, Ring ring) {
  // boundary of x out of degree p, with the empty groups beyond the top
  if (p > x.n + 1) return ExactMatrix(ring, 0, 0);
  if (p == x.n + 1) return ExactMatrix(ring, x.dims[x.n], 0);
  return x.boundary(p);
}

inline std::size_t group_dim(const FIHComplexAt& x, long p) {
  return p < 0 || p > static_cast<long>(x.n) ? 0 : x.dims[static_cast<std::size_t>(p)];
}

}  // namespace detail

/// True iff the level-(n+1) cube complex of V is, after regrouping subsets by
/// whether they contain 0 and the signs (-1)^p on A, (-1)^{p+1} on B, the
/// mapping cone of the unit map from the level-n cube complex of V to that
/// of SV.
inline bool shift_cone_check(const FIModule& v, std::size_t n) {
  auto sc = detail::shift_cone(v, n);
  const Ring ring = v.ring;
  for (std::size_t p = 0; p <= n + 1; ++p)
    if (sc.order[p].size() != sc.c.dims[p]) return false;

  for (std::size_t p = 1; p <= n + 1; ++p) {
    const std::size_t a_src = detail::group_dim(sc.a, static_cast<long>(p) - 1),
                      b_src = detail::group_dim(sc.b, static_cast<long>(p)),
                      a_dst = detail::group_dim(sc.a, static_cast<long>(p) - 2),
                      b_dst = detail::group_dim(sc.b, static_cast<long>(p) - 1);
    // cone differential (a, b) -> (-d_A a, f a + d_B b)
    ExactMatrix cone(ring, a_dst + b_dst, a_src + b_src);
    if (p >= 2 && a_src > 0) cone.set_block(0, 0, -sc.a.boundary(p - 1));
    if (b_src > 0 && p <= n) cone.set_block(a_dst, a_src, sc.b.boundary(p));
    if (a_src > 0) cone.set_block(a_dst, 0, detail::cone_chain_map(v, sc.a, sc.b, p - 1));

    // C's differential in the regrouped bases, with the sign twist applied
    const auto& dc = sc.c.boundary(p);
    ExactMatrix regrouped = dc.select_rows(sc.order[p - 1]).select_cols(sc.order[p]);
    const int ea_src = p % 2 ? -1 : 1, eb_src = -ea_src;              // signs at degree p
    const int ea_dst = -ea_src, eb_dst = -eb_src;                      // signs at degree p - 1
    ExactMatrix lhs(ring, regrouped.rows(), regrouped.cols()), rhs(ring, cone.rows(), cone.cols());
    for (std::size_t i = 0; i < regrouped.rows(); ++i)
      for (std::size_t j = 0; j < regrouped.cols(); ++j) {
        if (sgn(regrouped(i, j)) != 0) lhs.set(i, j, (i < a_dst ? ea_dst : eb_dst) * regrouped(i, j));
        if (sgn(cone(i, j)) != 0) rhs.set(i, j, (j < a_src ? ea_src : eb_src) * cone(i, j));
      }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

/// Exactness over Q of H_a(level n, V) -> H_a(level n, SV) -> H_a(level n+1, V)
/// at the middle, both maps read off the cube complex at level n + 1.
inline bool les_middle_exact(const FIModule& v, std::size_t n, std::size_t a) {
  const FIModule vq = v.ring == Ring::Rationals ? v : [&] {
    FIModule w = v;
    w.ring = Ring::Rationals;
    for (auto& m : w.iota) m = m.with_ring(Ring::Rationals);
    for (auto& lvl : w.trans)
      for (auto& m : lvl) m = m.with_ring(Ring::Rationals);
    return w;
  }();
  auto sc = detail::shift_cone(vq, n);
  const Ring ring = Ring::Rationals;
  if (a > n) return true;
  const std::size_t na = sc.a.dims[a], nb = sc.b.dims[a];
  // f: A_a -> B_a is the B-block of C's differential out of C_{a+1} on the A part
  const auto& dc_up = detail::zero_or(sc.c, a + 1, ring);
  const auto& ord_up = sc.order[a + 1];
  const auto& ord_mid = sc.order[a];
  const std::size_t a_mid = detail::group_dim(sc.a, static_cast<long>(a) - 1);
  std::vector<std::size_t> a_cols(ord_up.begin(), ord_up.begin() + static_cast<long>(na));
  std::vector<std::size_t> b_rows(ord_mid.begin() + static_cast<long>(a_mid), ord_mid.end());
  const ExactMatrix f = dc_up.select_cols(a_cols).select_rows(b_rows);

  const ExactMatrix za = rank_kernel(detail::zero_or(sc.a, a, ring)).kernel;
  const ExactMatrix zb = rank_kernel(detail::zero_or(sc.b, a, ring)).kernel;
  const ExactMatrix bb = detail::zero_or(sc.b, a + 1, ring);
  const std::size_t rb = rank(bb);
  const std::size_t im_f = rank(hstack(f * za, bb)) - rb;

  // j: B_a -> C_a places b in its regrouped coordinates
  ExactMatrix j(ring, sc.c.dims[a], nb);
  for (std::size_t x = 0; x < nb; ++x) j.set(b_rows[x], x, 1);
  const ExactMatrix jz = j * zb;
  const ExactMatrix& imc = dc_up;
  const std::size_t meet = rank(jz) + rank(imc) - rank(hstack(jz, imc));
  const std::size_t ker_j = meet - rb;
  return im_f == ker_j;
}

}  // namespace fistab
