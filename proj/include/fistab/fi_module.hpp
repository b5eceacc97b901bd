#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fistab/error.hpp"
#include "fistab/linalg.hpp"
#include "fistab/matrix.hpp"

namespace fistab {

/// Injection a -> b given by its values on {0..a-1}.
using Injection = std::vector<std::size_t>;

/// Sequence of symmetric-group representations X(0), ..., X(N).
///
/// trans[n] holds the actions of s_1..s_{n-1} on X(n); an empty list means
/// the trivial action.
struct FBData {
  Ring ring = Ring::Rationals;
  std::size_t N = 0;
  std::vector<std::size_t> dims;
  std::vector<std::vector<ExactMatrix>> trans;

  static FBData zero(Ring ring, std::size_t N) {
    FBData x;
    x.ring = ring;
    x.N = N;
    x.dims.assign(N + 1, 0);
    x.trans.assign(N + 1, {});
    return x;
  }

  ExactMatrix action(std::size_t n, std::size_t i) const {
    if (n < trans.size() && !trans[n].empty()) return trans[n].at(i - 1);
    return ExactMatrix::identity(ring, dims.at(n));
  }

  std::size_t degree() const {
    std::size_t d = 0;
    for (std::size_t n = 0; n < dims.size(); ++n)
      if (dims[n] > 0) d = n;
    return d;
  }

  bool is_zero() const {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
  }
};

/// FI-module truncated at N: values on {0..n-1} for n <= N, the standard
/// inclusions iota[n]: V(n) -> V(n+1) and the adjacent transpositions
/// s_i (swapping i-1 and i), 1 <= i <= n-1, on each V(n).
struct FIModule {
  std::string name;
  Ring ring = Ring::Rationals;
  std::size_t N = 0;
  std::vector<std::size_t> dims;
  std::vector<ExactMatrix> iota;
  std::vector<std::vector<ExactMatrix>> trans;

  /// Module with the given dims, zero inclusions and trivial S_n-actions.
  static FIModule blank(Ring ring, std::size_t N, std::vector<std::size_t> dims) {
    if (dims.size() != N + 1) throw DimensionMismatch("FIModule: need N+1 dims");
    FIModule v;
    v.ring = ring;
    v.N = N;
    v.dims = std::move(dims);
    for (std::size_t n = 0; n < N; ++n) v.iota.emplace_back(ring, v.dims[n + 1], v.dims[n]);
    v.trans.resize(N + 1);
    for (std::size_t n = 2; n <= N; ++n)
      for (std::size_t i = 1; i < n; ++i) v.trans[n].push_back(ExactMatrix::identity(ring, v.dims[n]));
    return v;
  }

  std::size_t dim(std::size_t n) const { return dims.at(n); }
  const ExactMatrix& s(std::size_t n, std::size_t i) const { return trans.at(n).at(i - 1); }
  ExactMatrix& s(std::size_t n, std::size_t i) { return trans.at(n).at(i - 1); }

  bool is_zero() const {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
  }

  friend bool operator==(const FIModule& a, const FIModule& b) {
    return a.ring == b.ring && a.N == b.N && a.dims == b.dims && a.iota == b.iota && a.trans == b.trans;
  }
};

/// Levelwise maps f_n: source(n) -> target(n).
struct FIMorphism {
  FIModule source, target;
  std::vector<ExactMatrix> f;
};

// ---------------------------------------------------------------------------
// Validation

namespace detail {

inline void check_shape(std::vector<std::string>& out, const ExactMatrix& m, std::size_t r, std::size_t c,
                        Ring ring, const std::string& what) {
  if (m.rows() != r || m.cols() != c)
    out.push_back(what + ": expected " + std::to_string(r) + "x" + std::to_string(c) + ", got " +
                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  else if (m.ring() != ring)
    out.push_back(what + ": ring mismatch");
}

inline std::string at_level(std::size_t n) { return " at level " + std::to_string(n); }

}  // namespace detail

/// Relations of the (iota, s_i) presentation that fail, one line each.
/// Empty iff the data is a valid truncated FI-module.
inline std::vector<std::string> validate(const FIModule& v) {
  std::vector<std::string> bad;
  if (v.dims.size() != v.N + 1) {
    bad.push_back("dims: expected " + std::to_string(v.N + 1) + " entries");
    return bad;
  }
  if (v.iota.size() != v.N) bad.push_back("iota: expected " + std::to_string(v.N) + " matrices");
  if (v.trans.size() != v.N + 1) bad.push_back("trans: expected " + std::to_string(v.N + 1) + " levels");
  if (!bad.empty()) return bad;
  for (std::size_t n = 0; n < v.N; ++n)
    detail::check_shape(bad, v.iota[n], v.dims[n + 1], v.dims[n], v.ring, "iota" + detail::at_level(n));
  for (std::size_t n = 0; n <= v.N; ++n) {
    const std::size_t want = n >= 2 ? n - 1 : 0;
    if (v.trans[n].size() != want) {
      bad.push_back("trans" + detail::at_level(n) + ": expected " + std::to_string(want) + " generators");
      continue;
    }
    for (std::size_t i = 1; i < n; ++i)
      detail::check_shape(bad, v.s(n, i), v.dims[n], v.dims[n], v.ring,
                          "s_" + std::to_string(i) + detail::at_level(n));
  }
  if (!bad.empty()) return bad;

  for (std::size_t n = 2; n <= v.N; ++n) {
    const auto id = ExactMatrix::identity(v.ring, v.dims[n]);
    for (std::size_t i = 1; i < n; ++i) {
      const auto& si = v.s(n, i);
      if (!(si * si == id)) bad.push_back("s_" + std::to_string(i) + "^2 != 1" + detail::at_level(n));
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto& sj = v.s(n, j);
        if (j == i + 1) {
          if (!(si * sj * si == sj * si * sj))
            bad.push_back("braid relation s_" + std::to_string(i) + " s_" + std::to_string(j) + " fails" +
                          detail::at_level(n));
        } else if (!(si * sj == sj * si)) {
          bad.push_back("s_" + std::to_string(i) + " and s_" + std::to_string(j) + " do not commute" +
                        detail::at_level(n));
        }
      }
    }
  }
  for (std::size_t n = 0; n < v.N; ++n) {
    for (std::size_t i = 1; i < n; ++i)
      if (!(v.s(n + 1, i) * v.iota[n] == v.iota[n] * v.s(n, i)))
        bad.push_back("s_" + std::to_string(i) + " does not commute with iota" + detail::at_level(n));
    if (n >= 1) {
      const auto two = v.iota[n] * v.iota[n - 1];
      if (!(v.s(n + 1, n) * two == two))
        bad.push_back("s_" + std::to_string(n) + " moves iota^2" + detail::at_level(n - 1));
    }
  }
  return bad;
}

/// Failed naturality squares of a morphism.
inline std::vector<std::string> validate(const FIMorphism& m) {
  std::vector<std::string> bad;
  const auto& a = m.source;
  const auto& b = m.target;
  if (a.ring != b.ring) bad.push_back("morphism: ring mismatch");
  if (a.N != b.N) bad.push_back("morphism: truncation mismatch");
  if (m.f.size() != a.N + 1) bad.push_back("morphism: expected " + std::to_string(a.N + 1) + " levels");
  if (!bad.empty()) return bad;
  for (std::size_t n = 0; n <= a.N; ++n)
    detail::check_shape(bad, m.f[n], b.dims[n], a.dims[n], a.ring, "morphism" + detail::at_level(n));
  if (!bad.empty()) return bad;
  for (std::size_t n = 0; n < a.N; ++n)
    if (!(m.f[n + 1] * a.iota[n] == b.iota[n] * m.f[n]))
      bad.push_back("morphism does not commute with iota" + detail::at_level(n));
  for (std::size_t n = 2; n <= a.N; ++n)
    for (std::size_t i = 1; i < n; ++i)
      if (!(m.f[n] * a.s(n, i) == b.s(n, i) * m.f[n]))
        bad.push_back("morphism does not commute with s_" + std::to_string(i) + detail::at_level(n));
  return bad;
}

// ---------------------------------------------------------------------------
// Injections

/// Composite of standard inclusions V(a) -> V(b).
inline ExactMatrix iota_power(const FIModule& v, std::size_t a, std::size_t b) {
  if (b > v.N) throw TruncationExceeded("level " + std::to_string(b) + " beyond truncation " + std::to_string(v.N));
  ExactMatrix m = ExactMatrix::identity(v.ring, v.dims.at(a));
  for (std::size_t n = a; n < b; ++n) m = v.iota[n] * m;
  return m;
}

/// Word s_{j_1}, ..., s_{j_k} (listed in order of application) for the
/// permutation of {0..b-1} extending f by the missing points in increasing order.
inline std::vector<std::size_t> injection_word(const Injection& f, std::size_t b) {
  std::vector<bool> used(b, false);
  std::vector<std::size_t> w;
  for (auto x : f) {
    if (x >= b) throw InvalidArgument("injection value " + std::to_string(x) + " outside target");
    if (used[x]) throw InvalidArgument("map is not injective");
    used[x] = true;
    w.push_back(x);
  }
  for (std::size_t x = 0; x < b; ++x)
    if (!used[x]) w.push_back(x);
  // w * t_1 * ... * t_k = id, so w = t_k ... t_1
  std::vector<std::size_t> word;
  for (std::size_t pass = 0; pass < b; ++pass)
    for (std::size_t p = 0; p + 1 < b; ++p)
      if (w[p] > w[p + 1]) {
        std::swap(w[p], w[p + 1]);
        word.push_back(p + 1);
      }
  return word;
}

/// V(f) for an injection f: {0..a-1} -> {0..b-1}.
inline ExactMatrix induced_injection_matrix(const FIModule& v, const Injection& f, std::size_t b) {
  if (b > v.N) throw TruncationExceeded("level " + std::to_string(b) + " beyond truncation " + std::to_string(v.N));
  const std::size_t a = f.size();
  if (a > b) throw InvalidArgument("map is not injective");
  ExactMatrix m = iota_power(v, a, b);
  for (auto j : injection_word(f, b)) m = v.s(b, j) * m;
  return m;
}

/// Order-preserving map {0..k-1} -> {0..k} skipping r.
inline Injection skip_injection(std::size_t k, std::size_t r) {
  Injection f(k);
  for (std::size_t j = 0; j < k; ++j) f[j] = j < r ? j : j + 1;
  return f;
}

// ---------------------------------------------------------------------------
// Constructions

namespace detail {

/// Subsets of {0..n-1} as bitmasks, numerically increasing; this order makes
/// level n a prefix of level n+1.
struct SubsetIndex {
  std::vector<std::size_t> offset;  // by mask, for masks < 2^n

  SubsetIndex(const FBData& x, std::size_t n) : offset((std::size_t{1} << n) + 1) {
    std::size_t o = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      offset[mask] = o;
      o += x.dims.at(std::popcount(mask));
    }
    offset[std::size_t{1} << n] = o;
  }
  std::size_t total() const { return offset.back(); }
};

inline std::size_t rank_in(std::size_t mask, std::size_t point) {
  return std::popcount(mask & ((std::size_t{1} << point) - 1));
}

}  // namespace detail

/// Free FI-module M(X)(T) = sum over S in T of X(S).
inline FIModule free_fi_module(const FBData& x) {
  if (x.dims.size() != x.N + 1) throw DimensionMismatch("FBData: need N+1 dims");
  if (x.N > 20) throw InvalidArgument("free_fi_module: truncation too large");
  FIModule v;
  v.name = "free";
  v.ring = x.ring;
  v.N = x.N;
  std::vector<detail::SubsetIndex> idx;
  for (std::size_t n = 0; n <= x.N; ++n) {
    idx.emplace_back(x, n);
    v.dims.push_back(idx.back().total());
  }
  for (std::size_t n = 0; n < x.N; ++n) {
    ExactMatrix m(x.ring, v.dims[n + 1], v.dims[n]);
    for (std::size_t i = 0; i < v.dims[n]; ++i) m.set(i, i, 1);
    v.iota.push_back(std::move(m));
  }
  v.trans.resize(x.N + 1);
  for (std::size_t n = 2; n <= x.N; ++n) {
    const auto& ix = idx[n];
    for (std::size_t i = 1; i < n; ++i) {
      ExactMatrix m(x.ring, v.dims[n], v.dims[n]);
      const std::size_t lo = std::size_t{1} << (i - 1), hi = std::size_t{1} << i;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        const std::size_t k = std::popcount(mask);
        if (x.dims[k] == 0) continue;
        const bool has_lo = mask & lo, has_hi = mask & hi;
        std::size_t image = mask;
        if (has_lo != has_hi) image ^= lo | hi;
        const std::size_t src = ix.offset[mask], dst = ix.offset[image];
        if (has_lo && has_hi) {
          m.set_block(dst, src, x.action(k, detail::rank_in(mask, i)));
        } else {
          for (std::size_t t = 0; t < x.dims[k]; ++t) m.set(dst + t, src + t, 1);
        }
      }
      v.trans[n].push_back(std::move(m));
    }
  }
  return v;
}

/// Left regular representation of S_m: basis the permutations of {0..m-1}
/// in lexicographic order, s_r acting by post-composition.
inline FBData regular_representation(Ring ring, std::size_t m, std::size_t N) {
  if (m > N) throw InvalidArgument("regular_representation: m beyond truncation");
  FBData x = FBData::zero(ring, N);
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = i;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, std::size_t> where;
  for (std::size_t i = 0; i < perms.size(); ++i) where[perms[i]] = i;
  x.dims[m] = perms.size();
  for (std::size_t r = 1; r < m; ++r) {
    ExactMatrix a(ring, perms.size(), perms.size());
    for (std::size_t c = 0; c < perms.size(); ++c) {
      auto q = perms[c];
      for (auto& y : q)
        if (y == r - 1)
          y = r;
        else if (y == r)
          y = r - 1;
      a.set(where[q], c, 1);
    }
    x.trans[m].push_back(std::move(a));
  }
  return x;
}

/// Representable module M(m) = free module on FI(m, -).
inline FIModule representable(Ring ring, std::size_t m, std::size_t N) {
  auto v = free_fi_module(regular_representation(ring, m, N));
  v.name = "M(" + std::to_string(m) + ")";
  return v;
}

inline FIModule constant_module(Ring ring, std::size_t N) {
  FIModule v = FIModule::blank(ring, N, std::vector<std::size_t>(N + 1, 1));
  for (auto& m : v.iota) m.set(0, 0, 1);
  v.name = "constant";
  return v;
}

inline FIModule zero_module(Ring ring, std::size_t N) {
  FIModule v = FIModule::blank(ring, N, std::vector<std::size_t>(N + 1, 0));
  v.name = "zero";
  return v;
}

inline FIModule direct_sum(const FIModule& a, const FIModule& b) {
  if (a.ring != b.ring) throw RingMismatch("direct_sum: ring mismatch");
  if (a.N != b.N) throw DimensionMismatch("direct_sum: truncation mismatch");
  FIModule v;
  v.ring = a.ring;
  v.N = a.N;
  v.name = a.name + "+" + b.name;
  for (std::size_t n = 0; n <= a.N; ++n) v.dims.push_back(a.dims[n] + b.dims[n]);
  for (std::size_t n = 0; n < a.N; ++n) v.iota.push_back(direct_sum(a.iota[n], b.iota[n]));
  v.trans.resize(a.N + 1);
  for (std::size_t n = 2; n <= a.N; ++n)
    for (std::size_t i = 1; i < n; ++i) v.trans[n].push_back(direct_sum(a.s(n, i), b.s(n, i)));
  return v;
}

/// Same module with truncation lowered to M.
inline FIModule truncate(const FIModule& v, std::size_t M) {
  if (M > v.N) throw TruncationExceeded("truncate: " + std::to_string(M) + " > " + std::to_string(v.N));
  FIModule w = v;
  w.N = M;
  w.dims.resize(M + 1);
  w.iota.resize(M);
  w.trans.resize(M + 1);
  return w;
}

inline FIMorphism truncate(const FIMorphism& f, std::size_t M) {
  FIMorphism g{truncate(f.source, M), truncate(f.target, M), f.f};
  g.f.resize(M + 1);
  return g;
}

inline FIMorphism identity_morphism(const FIModule& v) {
  FIMorphism f{v, v, {}};
  for (std::size_t n = 0; n <= v.N; ++n) f.f.push_back(ExactMatrix::identity(v.ring, v.dims[n]));
  return f;
}

inline FIMorphism zero_morphism(const FIModule& a, const FIModule& b) {
  FIMorphism f{a, b, {}};
  for (std::size_t n = 0; n <= a.N; ++n) f.f.emplace_back(a.ring, b.dims[n], a.dims[n]);
  return f;
}

inline FIMorphism compose(const FIMorphism& g, const FIMorphism& f) {
  if (g.source.dims != f.target.dims) throw DimensionMismatch("compose: modules do not match");
  FIMorphism h{f.source, g.target, {}};
  for (std::size_t n = 0; n < f.f.size(); ++n) h.f.push_back(g.f[n] * f.f[n]);
  return h;
}

/// (SV)(n) = V(1+n), the added point being 0 and n embedded as {1..n}.
inline FIModule shift_module(const FIModule& v) {
  if (v.N == 0) throw TruncationExceeded("shift of a module truncated at 0");
  FIModule w;
  w.name = "S" + v.name;
  w.ring = v.ring;
  w.N = v.N - 1;
  for (std::size_t n = 0; n <= w.N; ++n) w.dims.push_back(v.dims[n + 1]);
  for (std::size_t n = 0; n < w.N; ++n) w.iota.push_back(v.iota[n + 1]);
  w.trans.resize(w.N + 1);
  for (std::size_t n = 2; n <= w.N; ++n)
    for (std::size_t i = 1; i < n; ++i) w.trans[n].push_back(v.s(n + 1, i + 1));
  return w;
}

/// Unit V -> SV (truncated at N-1), induced by j -> j+1.
inline FIMorphism shift_unit(const FIModule& v) {
  FIModule sv = shift_module(v);
  FIMorphism eta{truncate(v, sv.N), sv, {}};
  for (std::size_t n = 0; n <= sv.N; ++n) {
    Injection f(n);
    for (std::size_t j = 0; j < n; ++j) f[j] = j + 1;
    eta.f.push_back(induced_injection_matrix(v, f, n + 1));
  }
  return eta;
}

// ---------------------------------------------------------------------------
// Kernels, cokernels, submodules

/// Cokernel module together with the levelwise projections.
struct CokernelModule {
  FIModule module;
  std::vector<ExactMatrix> projection, section;
};

inline CokernelModule fi_coker_with_projection(const FIMorphism& f) {
  const auto& b = f.target;
  CokernelModule out;
  out.module.name = "coker";
  out.module.ring = b.ring;
  out.module.N = b.N;
  for (std::size_t n = 0; n <= b.N; ++n) {
    auto c = cokernel(f.f.at(n));
    if (!c.torsion.empty())
      throw TorsionInCokernel("cokernel has torsion" + detail::at_level(n) + " (Z/" + c.torsion.front().get_str() +
                              ")");
    out.module.dims.push_back(c.projection.rows());
    out.projection.push_back(std::move(c.projection));
    out.section.push_back(std::move(c.section));
  }
  for (std::size_t n = 0; n < b.N; ++n) out.module.iota.push_back(out.projection[n + 1] * b.iota[n] * out.section[n]);
  out.module.trans.resize(b.N + 1);
  for (std::size_t n = 2; n <= b.N; ++n)
    for (std::size_t i = 1; i < n; ++i)
      out.module.trans[n].push_back(out.projection[n] * b.s(n, i) * out.section[n]);
  return out;
}

inline FIModule fi_coker(const FIMorphism& f) { return fi_coker_with_projection(f).module; }

/// Kernel module with levelwise inclusions into the source.
struct KernelModule {
  FIModule module;
  std::vector<ExactMatrix> inclusion, left_inverse;
};

inline KernelModule fi_kernel(const FIMorphism& f) {
  const auto& a = f.source;
  KernelModule out;
  out.module.name = "ker";
  out.module.ring = a.ring;
  out.module.N = a.N;
  for (std::size_t n = 0; n <= a.N; ++n) {
    auto rk = rank_kernel(f.f.at(n));
    out.module.dims.push_back(rk.kernel.cols());
    out.inclusion.push_back(std::move(rk.kernel));
    out.left_inverse.push_back(std::move(rk.left_inverse));
  }
  for (std::size_t n = 0; n < a.N; ++n)
    out.module.iota.push_back(out.left_inverse[n + 1] * a.iota[n] * out.inclusion[n]);
  out.module.trans.resize(a.N + 1);
  for (std::size_t n = 2; n <= a.N; ++n)
    for (std::size_t i = 1; i < n; ++i)
      out.module.trans[n].push_back(out.left_inverse[n] * a.s(n, i) * out.inclusion[n]);
  return out;
}

/// Submodule spanned levelwise by the columns of gens[n], which must be
/// closed under the structure maps of v.
struct SubModule {
  FIModule module;
  std::vector<ExactMatrix> inclusion;
};

inline SubModule submodule(const FIModule& v, const std::vector<ExactMatrix>& gens) {
  SubModule out;
  out.module.name = "sub";
  out.module.ring = v.ring;
  out.module.N = v.N;
  std::vector<Image> ims;
  for (std::size_t n = 0; n <= v.N; ++n) {
    ims.push_back(image(gens.at(n)));
    out.module.dims.push_back(ims.back().basis.cols());
    out.inclusion.push_back(ims.back().basis);
  }
  auto restrict_map = [&](const ExactMatrix& m, std::size_t from, std::size_t to, const std::string& what) {
    auto x = solve_in_span(ims[to].basis, ims[to].left_inverse, m * ims[from].basis);
    if (!x) throw InvalidArgument("submodule is not closed under " + what);
    return *x;
  };
  for (std::size_t n = 0; n < v.N; ++n)
    out.module.iota.push_back(restrict_map(v.iota[n], n, n + 1, "iota" + detail::at_level(n)));
  out.module.trans.resize(v.N + 1);
  for (std::size_t n = 2; n <= v.N; ++n)
    for (std::size_t i = 1; i < n; ++i)
      out.module.trans[n].push_back(restrict_map(v.s(n, i), n, n, "s_" + std::to_string(i) + detail::at_level(n)));
  return out;
}

/// Columns spanning the S_n-orbit of span(cols) inside V(n).
inline ExactMatrix symmetric_span(const FIModule& v, std::size_t n, const ExactMatrix& cols) {
  ExactMatrix span = image(cols).basis;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 1; i < n; ++i) {
      auto next = image(hstack(span, v.s(n, i) * span)).basis;
      if (next.cols() > span.cols()) grew = true;
      span = std::move(next);
    }
  }
  return span;
}

}  // namespace fistab
