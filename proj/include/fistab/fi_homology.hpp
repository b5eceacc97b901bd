#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fistab/fi_module.hpp"
#include "fistab/linalg.hpp"

namespace fistab {

/// Cube complex of V at level n: S_p = sum over |S| = n - p of V(S), with
/// d_p: S_p -> S_{p-1}. Summands are ordered by increasing bitmask.
/// Process-wide tallies of square-zero checks, one per differential composite
/// tested when a cube or total complex is built.
struct SquareZeroTally {
  std::atomic<std::size_t> cube_checks{0};
  std::atomic<std::size_t> total_checks{0};
};

inline SquareZeroTally& square_zero_tally() {
  static SquareZeroTally t;
  return t;
}

struct FIHComplexAt {
  std::size_t n = 0;
  Ring ring = Ring::Rationals;
  std::vector<std::size_t> dims;                // S_0..S_n
  std::vector<ExactMatrix> d;                   // d[p] for 1 <= p <= pmax, d[0] = S_0 -> 0
  std::vector<std::vector<std::size_t>> masks;  // subsets indexing S_p
  std::vector<std::map<std::size_t, std::size_t>> offset;

  /// Outgoing boundary of S_p; d_0 and d_{n+1} are zero maps.
  ExactMatrix boundary(std::size_t p) const {
    if (p == 0) return ExactMatrix(ring, 0, dims[0]);
    if (p > n) return ExactMatrix(ring, dims[n], 0);
    return d.at(p);
  }
  std::size_t built() const { return d.size() - 1; }
};

namespace detail {

/// V(S -> S + {point}) for order-preserving identifications, by (|S|, rank).
class SkipCache {
 public:
  explicit SkipCache(const FIModule& v) : v_(v) {}
  const ExactMatrix& get(std::size_t k, std::size_t r) {
    auto it = cache_.find({k, r});
    if (it != cache_.end()) return it->second;
    return cache_.emplace(std::pair{k, r}, induced_injection_matrix(v_, skip_injection(k, r), k + 1)).first->second;
  }

 private:
  const FIModule& v_;
  std::map<std::pair<std::size_t, std::size_t>, ExactMatrix> cache_;
};

inline std::vector<std::size_t> masks_of_size(std::size_t n, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == k) out.push_back(m);
  return out;
}

}  // namespace detail

/// Builds the cube complex at level n, with differentials up to degree pmax
/// (all of them by default). Throws NotAComplex if d^2 != 0.
inline FIHComplexAt fih_chain_complex(const FIModule& v, std::size_t n, std::size_t pmax = SIZE_MAX) {
  if (n > v.N) throw TruncationExceeded("level " + std::to_string(n) + " beyond truncation " + std::to_string(v.N));
  FIHComplexAt c;
  c.n = n;
  c.ring = v.ring;
  for (std::size_t p = 0; p <= n; ++p) {
    c.masks.push_back(detail::masks_of_size(n, n - p));
    std::map<std::size_t, std::size_t> off;
    std::size_t o = 0;
    for (auto m : c.masks.back()) {
      off[m] = o;
      o += v.dims[n - p];
    }
    c.offset.push_back(std::move(off));
    c.dims.push_back(o);
  }
  detail::SkipCache cache(v);
  const std::size_t top = std::min(pmax, n);
  c.d.push_back(ExactMatrix(v.ring, 0, c.dims[0]));
  for (std::size_t p = 1; p <= top; ++p) {
    const std::size_t k = n - p;
    ExactMatrix d(v.ring, c.dims[p - 1], c.dims[p]);
    if (v.dims[k] > 0 && v.dims[k + 1] > 0)
      for (auto s : c.masks[p])
        for (std::size_t i = 0; i < n; ++i) {
          if (s & (std::size_t{1} << i)) continue;
          const std::size_t r = detail::rank_in(s, i);
          const ExactMatrix& blk = cache.get(k, r);
          d.set_block(c.offset[p - 1].at(s | (std::size_t{1} << i)), c.offset[p].at(s), r % 2 ? -blk : blk);
        }
    c.d.push_back(std::move(d));
  }
  for (std::size_t p = 2; p <= top; ++p) {
    square_zero_tally().cube_checks.fetch_add(1, std::memory_order_relaxed);
    if (!(c.d[p - 1] * c.d[p]).is_zero())
      throw NotAComplex("cube complex: d^2 != 0 at level " + std::to_string(n) + ", degree " + std::to_string(p));
  }
  return c;
}

/// FI-homology groups H_0..H_pmax of V at level n (fewer when pmax > n).
inline std::vector<AbelianClass> fih_groups(const FIModule& v, std::size_t n, std::size_t pmax) {
  const std::size_t top = std::min(pmax, n);
  auto c = fih_chain_complex(v, n, top + 1);
  std::vector<BoundaryData> bd;
  for (std::size_t p = 0; p <= top + 1; ++p) bd.push_back(p <= c.built() ? boundary_data(c.boundary(p)) : BoundaryData{});
  std::vector<AbelianClass> out;
  for (std::size_t p = 0; p <= top; ++p) out.push_back(homology_from(c.dims[p], bd[p + 1], bd[p]));
  return out;
}

inline AbelianClass fih_group(const FIModule& v, std::size_t n, std::size_t p) {
  if (p > n) throw InvalidArgument("fih_group: degree " + std::to_string(p) + " exceeds level " + std::to_string(n));
  return fih_groups(v, n, p).at(p);
}

// ---------------------------------------------------------------------------
// Degrees

/// Observed degree: the largest level with nonzero homology, or -1 when none
/// was observed. `exact` is set when the value lies below the truncation.
struct DegreeEntry {
  int value = -1;
  bool exact = false;

  std::string to_string() const { return value < 0 ? std::string("none") : std::to_string(value); }
  friend bool operator==(const DegreeEntry&, const DegreeEntry&) = default;
};

struct DegreeProfile {
  std::size_t N = 0;
  std::map<int, DegreeEntry> t;

  int operator[](int k) const {
    auto it = t.find(k);
    return it == t.end() ? -1 : it->second.value;
  }
};

inline DegreeProfile degrees(const FIModule& v, std::size_t kmax) {
  if (kmax > v.N) throw InvalidArgument("degrees: kmax beyond truncation");
  DegreeProfile prof;
  prof.N = v.N;
  for (std::size_t k = 0; k <= kmax; ++k) prof.t[static_cast<int>(k)] = {};
  for (std::size_t n = 0; n <= v.N; ++n) {
    auto h = fih_groups(v, n, kmax);
    for (std::size_t k = 0; k < h.size(); ++k)
      if (!h[k].is_zero()) prof.t[static_cast<int>(k)].value = static_cast<int>(n);
  }
  for (auto& [k, e] : prof.t) e.exact = e.value >= 0 && static_cast<std::size_t>(e.value) < v.N;
  return prof;
}

// ---------------------------------------------------------------------------
// Stable and local degree estimates

struct Estimate {
  int value = -1;
  /// Too few levels were observable for the value to be trusted.
  bool truncation_limited = false;
  std::string note;
};

/// Torsion-kernel estimate: the largest n with ker(V(n) -> V(N)) != 0.
inline Estimate hmax_torsion_estimate(const FIModule& v) {
  if (v.N < 1) throw TruncationExceeded("hmax estimate needs N >= 1");
  Estimate e;
  for (std::size_t n = 0; n < v.N; ++n)
    if (rank_kernel(iota_power(v, n, v.N)).kernel.cols() > 0) e.value = static_cast<int>(n);
  e.truncation_limited = true;
  e.note = "estimate: torsion detected against level " + std::to_string(v.N);
  return e;
}

/// Local degree estimate: one less than the least b for which the b-fold
/// shift of V has vanishing H_1 and H_2 at every observable level.
/// Free modules give -1; a torsion class in top degree h forces b > h.
inline Estimate hmax_estimate(const FIModule& v) {
  if (v.N < 1) throw TruncationExceeded("hmax estimate needs N >= 1");
  Estimate e;
  FIModule w = v;
  for (std::size_t b = 0;; ++b) {
    bool acyclic = true;
    for (std::size_t n = 1; n <= w.N && acyclic; ++n) {
      auto h = fih_groups(w, n, 2);
      for (std::size_t p = 1; p < h.size(); ++p)
        if (!h[p].is_zero()) acyclic = false;
    }
    if (acyclic || w.N == 0) {
      e.value = static_cast<int>(b) - 1;
      e.truncation_limited = w.N < 2;
      e.note = "estimate: shift " + std::to_string(b) + " is acyclic through level " + std::to_string(w.N);
      return e;
    }
    w = shift_module(w);
  }
}

/// The derivative cokernel coker(V -> SV) as a module.
inline FIModule derivative_cokernel(const FIModule& v) { return fi_coker(shift_unit(v)); }

/// Stable degree estimate over Q: least d >= -1 such that the (d+1)-fold
/// derivative cokernel vanishes at every observable level.
inline Estimate delta_estimate(const FIModule& v) {
  if (v.ring != Ring::Rationals) throw RingMismatch("delta_estimate is defined over Q");
  Estimate e;
  FIModule w = v;
  for (int d = -1;; ++d) {
    if (w.is_zero()) {
      e.value = d;
      e.truncation_limited = w.N < 1;
      e.note = "estimate: iterated derivative vanishes through level " + std::to_string(w.N);
      return e;
    }
    if (w.N == 0) {
      e.value = d + 1;
      e.truncation_limited = true;
      e.note = "uncertain: ran out of levels";
      return e;
    }
    w = derivative_cokernel(w);
  }
}

// ---------------------------------------------------------------------------
// Cardinality filtration

struct FiltrationLayer {
  FIModule F;
  /// Inclusion F -> V levelwise.
  std::vector<ExactMatrix> inclusion;
  bool layer_ok = false;
  std::vector<std::string> failures;
};

namespace detail {

inline std::vector<ExactMatrix> generated_in_degree(const FIModule& v, std::size_t k) {
  std::vector<ExactMatrix> gens;
  for (std::size_t n = 0; n <= v.N; ++n) {
    if (n <= k)
      gens.push_back(ExactMatrix::identity(v.ring, v.dims[n]));
    else
      gens.push_back(symmetric_span(v, n, v.iota[n - 1] * gens.back()));
  }
  return gens;
}

/// Coordinates of summands with |S| <= k (or == k) inside free_fi_module(x) at level n.
inline std::vector<std::size_t> summand_coords(const FBData& x, std::size_t n, std::size_t k, bool exactly) {
  std::vector<std::size_t> out;
  std::size_t o = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    const std::size_t c = std::popcount(mask), d = x.dims[c];
    if (exactly ? c == k : c <= k)
      for (std::size_t t = 0; t < d; ++t) out.push_back(o + t);
    o += d;
  }
  return out;
}

inline FBData fb_part(const FBData& x, std::size_t lo, std::size_t hi) {
  FBData y = x;
  for (std::size_t n = 0; n <= x.N; ++n)
    if (n < lo || n > hi) {
      y.dims[n] = 0;
      y.trans[n].clear();
    }
  return y;
}

}  // namespace detail

/// Sub-FI-module of V generated by levels <= k. When `free_on` is given, V
/// must be free_fi_module(*free_on) and the layer is compared against the
/// free modules on the truncated FB-data as well.
inline FiltrationLayer filtration_layer(const FIModule& v, std::size_t k, const FBData* free_on = nullptr) {
  if (k > v.N) throw TruncationExceeded("filtration_layer: k beyond truncation");
  FiltrationLayer out;
  auto sub = submodule(v, detail::generated_in_degree(v, k));
  out.F = std::move(sub.module);
  out.F.name = "F" + std::to_string(k) + "(" + v.name + ")";
  out.inclusion = std::move(sub.inclusion);

  for (std::size_t j = 0; j <= v.N; ++j) {
    auto hf = fih_group(out.F, j, 0);
    if (j <= k) {
      if (!(hf == fih_group(v, j, 0))) out.failures.push_back("H0 of the layer differs from H0 of V at level " + std::to_string(j));
    } else if (!hf.is_zero()) {
      out.failures.push_back("H0 of the layer is nonzero at level " + std::to_string(j));
    }
  }

  if (free_on) {
    const FBData& x = *free_on;
    if (!(free_fi_module(x) == v)) throw InvalidArgument("filtration_layer: module is not free on the given data");
    // F_k is spanned by the summands with |S| <= k; compare structure maps there
    const auto fk = free_fi_module(detail::fb_part(x, 0, k));
    for (std::size_t n = 0; n <= v.N; ++n) {
      auto coords = detail::summand_coords(x, n, k, false);
      auto e = ExactMatrix::identity(v.ring, v.dims[n]).select_cols(coords);
      auto im = image(out.inclusion[n]);
      bool same = e.cols() == im.basis.cols() && solve_in_span(im.basis, im.left_inverse, e).has_value();
      if (!same) out.failures.push_back("layer is not the span of the small summands at level " + std::to_string(n));
    }
    for (std::size_t n = 0; n < v.N; ++n) {
      auto rows = detail::summand_coords(x, n + 1, k, false), cols = detail::summand_coords(x, n, k, false);
      if (!(v.iota[n].select_rows(rows).select_cols(cols) == fk.iota[n]))
        out.failures.push_back("layer iota differs from the free module on X<=k at level " + std::to_string(n));
    }
    for (std::size_t n = 2; n <= v.N; ++n) {
      auto c = detail::summand_coords(x, n, k, false);
      for (std::size_t i = 1; i < n; ++i)
        if (!(v.s(n, i).select_rows(c).select_cols(c) == fk.s(n, i)))
          out.failures.push_back("layer action differs from the free module on X<=k at level " + std::to_string(n));
    }
    // the quotient by F_{k-1} keeps exactly the |S| = k summands
    const auto mk = free_fi_module(detail::fb_part(x, k, k));
    for (std::size_t n = 0; n < v.N; ++n) {
      auto rows = detail::summand_coords(x, n + 1, k, true), cols = detail::summand_coords(x, n, k, true);
      if (!(v.iota[n].select_rows(rows).select_cols(cols) == mk.iota[n]))
        out.failures.push_back("quotient iota differs from the free module on X_k at level " + std::to_string(n));
    }
    for (std::size_t n = 2; n <= v.N; ++n) {
      auto c = detail::summand_coords(x, n, k, true);
      for (std::size_t i = 1; i < n; ++i)
        if (!(v.s(n, i).select_rows(c).select_cols(c) == mk.s(n, i)))
          out.failures.push_back("quotient action differs from the free module on X_k at level " + std::to_string(n));
    }
  }
  out.layer_ok = out.failures.empty();
  return out;
}

}  // namespace fistab
