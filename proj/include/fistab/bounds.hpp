#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fistab/error.hpp"

namespace fistab {

/// Integer extended by -inf and +inf.
class ExtInt {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  constexpr ExtInt() = default;
  constexpr ExtInt(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool finite() const { return kind_ == Kind::Finite; }
  long value() const {
    if (!finite()) throw InvalidArgument("ExtInt: value of an infinite sentinel");
    return value_;
  }

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  /// Sum; -inf + +inf is rejected.
  friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (a.finite() && b.finite()) return ExtInt(a.value_ + b.value_);
    if ((a.kind_ == Kind::NegInf && b.kind_ == Kind::PosInf) || (a.kind_ == Kind::PosInf && b.kind_ == Kind::NegInf))
      throw InvalidArgument("ExtInt: -inf + inf");
    return a.finite() ? b : a;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "inf";
      default: return std::to_string(value_);
    }
  }

 private:
  constexpr explicit ExtInt(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  long value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ExtInt& x) { return os << x.to_string(); }

/// Hyperhomology degrees t_k by homological degree k; absent keys are
/// outside the declared support.
using DegreeSeq = std::map<int, ExtInt>;

/// Bound evaluation with the branch that fired and the formula it used.
struct BoundReport {
  ExtInt t0 = ExtInt::neg_inf(), t1 = ExtInt::neg_inf();
  std::string regime;
  std::string formula;
  std::vector<std::string> notes;
};

namespace detail {

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

inline long finite_at(const DegreeSeq& t, int k, const char* who) {
  auto it = t.find(k);
  if (it == t.end())
    throw InvalidArgument(std::string(who) + ": degree " + std::to_string(k) + " outside the declared support");
  if (!it->second.finite())
    throw InvalidArgument(std::string(who) + ": infinite value at degree " + std::to_string(k));
  return it->second.value();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Complexes and spectral sequences

inline BoundReport gan_li_bounds(const DegreeSeq& t, int k) {
  const long tk = detail::finite_at(t, k, "gan_li_bounds"), tk1 = detail::finite_at(t, k + 1, "gan_li_bounds");
  BoundReport r;
  r.t0 = 2 * tk + 1;
  r.t1 = 2 * std::max(tk, tk1) + 2;
  r.regime = "complex of free modules";
  r.formula = "t0(H_k) <= 2 t_k + 1; t1(H_k) <= 2 max(t_k, t_{k+1}) + 2";
  return r;
}

/// Generation and presentation degree from stable degree delta and local
/// degree hmax.
inline BoundReport bahran_bounds(long delta, long hmax) {
  if (delta < -1 || hmax < -1) throw InvalidArgument("bahran_bounds: delta and hmax must be >= -1");
  BoundReport r;
  const long half_up = detail::ceil_div(hmax, 2), half_down = detail::floor_div(hmax, 2);
  if (hmax == -1) {
    r.t0 = delta;
    r.t1 = -1;
    r.regime = "h = -1";
    r.formula = "t0 <= delta; t1 <= -1";
  } else if (delta == -1) {
    r.t0 = hmax;
    r.t1 = hmax + 1;
    r.regime = "delta = -1";
    r.formula = "t0 <= h; t1 <= h + 1";
    r.notes.push_back("t1 branch condition read with (delta, h) in place of the printed (g, c)");
  } else if (delta <= half_up) {
    r.t0 = hmax + 1;
    r.t1 = hmax + 2;
    r.regime = "0 <= delta <= ceil(h/2)";
    r.formula = "t0 <= h + 1; t1 <= h + 2";
  } else {
    r.t0 = delta + half_down + 1;
    r.t1 = delta + half_down + 2;
    r.regime = "delta > ceil(h/2)";
    r.formula = "t0 <= delta + floor(h/2) + 1; t1 <= delta + floor(h/2) + 2";
  }
  return r;
}

struct StableLocal {
  long delta = -1;
  long hmax = -1;
  friend bool operator==(const StableLocal&, const StableLocal&) = default;
};

enum class CeOp { Kernel, Cokernel, MiddleHomology };

/// Bounds on (delta, hmax) of ker f, coker f (inputs A, B) or of the middle
/// homology of A -> B -> C (inputs A, B, C).
inline StableLocal ce_propagate(CeOp op, const std::vector<StableLocal>& in) {
  const std::size_t want = op == CeOp::MiddleHomology ? 3 : 2;
  if (in.size() != want)
    throw InvalidArgument("ce_propagate: expected " + std::to_string(want) + " inputs, got " + std::to_string(in.size()));
  const auto& a = in[0];
  const auto& b = in[1];
  StableLocal out;
  switch (op) {
    case CeOp::Kernel:
      out.delta = a.delta;
      out.hmax = std::max({2 * a.delta - 2, a.hmax, b.hmax});
      break;
    case CeOp::Cokernel:
      out.delta = b.delta;
      out.hmax = std::max({2 * a.delta - 2, a.hmax, b.hmax});
      break;
    case CeOp::MiddleHomology:
      out.delta = b.delta;
      out.hmax = std::max({2 * a.delta - 2, 2 * b.delta - 2, a.hmax, b.hmax, in[2].hmax});
      break;
  }
  return out;
}

struct GoingDownVariant {
  enum class Kind { General, CoFI, Monotone, Linear };
  Kind kind = Kind::General;
  long f = 0;         // Monotone: the value f(p)
  long a = 0, b = 0;  // Linear: t_p <= -a p + b

  static GoingDownVariant general() { return {}; }
  static GoingDownVariant co_fi() { return {Kind::CoFI, 0, 0, 0}; }
  static GoingDownVariant monotone(long fp) { return {Kind::Monotone, fp, 0, 0}; }
  static GoingDownVariant linear(long a, long b) { return {Kind::Linear, 0, a, b}; }
};

namespace detail {

/// floor(max(-1, max_{p < l <= p + w} (2 t_l - 2)) / 2). The local degree is
/// never below -1, so an empty window contributes -1.
inline long window_half(const DegreeSeq& t, int p, long w) {
  long m = -1;
  for (long l = p + 1; l <= p + w; ++l) m = std::max(m, 2 * finite_at(t, static_cast<int>(l), "going_down_bounds") - 2);
  return floor_div(m, 2);
}

}  // namespace detail

/// Stable range of the p-th homotopy (or dual homotopy) module from the
/// hyperhomology degrees.
inline BoundReport going_down_bounds(const DegreeSeq& t, int p, const GoingDownVariant& v) {
  BoundReport r;
  using K = GoingDownVariant::Kind;
  switch (v.kind) {
    case K::General:
    case K::CoFI: {
      const long tp = detail::finite_at(t, p, "going_down_bounds");
      const long tp1 = detail::finite_at(t, p + 1, "going_down_bounds");
      const long w = std::max(tp, tp1);
      const long w0 = v.kind == K::General ? w - 1 : w - 2;
      r.t0 = tp + detail::window_half(t, p, w0) + 1;
      r.t1 = tp + detail::window_half(t, p, w - 2) + 2;
      r.regime = v.kind == K::General ? "general" : "co-FI";
      r.formula = v.kind == K::General
                      ? "t0 <= t_p + floor(max_{p<l<=p+max(t_p,t_{p+1})-1}(2t_l-2)/2) + 1; "
                        "t1 <= t_p + floor(max_{p<l<=p+max(t_p,t_{p+1})-2}(2t_l-2)/2) + 2"
                      : "t0 <= t_p + floor(max_{p<l<=p+max(t_p,t_{p+1})-2}(2t_l-2)/2) + 1; "
                        "t1 <= t_p + floor(max_{p<l<=p+max(t_p,t_{p+1})-2}(2t_l-2)/2) + 2";
      break;
    }
    case K::Monotone:
      r.t0 = std::max(0L, 2 * v.f - 1);
      r.t1 = std::max(1L, 2 * v.f);
      r.regime = "monotone f";
      r.formula = "t0 <= max(0, 2f(p) - 1); t1 <= max(1, 2f(p))";
      break;
    case K::Linear:
      if (v.a <= 0) throw InvalidArgument("going_down_bounds: linear variant needs a > 0");
      r.t0 = std::max(0L, 2 * v.a * p + 2 * v.b - 1);
      r.t1 = std::max(1L, 2 * v.a * p + 2 * v.b);
      r.regime = "linear t_p <= -ap + b";
      r.formula = "t0(pi_{-p}) <= max(0, 2ap + 2b - 1); t1(pi_{-p}) <= max(1, 2ap + 2b)";
      break;
  }
  return r;
}

/// t_k <= max_j t_{k-j}(pi_j). Keys of `pi_t` are (i, j) for t_i(pi_j).
inline ExtInt going_up_bound(const std::map<std::pair<int, int>, ExtInt>& pi_t, int k) {
  ExtInt best = ExtInt::neg_inf();
  for (const auto& [key, val] : pi_t)
    if (key.first + key.second == k) best = std::max(best, val);
  return best;
}

// ---------------------------------------------------------------------------
// Cubes

/// Connectivity data k_U for the nonempty subsets U of {0..n-1}, indexed by
/// bitmask (entry 0 unused).
struct CubeSpec {
  int n = 0;
  std::vector<ExtInt> k;

  static CubeSpec by_size(int n, const std::vector<ExtInt>& by_card) {
    if (n < 1 || n > 16) throw InvalidArgument("CubeSpec: n must be in 1..16");
    if (by_card.size() != static_cast<std::size_t>(n) + 1) throw InvalidArgument("CubeSpec: need one value per size 1..n");
    CubeSpec s{n, std::vector<ExtInt>(std::size_t{1} << n, ExtInt(0))};
    for (std::size_t m = 1; m < s.k.size(); ++m) s.k[m] = by_card[std::popcount(m)];
    return s;
  }

  /// First pair U subset V with k_U > k_V, if any.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> monotonicity_violation() const {
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t u = 1; u <= full; ++u)
      for (int i = 0; i < n; ++i)
        if (!(u & (1u << i)) && k[u] > k[u | (1u << i)]) return std::make_pair(u, u | (1u << i));
    return std::nullopt;
  }
};

/// min over set partitions {T_a} of {0..n-1} of sum k_{T_a}, by dynamic
/// programming over subsets (3^n steps). No monotonicity is assumed.
inline ExtInt partition_minimum(const CubeSpec& s) {
  if (s.n < 1 || s.n > 16) throw InvalidArgument("partition_minimum: n must be in 1..16");
  if (s.k.size() != (std::size_t{1} << s.n)) throw InvalidArgument("partition_minimum: wrong number of subset values");
  const std::uint32_t full = (1u << s.n) - 1;
  std::vector<ExtInt> best(full + 1, ExtInt::pos_inf());
  best[0] = 0;
  for (std::uint32_t m = 1; m <= full; ++m) {
    const std::uint32_t low = m & (~m + 1);
    const std::uint32_t rest = m ^ low;
    // blocks containing the lowest element of m
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t blk = sub | low;
      if (best[m ^ blk] != ExtInt::pos_inf() && s.k[blk] != ExtInt::pos_inf())
        best[m] = std::min(best[m], s.k[blk] + best[m ^ blk]);
      if (sub == 0) break;
    }
  }
  return best[full];
}

enum class CubeDirection { ToCartesian, ToCocartesian };

/// (1 - n + min)-cartesian from k-cocartesian faces, or (-1 + n + min)-
/// cocartesian from k-cartesian faces.
inline BoundReport cube_cartesianity(const CubeSpec& s, CubeDirection dir) {
  if (s.n > 16) throw InvalidArgument("cube_cartesianity: n > 16");
  if (auto bad = s.monotonicity_violation())
    throw InvalidArgument("cube_cartesianity: k is not monotone (subset mask " + std::to_string(bad->first) +
                          " exceeds superset mask " + std::to_string(bad->second) + ")");
  const ExtInt m = partition_minimum(s);
  BoundReport r;
  const long shift = dir == CubeDirection::ToCartesian ? 1 - s.n : s.n - 1;
  r.t0 = m + ExtInt(shift);
  r.t1 = r.t0;
  r.regime = dir == CubeDirection::ToCartesian ? "cartesian" : "cocartesian";
  r.formula = dir == CubeDirection::ToCartesian ? "1 - n + min over partitions of sum k_T"
                                                : "-1 + n + min over partitions of sum k_T";
  r.notes.push_back("partition minimum = " + m.to_string());
  return r;
}

// ---------------------------------------------------------------------------
// Configuration spaces

enum class ConfVariant { Stated, Body };

/// Stable range of Hom and Ext of pi_p of configuration spaces of a simply
/// connected d-manifold.
inline BoundReport conf_bounds(long p, long d, ConfVariant variant) {
  if (d < 3) throw InvalidArgument("conf_bounds: needs d >= 3");
  if (p < 2) throw InvalidArgument("conf_bounds: needs p >= 2");
  const long c = variant == ConfVariant::Stated ? detail::ceil_div(p - 1, d - 2) : detail::ceil_div(p, d - 2);
  BoundReport r;
  r.t0 = 2 * c + 1;
  r.t1 = 2 * c + 2;
  r.regime = variant == ConfVariant::Stated ? "stated" : "body";
  r.formula = variant == ConfVariant::Stated ? "t0 <= 2 ceil((p-1)/(d-2)) + 1; t1 <= 2 ceil((p-1)/(d-2)) + 2"
                                             : "t0 <= 2 ceil(p/(d-2)) + 1; t1 <= 2 ceil(p/(d-2)) + 2";
  r.notes.push_back("the stated and derived exponents (p-1) and p differ; both variants are available");
  return r;
}

/// The n-cube of configurations on a d-manifold is ((n-1)(d-2) + 1)-cartesian.
inline long conf_cube_cartesianity(long n, long d) {
  if (d < 3) throw InvalidArgument("conf_cube_cartesianity: needs d >= 3");
  if (n < 1) throw InvalidArgument("conf_cube_cartesianity: needs n >= 1");
  return (n - 1) * (d - 2) + 1;
}

/// k_T of the chain cube: (|T|-1)(d-2) + 1 for |T| >= 2 and u + 1 on singletons.
inline CubeSpec chain_cube_spec(int n, long d, long u) {
  std::vector<ExtInt> by(static_cast<std::size_t>(n) + 1, ExtInt(0));
  for (int c = 1; c <= n; ++c) by[static_cast<std::size_t>(c)] = c == 1 ? u + 1 : (c - 1) * (d - 2) + 1;
  return CubeSpec::by_size(n, by);
}

/// Exact partition minimum for the chain cube: a partition with s singletons
/// does best with as many pairs as possible among the other n - s points.
inline long chain_cube_min(long n, long d, long u) {
  if (d < 3 || u < 0 || n < 1) throw InvalidArgument("chain_cube_min: needs d >= 3, u >= 0, n >= 1");
  long best = std::numeric_limits<long>::max();
  for (long s = 0; s <= n; ++s) {
    if (n - s == 1) continue;
    best = std::min(best, s * (u + 1) + (n - s) * (d - 2) - ((n - s) / 2) * (d - 3));
  }
  return best;
}

/// Lower bound n(d-1)/2 or n(u+1) for the chain-cube partition minimum,
/// as a rational number num/2.
inline long chain_cube_min_lower_bound_twice(long n, long d, long u) {
  return 2 * (u + 1) >= d - 1 ? n * (d - 1) : 2 * n * (u + 1);
}

inline long chain_cube_cocartesianity(long n, long d, long u) { return chain_cube_min(n, d, u) + n - 1; }

/// Stable range of H^p of configuration spaces of a u-connected d-manifold.
inline BoundReport cohomology_bounds(long p, long d, long u) {
  if (d < 3) throw InvalidArgument("cohomology_bounds: needs d >= 3");
  if (u < 0 || p < 0) throw InvalidArgument("cohomology_bounds: needs u >= 0 and p >= 0");
  BoundReport r;
  if (2 * (u + 1) >= d - 1) {
    r.t0 = 2 * detail::ceil_div(2 * (p + 1), d - 1) - 1;
    r.regime = "u + 1 >= (d-1)/2";
    r.formula = "t0 <= 2 ceil(2(p+1)/(d-1)) - 1; t1 <= 2 ceil(2(p+1)/(d-1))";
  } else {
    r.t0 = 2 * detail::ceil_div(p + 1, u + 1) - 1;
    r.regime = "u + 1 < (d-1)/2";
    r.formula = "t0 <= 2 ceil((p+1)/(u+1)) - 1; t1 <= 2 ceil((p+1)/(u+1))";
  }
  r.t1 = r.t0 + ExtInt(1);
  return r;
}

}  // namespace fistab
