#pragma once

// Shared helpers for the unit tests: FB-data whose action on an arbitrary
// permutation has a closed form, and a direct evaluation of M(X)(f).

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "fistab/fi_module.hpp"
#include "fistab/rng.hpp"

namespace fistab::testing {

using Perm = std::vector<std::size_t>;

enum class Rep { Trivial, Sign, Permutation, Regular };

inline std::vector<Perm> all_perms(std::size_t k) {
  std::vector<Perm> out;
  Perm p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int perm_sign(const Perm& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

inline std::size_t rep_dim(Rep r, std::size_t k) {
  switch (r) {
    case Rep::Trivial:
    case Rep::Sign:
      return 1;
    case Rep::Permutation:
      return k;
    case Rep::Regular:
      return all_perms(k).size();
  }
  return 0;
}

/// Matrix of tau acting on the representation, by formula.
inline ExactMatrix rep_matrix(Ring ring, Rep r, const Perm& tau) {
  const std::size_t k = tau.size();
  switch (r) {
    case Rep::Trivial:
      return ExactMatrix::identity(ring, 1);
    case Rep::Sign: {
      ExactMatrix m(ring, 1, 1);
      m.set(0, 0, perm_sign(tau));
      return m;
    }
    case Rep::Permutation: {
      ExactMatrix m(ring, k, k);
      for (std::size_t j = 0; j < k; ++j) m.set(tau[j], j, 1);
      return m;
    }
    case Rep::Regular: {
      auto perms = all_perms(k);
      std::map<Perm, std::size_t> at;
      for (std::size_t i = 0; i < perms.size(); ++i) at[perms[i]] = i;
      ExactMatrix m(ring, perms.size(), perms.size());
      for (std::size_t c = 0; c < perms.size(); ++c) {
        Perm q(k);
        for (std::size_t j = 0; j < k; ++j) q[j] = tau[perms[c][j]];
        m.set(at[q], c, 1);
      }
      return m;
    }
  }
  return {};
}

inline Perm adjacent(std::size_t k, std::size_t r) {
  Perm p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::swap(p[r - 1], p[r]);
  return p;
}

/// FB-data with X(k) the direct sum of the listed representations.
struct RepData {
  Ring ring = Ring::Rationals;
  std::size_t N = 0;
  std::vector<std::vector<Rep>> reps;  // by cardinality

  FBData fb() const {
    FBData x = FBData::zero(ring, N);
    for (std::size_t k = 0; k <= N; ++k) {
      for (auto r : reps[k]) x.dims[k] += rep_dim(r, k);
      if (k >= 2 && x.dims[k] > 0)
        for (std::size_t i = 1; i < k; ++i) x.trans[k].push_back(action(k, adjacent(k, i)));
    }
    return x;
  }

  ExactMatrix action(std::size_t k, const Perm& tau) const {
    ExactMatrix m(ring, 0, 0);
    for (auto r : reps[k]) m = direct_sum(m, rep_matrix(ring, r, tau));
    return m;
  }
};

inline RepData random_rep_data(Rng& rng, Ring ring, std::size_t N, std::size_t maxdeg, std::size_t maxdim) {
  RepData d;
  d.ring = ring;
  d.N = N;
  d.reps.resize(N + 1);
  for (std::size_t k = 0; k <= std::min(N, maxdeg); ++k) {
    std::size_t dim = 0;
    for (int tries = 0; tries < 3; ++tries) {
      Rep r = static_cast<Rep>(rng.uniform(0, k >= 2 ? 3 : 1));
      if (r == Rep::Regular && k > 3) r = Rep::Permutation;
      if (!rng.coin()) continue;
      if (dim + rep_dim(r, k) > maxdim) continue;
      dim += rep_dim(r, k);
      d.reps[k].push_back(r);
    }
  }
  return d;
}

/// M(X)(f) evaluated summand by summand.
inline ExactMatrix free_image_oracle(const RepData& x, const Injection& f, std::size_t b) {
  const std::size_t a = f.size();
  auto fb = x.fb();
  auto offsets = [&](std::size_t n) {
    std::vector<std::size_t> off(std::size_t{1} << n);
    std::size_t o = 0;
    for (std::size_t m = 0; m < off.size(); ++m) {
      off[m] = o;
      o += fb.dims[std::popcount(m)];
    }
    return std::pair{off, o};
  };
  auto [oa, da] = offsets(a);
  auto [ob, db] = offsets(b);
  ExactMatrix m(x.ring, db, da);
  for (std::size_t s = 0; s < (std::size_t{1} << a); ++s) {
    const std::size_t k = std::popcount(s);
    if (fb.dims[k] == 0) continue;
    std::vector<std::size_t> elems, images;
    for (std::size_t j = 0; j < a; ++j)
      if (s & (std::size_t{1} << j)) elems.push_back(j);
    std::size_t t = 0;
    for (auto j : elems) t |= std::size_t{1} << f[j];
    for (auto j : elems) images.push_back(f[j]);
    // tau = ord_T^{-1} o f|_S o ord_S
    std::vector<std::size_t> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    Perm tau(k);
    for (std::size_t q = 0; q < k; ++q)
      tau[q] = static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), images[q]) - sorted.begin());
    m.set_block(ob[t], oa[s], x.action(k, tau));
  }
  return m;
}

inline Injection random_injection(Rng& rng, std::size_t a, std::size_t b) {
  Injection all(b);
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (std::size_t i = b; i > 1; --i) std::swap(all[i - 1], all[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  all.resize(a);
  return all;
}

}  // namespace fistab::testing
