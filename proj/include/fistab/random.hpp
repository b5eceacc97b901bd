#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fistab/fi_complex.hpp"
#include "fistab/fi_module.hpp"
#include "fistab/rng.hpp"

namespace fistab {

struct RandomParams {
  Ring ring = Ring::Rationals;
  std::size_t N = 5;
  std::size_t max_degree = 2;  // largest cardinality carrying generators
  std::size_t max_dim = 3;     // per cardinality
  int entry_bound = 3;
};

namespace detail {

/// Matrix of a permutation of {0..k-1} (one-line notation) acting on X(k).
inline ExactMatrix fb_permutation(const FBData& x, std::size_t k, const Injection& sigma) {
  ExactMatrix m = ExactMatrix::identity(x.ring, x.dims[k]);
  for (auto j : injection_word(sigma, k)) m = x.action(k, j) * m;
  return m;
}

inline std::vector<Injection> permutations(std::size_t k) {
  std::vector<Injection> out;
  Injection p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Injection inverse_perm(const Injection& p) {
  Injection q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

/// Unimodular g and its inverse, as products of elementary operations.
inline std::pair<ExactMatrix, ExactMatrix> random_unimodular_pair(Rng& rng, Ring ring, std::size_t n) {
  ExactMatrix g = ExactMatrix::identity(ring, n), ginv = g;
  if (n < 2) return {g, ginv};
  for (std::size_t step = 0; step < 2 * n; ++step) {
    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    if (i == j) continue;
    const auto c = rng.uniform(-1, 1);
    if (c == 0) continue;
    ExactMatrix e = ExactMatrix::identity(ring, n), einv = e;
    e.set(i, j, c);
    einv.set(i, j, -c);
    g = e * g;
    ginv = ginv * einv;
  }
  return {g, ginv};
}

}  // namespace detail

namespace detail {

/// Random S_k-representation of dimension `want` built from trivial, sign
/// and permutation blocks, conjugated by a random unimodular matrix. Stores
/// the adjacent transpositions in x.trans[k]; returns false if no block
/// combination was found in a few draws (only possible when k < 2 is false
/// and want is awkward, e.g. never for want <= 1).
inline void random_block_rep(Rng& rng, FBData& x, std::size_t k, std::size_t want) {
  std::vector<int> kinds;  // 0 trivial, 1 sign, 2 permutation
  std::size_t dim = 0;
  while (dim < want) {
    int kind = k >= 2 ? static_cast<int>(rng.uniform(0, 2)) : 0;
    if (kind == 2 && dim + k > want) kind = static_cast<int>(rng.uniform(0, 1));
    kinds.push_back(kind);
    dim += kind == 2 ? k : 1;
  }
  x.dims[k] = dim;
  x.trans[k].clear();
  if (k < 2 || dim == 0) return;
  auto [g, ginv] = random_unimodular_pair(rng, x.ring, dim);
  for (std::size_t r = 1; r < k; ++r) {
    ExactMatrix a(x.ring, 0, 0);
    for (int kind : kinds) {
      if (kind == 0) {
        a = direct_sum(a, ExactMatrix::identity(x.ring, 1));
      } else if (kind == 1) {
        a = direct_sum(a, mpq_class(-1) * ExactMatrix::identity(x.ring, 1));
      } else {
        ExactMatrix s = ExactMatrix::identity(x.ring, k);
        s.set(r - 1, r - 1, 0);
        s.set(r, r, 0);
        s.set(r - 1, r, 1);
        s.set(r, r - 1, 1);
        a = direct_sum(a, s);
      }
    }
    x.trans[k].push_back(g * a * ginv);
  }
}

}  // namespace detail

/// FB-data whose blocks are trivial, sign or permutation representations,
/// conjugated by random unimodular matrices.
inline FBData random_fb_data(Rng& rng, const RandomParams& p) {
  FBData x = FBData::zero(p.ring, p.N);
  for (std::size_t k = 0; k <= std::min(p.N, p.max_degree); ++k)
    detail::random_block_rep(rng, x, k, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.max_dim))));
  return x;
}

/// FB-data with prescribed dimensions d_0..d_N and random block structure.
inline FBData random_fb_data_with_dims(Rng& rng, Ring ring, const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw InvalidArgument("random_fb_data_with_dims: need at least d_0");
  FBData x = FBData::zero(ring, dims.size() - 1);
  for (std::size_t k = 0; k < dims.size(); ++k) detail::random_block_rep(rng, x, k, dims[k]);
  return x;
}

/// Random FI-morphism M(a) -> M(b): on the generators in cardinality k an
/// S_k-equivariant map a(k) -> M(b)(k), symmetrized by a Reynolds sum.
inline FIMorphism random_free_morphism(Rng& rng, const FBData& a, const FBData& b, int entry_bound) {
  const FIModule ma = free_fi_module(a), mb = free_fi_module(b);
  FIMorphism f = zero_morphism(ma, mb);
  for (std::size_t k = 0; k <= a.N; ++k) {
    if (a.dims[k] == 0 || mb.dims[k] == 0) continue;
    ExactMatrix psi(a.ring, mb.dims[k], a.dims[k]);
    for (std::size_t i = 0; i < psi.rows(); ++i)
      for (std::size_t j = 0; j < psi.cols(); ++j)
        if (rng.uniform(0, 2) == 0) psi.set(i, j, rng.uniform(-entry_bound, entry_bound));
    ExactMatrix phi(a.ring, psi.rows(), psi.cols());
    if (k <= 1) {
      phi = psi;
    } else {
      for (const auto& sigma : detail::permutations(k))
        phi = phi + induced_injection_matrix(mb, sigma, k) * psi *
                        detail::fb_permutation(a, k, detail::inverse_perm(sigma));
    }
    // generator summand S at level n maps through the order-preserving S -> n
    for (std::size_t n = k; n <= a.N; ++n) {
      std::size_t src = 0;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        const std::size_t c = std::popcount(mask);
        if (c == k) {
          Injection emb;
          for (std::size_t j = 0; j < n; ++j)
            if (mask & (std::size_t{1} << j)) emb.push_back(j);
          f.f[n].set_block(0, src, induced_injection_matrix(mb, emb, n) * phi);
        }
        src += a.dims[c];
      }
    }
  }
  return f;
}

struct GeneratedModule {
  FIModule module;
  FBData generators, relations;
  std::vector<std::string> notices;
};

/// coker(M(relations) -> M(generators)); over Z a torsion cokernel is
/// regenerated a few times and then the instance is moved to Q.
inline GeneratedModule random_coker_module(Rng& rng, RandomParams p) {
  GeneratedModule g;
  for (int attempt = 0;; ++attempt) {
    if (p.ring == Ring::Integers && attempt == 8) {
      g.notices.push_back("torsion in every Z cokernel; downgraded to Q");
      p.ring = Ring::Rationals;
    }
    auto gens = random_fb_data(rng, p);
    RandomParams rp = p;
    rp.max_dim = std::max<std::size_t>(1, p.max_dim - 1);
    auto rels = random_fb_data(rng, rp);
    auto f = random_free_morphism(rng, rels, gens, p.entry_bound);
    try {
      g.module = fi_coker(f);
    } catch (const TorsionInCokernel&) {
      g.notices.push_back("torsion in Z cokernel; regenerated");
      continue;
    }
    g.module.name = "coker";
    g.generators = std::move(gens);
    g.relations = std::move(rels);
    return g;
  }
}

/// Three-term complex of free modules
///   M(a) --(phi, 0)--> M(b1) + M(b2) --(0, psi)--> M(c)
/// with the middle term twisted by a random unipotent automorphism so the
/// splitting is not visible in the bases.
inline FIComplex random_free_complex(Rng& rng, const RandomParams& p) {
  auto a = random_fb_data(rng, p), b1 = random_fb_data(rng, p), b2 = random_fb_data(rng, p),
       c = random_fb_data(rng, p);
  auto phi = random_free_morphism(rng, a, b1, p.entry_bound);
  auto psi = random_free_morphism(rng, b2, c, p.entry_bound);
  auto l12 = random_free_morphism(rng, b2, b1, 1);
  auto l21 = random_free_morphism(rng, b1, b2, 1);
  const FIModule ma = phi.source, mb1 = phi.target, mb2 = psi.source, mc = psi.target;
  const FIModule mid = direct_sum(mb1, mb2);

  FIMorphism d2{ma, mid, {}}, d1{mid, mc, {}};
  for (std::size_t n = 0; n <= p.N; ++n) {
    const std::size_t n1 = mb1.dims[n], n2 = mb2.dims[n];
    ExactMatrix up = ExactMatrix::identity(p.ring, n1 + n2), up_inv = up;
    ExactMatrix lo = up, lo_inv = up;
    up.set_block(0, n1, l12.f[n]);
    up_inv.set_block(0, n1, -l12.f[n]);
    lo.set_block(n1, 0, l21.f[n]);
    lo_inv.set_block(n1, 0, -l21.f[n]);
    const ExactMatrix g = up * lo, ginv = lo_inv * up_inv;
    ExactMatrix phi0(p.ring, n1 + n2, ma.dims[n]);
    phi0.set_block(0, 0, phi.f[n]);
    ExactMatrix psi0(p.ring, mc.dims[n], n1 + n2);
    psi0.set_block(0, n1, psi.f[n]);
    d2.f.push_back(g * phi0);
    d1.f.push_back(psi0 * ginv);
  }
  FIComplex w;
  w.name = "free3";
  w.ring = p.ring;
  w.N = p.N;
  w.qmin = 0;
  w.qmax = 2;
  w.modules = {mc, mid, ma};
  w.diffs = {d1, d2};
  return w;
}

}  // namespace fistab
