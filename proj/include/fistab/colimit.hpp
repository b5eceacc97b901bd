#pragma once

#include <bit>
#include <cstddef>
#include <map>
#include <vector>

#include "fistab/fi_homology.hpp"
#include "fistab/fi_module.hpp"
#include "fistab/linalg.hpp"

namespace fistab {

struct ColimResult {
  AbelianClass colim;
  bool comparison_is_iso = false;
};

/// colim over S in n with |S| <= K of V(S), presented as the cokernel of
/// the covering relations x_{S1} - V(S1 -> S2) x_{S2}, and whether the
/// canonical map to V(n) is an isomorphism.
inline ColimResult colim_compare(const FIModule& v, std::size_t n, long K) {
  if (K < 0) throw InvalidArgument("colim_compare: negative cutoff");
  if (n > v.N) throw TruncationExceeded("colim_compare: level beyond truncation");
  const std::size_t cut = std::min<std::size_t>(static_cast<std::size_t>(K), n);

  std::map<std::size_t, std::size_t> offset;
  std::vector<std::size_t> subsets;
  std::size_t total = 0;
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s)
    if (static_cast<std::size_t>(std::popcount(s)) <= cut) {
      offset[s] = total;
      subsets.push_back(s);
      total += v.dims[std::popcount(s)];
    }

  // relations, one block column per covering pair
  detail::SkipCache cache(v);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::size_t rel_cols = 0;
  for (auto s : subsets) {
    const std::size_t k = std::popcount(s);
    if (k + 1 > cut) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!(s & (std::size_t{1} << i))) {
        covers.emplace_back(s, i);
        rel_cols += v.dims[k];
      }
  }
  ExactMatrix rel(v.ring, total, rel_cols);
  std::size_t col = 0;
  for (auto [s, i] : covers) {
    const std::size_t k = std::popcount(s);
    const std::size_t t = s | (std::size_t{1} << i);
    rel.set_block(offset[s], col, ExactMatrix::identity(v.ring, v.dims[k]));
    rel.set_block(offset[t], col, -cache.get(k, detail::rank_in(s, i)));
    col += v.dims[k];
  }

  ExactMatrix phi(v.ring, v.dims[n], total);
  for (auto s : subsets) {
    Injection f;
    for (std::size_t j = 0; j < n; ++j)
      if (s & (std::size_t{1} << j)) f.push_back(j);
    phi.set_block(0, offset[s], induced_injection_matrix(v, f, n));
  }

  ColimResult out;
  auto rb = boundary_data(rel);
  out.colim.rank = total - rb.rank;
  out.colim.torsion = rb.torsion;
  const std::size_t dn = v.dims[n];
  if (v.ring == Ring::Rationals) {
    out.comparison_is_iso = out.colim.rank == dn && rank(phi) == dn;
  } else {
    // free of rank d_n and surjective over Z
    bool surjective = true;
    auto f = phi.empty() ? std::vector<mpz_class>{} : invariant_factors(phi);
    if (f.size() != dn) surjective = false;
    for (const auto& x : f)
      if (x != 1) surjective = false;
    out.comparison_is_iso = out.colim.torsion.empty() && out.colim.rank == dn && surjective;
  }
  return out;
}

}  // namespace fistab
