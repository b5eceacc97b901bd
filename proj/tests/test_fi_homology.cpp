#include <gtest/gtest.h>

#include "fistab/colimit.hpp"
#include "fistab/fi_homology.hpp"
#include "fistab/random.hpp"
#include "support.hpp"

using namespace fistab;
using namespace fistab::testing;

namespace {

AbelianClass free_class(std::size_t r) { return AbelianClass{r, {}}; }

FIModule augmentation_coker(std::size_t N) {
  auto m1 = representable(Ring::Rationals, 1, N), m0 = representable(Ring::Rationals, 0, N);
  FIMorphism f{m1, m0, {}};
  for (std::size_t n = 0; n <= N; ++n) {
    ExactMatrix row(Ring::Rationals, 1, n);
    for (std::size_t j = 0; j < n; ++j) row.set(0, j, 1);
    f.f.push_back(row);
  }
  return fi_coker(f);
}

}  // namespace

TEST(CubeComplex, ConstantModuleLevelTwo) {
  auto v = constant_module(Ring::Integers, 3);
  auto c = fih_chain_complex(v, 2);
  EXPECT_EQ(c.dims, (std::vector<std::size_t>{1, 2, 1}));
  // adding 1 to {0} passes one smaller element (sign -1); adding 0 to {1} passes none
  EXPECT_EQ(c.d[1], ExactMatrix::from_rows(Ring::Integers, {{-1, 1}}));
  EXPECT_EQ(c.d[2], ExactMatrix::from_rows(Ring::Integers, {{1}, {1}}));
  for (std::size_t p = 0; p <= 2; ++p) EXPECT_TRUE(fih_group(v, 2, p).is_zero());
  EXPECT_EQ(fih_group(v, 0, 0), free_class(1));
}

TEST(CubeComplex, M1AtLevelOne) {
  auto v = representable(Ring::Integers, 1, 2);
  auto c = fih_chain_complex(v, 1);
  EXPECT_EQ(c.dims, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(fih_group(v, 1, 0), free_class(1));
}

TEST(CubeComplex, LevelZero) {
  auto v = representable(Ring::Rationals, 0, 2);
  auto c = fih_chain_complex(v, 0);
  EXPECT_EQ(c.dims, (std::vector<std::size_t>{1}));
  EXPECT_EQ(fih_group(v, 0, 0), free_class(1));
}

TEST(CubeComplex, SquaresToZeroOnRandomModules) {
  Rng rng(31);
  RandomParams p;
  for (int trial = 0; trial < 30; ++trial) {
    p.N = static_cast<std::size_t>(rng.uniform(1, 5));
    p.ring = rng.coin() ? Ring::Integers : Ring::Rationals;
    auto v = trial % 2 ? free_fi_module(random_fb_data(rng, p)) : random_coker_module(rng, p).module;
    for (std::size_t n = 0; n <= p.N; ++n) {
      auto c = fih_chain_complex(v, n);
      for (std::size_t q = 2; q <= n; ++q) ASSERT_TRUE((c.d[q - 1] * c.d[q]).is_zero());
    }
  }
}

TEST(FIHomology, FreeModulesRecoverGenerators) {
  Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    RandomParams p;
    p.ring = trial % 2 ? Ring::Integers : Ring::Rationals;
    p.N = static_cast<std::size_t>(rng.uniform(0, 5));
    p.max_degree = 3;
    auto x = random_fb_data(rng, p);
    auto v = free_fi_module(x);
    for (std::size_t n = 0; n <= p.N; ++n) {
      auto h = fih_groups(v, n, n);
      ASSERT_EQ(h[0], free_class(x.dims[n])) << "level " << n;
      for (std::size_t q = 1; q < h.size(); ++q) ASSERT_TRUE(h[q].is_zero());
    }
  }
}

TEST(FIHomology, AugmentationCokernel) {
  auto v = augmentation_coker(4);
  EXPECT_EQ(fih_group(v, 0, 0), free_class(1));
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(fih_group(v, n, 0).is_zero());
}

TEST(FIHomology, ZeroModule) {
  auto v = zero_module(Ring::Integers, 3);
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t p = 0; p <= n; ++p) EXPECT_TRUE(fih_group(v, n, p).is_zero());
}

TEST(FIHomology, H0IsCokernelOfProperSubsets) {
  Rng rng(41);
  RandomParams p;
  p.N = 4;
  for (int trial = 0; trial < 10; ++trial) {
    auto v = random_coker_module(rng, p).module;
    for (std::size_t n = 0; n <= p.N; ++n) {
      // image of all V(S) -> V(n), |S| = n - 1, is the S_n-span of iota
      ExactMatrix span(v.ring, v.dims[n], 0);
      if (n > 0) span = symmetric_span(v, n, v.iota[n - 1]);
      ASSERT_EQ(fih_group(v, n, 0).rank, v.dims[n] - rank(span));
    }
  }
}

TEST(FIHomology, EulerCharacteristic) {
  Rng rng(43);
  RandomParams p;
  p.N = 4;
  for (int trial = 0; trial < 10; ++trial) {
    auto v = random_coker_module(rng, p).module;
    for (std::size_t n = 0; n <= p.N; ++n) {
      auto c = fih_chain_complex(v, n);
      auto h = fih_groups(v, n, n);
      long chain = 0, hom = 0;
      for (std::size_t q = 0; q <= n; ++q) {
        chain += (q % 2 ? -1 : 1) * static_cast<long>(c.dims[q]);
        hom += (q % 2 ? -1 : 1) * static_cast<long>(h[q].rank);
      }
      ASSERT_EQ(chain, hom);
    }
  }
}

TEST(Degrees, Representables) {
  for (std::size_t m = 0; m <= 2; ++m) {
    auto prof = degrees(representable(Ring::Rationals, m, 4), 1);
    EXPECT_EQ(prof[0], static_cast<int>(m));
    EXPECT_TRUE(prof.t.at(0).exact);
    EXPECT_EQ(prof[1], -1);
    EXPECT_EQ(prof.t.at(1).to_string(), "none");
  }
}

TEST(Degrees, ZeroModule) {
  auto prof = degrees(zero_module(Ring::Rationals, 3), 2);
  for (auto& [k, e] : prof.t) EXPECT_EQ(e.value, -1);
}

TEST(Degrees, PresentationBoundsOnCokernels) {
  Rng rng(47);
  RandomParams p;
  p.N = 5;
  for (int trial = 0; trial < 8; ++trial) {
    auto g = random_coker_module(rng, p);
    auto prof = degrees(g.module, 1);
    const int dx = g.generators.is_zero() ? -1 : static_cast<int>(g.generators.degree());
    const int dr = g.relations.is_zero() ? -1 : static_cast<int>(g.relations.degree());
    EXPECT_LE(prof[0], dx);
    EXPECT_LE(prof[1], std::max(dr, dx));
  }
}

TEST(Estimates, HmaxExamples) {
  EXPECT_EQ(hmax_estimate(representable(Ring::Rationals, 2, 4)).value, -1);
  EXPECT_EQ(hmax_estimate(constant_module(Ring::Rationals, 4)).value, -1);
  auto v = FIModule::blank(Ring::Rationals, 4, {1, 0, 0, 0, 0});
  EXPECT_EQ(hmax_estimate(v).value, 0);
  EXPECT_EQ(hmax_torsion_estimate(v).value, 0);
  EXPECT_EQ(hmax_torsion_estimate(constant_module(Ring::Rationals, 4)).value, -1);
}

TEST(Estimates, HmaxSeesTheMissingPointOfTheConstantModule) {
  // V(0) = 0 and V(n) = Q otherwise: no torsion, yet not free.
  auto v = FIModule::blank(Ring::Rationals, 5, {0, 1, 1, 1, 1, 1});
  for (std::size_t n = 1; n < 5; ++n) v.iota[n].set(0, 0, 1);
  ASSERT_TRUE(validate(v).empty());
  EXPECT_EQ(hmax_torsion_estimate(v).value, -1);
  EXPECT_EQ(hmax_estimate(v).value, 0);
}

TEST(Estimates, DeltaExamples) {
  EXPECT_EQ(delta_estimate(zero_module(Ring::Rationals, 4)).value, -1);
  EXPECT_EQ(delta_estimate(representable(Ring::Rationals, 1, 5)).value, 1);
  EXPECT_EQ(delta_estimate(constant_module(Ring::Rationals, 4)).value, 0);
  EXPECT_EQ(delta_estimate(representable(Ring::Rationals, 2, 5)).value, 2);
  EXPECT_THROW(delta_estimate(constant_module(Ring::Integers, 3)), RingMismatch);
}

TEST(Filtration, FreeModuleLayers) {
  Rng rng(53);
  for (int trial = 0; trial < 6; ++trial) {
    RandomParams p;
    p.N = 4;
    p.max_degree = 2;
    auto x = random_fb_data(rng, p);
    auto v = free_fi_module(x);
    for (std::size_t k = 0; k <= 2; ++k) {
      auto layer = filtration_layer(v, k, &x);
      ASSERT_TRUE(layer.layer_ok) << layer.failures.front();
      ASSERT_TRUE(validate(layer.F).empty());
    }
    auto top = filtration_layer(v, x.degree(), &x);
    EXPECT_EQ(top.F.dims, v.dims);
  }
}

TEST(Filtration, ZeroAtEmptySet) {
  auto v = representable(Ring::Rationals, 1, 3);
  auto layer = filtration_layer(v, 0);
  EXPECT_TRUE(layer.F.is_zero());
  EXPECT_TRUE(layer.layer_ok);
}

TEST(Filtration, ConstantModuleIsGeneratedInDegreeZero) {
  auto v = constant_module(Ring::Rationals, 4);
  for (std::size_t k = 0; k <= 4; ++k) {
    auto layer = filtration_layer(v, k);
    EXPECT_EQ(layer.F.dims, v.dims);
    EXPECT_TRUE(layer.layer_ok);
  }
}

TEST(Filtration, CokernelModulesAtH0) {
  Rng rng(59);
  RandomParams p;
  p.N = 4;
  for (int trial = 0; trial < 6; ++trial) {
    auto v = random_coker_module(rng, p).module;
    for (std::size_t k = 0; k <= 2; ++k) ASSERT_TRUE(filtration_layer(v, k).layer_ok);
  }
}
