#include <gtest/gtest.h>

#include "fistab/colimit.hpp"
#include "fistab/fi_module.hpp"
#include "support.hpp"

using namespace fistab;
using namespace fistab::testing;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FBData concentrated(Ring ring, std::size_t N, std::size_t k, std::size_t d) {
  FBData x = FBData::zero(ring, N);
  x.dims[k] = d;
  return x;
}

ExactMatrix col(std::initializer_list<int> v) {
  ExactMatrix m(Ring::Rationals, v.size(), 1);
  std::size_t i = 0;
  for (int x : v) m.set(i++, 0, x);
  return m;
}

}  // namespace

TEST(FreeModule, DimsOfM1) {
  auto v = free_fi_module(concentrated(Ring::Integers, 5, 1, 1));
  EXPECT_EQ(v.dims, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(validate(v).empty());
}

TEST(FreeModule, ConcentratedAtZeroIsConstant) {
  auto v = free_fi_module(concentrated(Ring::Integers, 4, 0, 1));
  auto c = constant_module(Ring::Integers, 4);
  EXPECT_EQ(v, c);
  for (const auto& m : v.iota) EXPECT_EQ(m, ExactMatrix::identity(Ring::Integers, 1));
}

TEST(FreeModule, DimsOneAndTwo) {
  FBData x = FBData::zero(Ring::Rationals, 3);
  x.dims[0] = 1;
  x.dims[2] = 1;
  EXPECT_EQ(free_fi_module(x).dims, (std::vector<std::size_t>{1, 1, 2, 4}));
}

TEST(FreeModule, BinomialDimsAndValidity) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto N = static_cast<std::size_t>(rng.uniform(0, 8));
    auto rd = random_rep_data(rng, Ring::Rationals, N, 3, 3);
    auto x = rd.fb();
    auto v = free_fi_module(x);
    for (std::size_t n = 0; n <= N; ++n) {
      std::size_t want = 0;
      for (std::size_t k = 0; k <= n; ++k) want += binom(n, k) * x.dims[k];
      ASSERT_EQ(v.dims[n], want);
    }
    if (N <= 6) ASSERT_TRUE(validate(v).empty());
  }
}

TEST(FreeModule, RepresentableDims) {
  auto v = representable(Ring::Rationals, 2, 4);
  EXPECT_EQ(v.dims, (std::vector<std::size_t>{0, 0, 2, 6, 12}));
  EXPECT_TRUE(validate(v).empty());
}

TEST(Validate, NegatedTranspositionIsReported) {
  auto v = representable(Ring::Integers, 1, 3);
  v.s(3, 2) = -v.s(3, 2);
  auto bad = validate(v);
  ASSERT_FALSE(bad.empty());
  bool named = false;
  for (const auto& b : bad) named = named || b.find("s_2") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST(Validate, ZeroInclusionsAreValid) {
  auto v = representable(Ring::Integers, 1, 4);
  for (auto& m : v.iota) m = ExactMatrix(m.ring(), m.rows(), m.cols());
  EXPECT_TRUE(validate(v).empty());
}

TEST(InducedInjection, IdentityMap) {
  auto v = representable(Ring::Rationals, 1, 3);
  EXPECT_EQ(induced_injection_matrix(v, {0, 1, 2}, 3), ExactMatrix::identity(Ring::Rationals, 3));
}

TEST(InducedInjection, StandardInclusionOfM1) {
  auto v = representable(Ring::Rationals, 1, 2);
  EXPECT_EQ(induced_injection_matrix(v, {0}, 2), col({1, 0}));
  EXPECT_EQ(induced_injection_matrix(v, {1}, 2), col({0, 1}));
}

TEST(InducedInjection, ErrorsOnBadInput) {
  auto v = representable(Ring::Rationals, 1, 3);
  EXPECT_THROW(induced_injection_matrix(v, {0, 0}, 3), InvalidArgument);
  EXPECT_THROW(induced_injection_matrix(v, {0}, 4), TruncationExceeded);
}

TEST(InducedInjection, BraidWordsAgree) {
  auto v = representable(Ring::Rationals, 2, 3);
  EXPECT_EQ(v.s(3, 1) * v.s(3, 2) * v.s(3, 1), v.s(3, 2) * v.s(3, 1) * v.s(3, 2));
  // the reversal of 3 points, reached through either word
  EXPECT_EQ(induced_injection_matrix(v, {2, 1, 0}, 3), v.s(3, 1) * v.s(3, 2) * v.s(3, 1));
}

TEST(InducedInjection, MatchesDirectFormulaAndComposes) {
  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = static_cast<std::size_t>(rng.uniform(0, 6));
    const auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(c)));
    const auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(b)));
    auto rd = random_rep_data(rng, Ring::Rationals, 6, 3, 3);
    auto v = free_fi_module(rd.fb());
    auto f = random_injection(rng, a, b), g = random_injection(rng, b, c);
    Injection gf(a);
    for (std::size_t j = 0; j < a; ++j) gf[j] = g[f[j]];
    auto mf = induced_injection_matrix(v, f, b), mg = induced_injection_matrix(v, g, c);
    ASSERT_EQ(induced_injection_matrix(v, gf, c), mg * mf);
    ASSERT_EQ(mf, free_image_oracle(rd, f, b));
  }
}

TEST(Shift, ConstantModule) {
  auto c = constant_module(Ring::Integers, 4);
  auto s = shift_module(c);
  EXPECT_EQ(s, constant_module(Ring::Integers, 3));
  for (const auto& m : shift_unit(c).f) EXPECT_EQ(m, ExactMatrix::identity(Ring::Integers, 1));
}

TEST(Shift, DimsOfShiftedM1) {
  auto s = shift_module(representable(Ring::Integers, 1, 5));
  EXPECT_EQ(s.dims, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
}

TEST(Shift, RejectsTruncationZero) { EXPECT_THROW(shift_module(constant_module(Ring::Integers, 0)), TruncationExceeded); }

TEST(Shift, UnitIsNaturalOnRandomFreeModules) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto rd = random_rep_data(rng, Ring::Rationals, 5, 3, 3);
    auto v = free_fi_module(rd.fb());
    ASSERT_TRUE(validate(shift_module(v)).empty());
    ASSERT_TRUE(validate(shift_unit(v)).empty());
  }
}

namespace {

FIMorphism augmentation(std::size_t N) {
  auto m1 = representable(Ring::Rationals, 1, N);
  auto m0 = representable(Ring::Rationals, 0, N);
  FIMorphism f{m1, m0, {}};
  for (std::size_t n = 0; n <= N; ++n) {
    ExactMatrix row(Ring::Rationals, 1, n);
    for (std::size_t j = 0; j < n; ++j) row.set(0, j, 1);
    f.f.push_back(row);
  }
  return f;
}

}  // namespace

TEST(Coker, IdentityGivesZero) {
  auto v = representable(Ring::Integers, 1, 4);
  EXPECT_TRUE(fi_coker(identity_morphism(v)).is_zero());
}

TEST(Coker, ZeroMapGivesTarget) {
  auto m1 = representable(Ring::Rationals, 1, 4), m0 = representable(Ring::Rationals, 0, 4);
  auto c = fi_coker(zero_morphism(m1, m0));
  EXPECT_EQ(c, m0);
}

TEST(Coker, Augmentation) {
  auto f = augmentation(4);
  ASSERT_TRUE(validate(f).empty());
  auto c = fi_coker(f);
  EXPECT_EQ(c.dims, (std::vector<std::size_t>{1, 0, 0, 0, 0}));
  EXPECT_TRUE(validate(c).empty());
  auto k = fi_kernel(f);
  EXPECT_EQ(k.module.dims, (std::vector<std::size_t>{0, 0, 1, 2, 3}));
  EXPECT_TRUE(validate(k.module).empty());
}

TEST(Coker, TorsionOverZIsAnError) {
  auto c = constant_module(Ring::Integers, 2);
  auto f = identity_morphism(c);
  for (auto& m : f.f) m = mpq_class(2) * m;
  EXPECT_THROW(fi_coker(f), TorsionInCokernel);
}

TEST(Colim, FreeModuleAboveGeneratingDegree) {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    auto rd = random_rep_data(rng, rng.coin() ? Ring::Rationals : Ring::Integers, 4, 2, 2);
    auto x = rd.fb();
    auto v = free_fi_module(x);
    for (std::size_t n = 0; n <= 4; ++n) ASSERT_TRUE(colim_compare(v, n, static_cast<long>(x.degree())).comparison_is_iso);
  }
}

TEST(Colim, M2BelowGeneratingDegree) {
  auto v = representable(Ring::Rationals, 2, 3);
  auto r = colim_compare(v, 3, 1);
  EXPECT_FALSE(r.comparison_is_iso);
  EXPECT_EQ(r.colim.rank, 0u);
}

TEST(Colim, FullCutoffIsAlwaysIso) {
  auto v = fi_coker(augmentation(4));
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_TRUE(colim_compare(v, n, static_cast<long>(n)).comparison_is_iso);
  EXPECT_THROW(colim_compare(v, 2, -1), InvalidArgument);
}

TEST(Colim, IsoFlagMonotoneInCutoff) {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    auto v = free_fi_module(random_rep_data(rng, Ring::Rationals, 4, 3, 2).fb());
    for (std::size_t n = 0; n <= 4; ++n) {
      bool seen = false;
      for (long K = 0; K <= 4; ++K) {
        bool iso = colim_compare(v, n, K).comparison_is_iso;
        ASSERT_TRUE(!seen || iso);
        seen = seen || iso;
      }
    }
  }
}

TEST(Submodule, SymmetricSpanOfM1) {
  auto v = representable(Ring::Rationals, 1, 3);
  auto span = symmetric_span(v, 3, col({1, 0, 0}));
  EXPECT_EQ(span.cols(), 3u);
}
