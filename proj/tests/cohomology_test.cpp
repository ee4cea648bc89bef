#include <gtest/gtest.h>

#include "udrfusion/cohomology.hpp"

namespace udrfusion {
namespace {

// Sum of characters over G as an integer, lifted from [0, p) before dividing by |G|.
std::int64_t character_average(const GModule& m) {
  std::int64_t sum = 0;
  for (const auto& g : all_elements(m.n())) sum += m.character(g).value();
  return sum;
}

TEST(GModule, RejectsBrokenRelations) {
  const PrimeModulus p7(7);
  EXPECT_THROW(GModule(3, FpMatrix::from_rows(p7, {{3}}), FpMatrix::identity(1, p7)), ParameterError);
}

TEST(GModule, TrivialAndTensorIdentities) {
  const auto params = DihedralParams::smallest(5);
  const auto one = GModule::trivial(params, 1);
  const auto contra = contragredient(one);
  EXPECT_EQ(contra.r(), one.r());
  EXPECT_EQ(contra.s(), one.s());
  const auto theta = GModule::from_rep(irr2_rep(params, 1), 5);
  const auto t = tensor(one, theta);
  EXPECT_EQ(t.r(), theta.r());
  EXPECT_EQ(t.s(), theta.s());
  EXPECT_EQ(tensor(theta, tensor(theta, theta)).dim(), 8u);
}

TEST(DetModule, IsSignCharacter) {
  for (int n : {3, 5, 6, 8}) {
    const auto params = DihedralParams::smallest(n);
    for (const auto& rep : irr2_reps(params)) {
      const auto det = det_module(GModule::from_rep(rep, n));
      EXPECT_EQ(det.r(), GModule::sign(params).r());
      EXPECT_EQ(det.s(), GModule::sign(params).s());
    }
    const auto trivial = det_module(GModule::trivial(params, 2));
    EXPECT_TRUE(trivial.r().is_identity());
    EXPECT_TRUE(trivial.s().is_identity());
  }
  const auto params = DihedralParams::with_prime(6, 7);
  EXPECT_EQ(det_module(GModule::from_rep(irr2_rep(params, 2), 6)).s().value(0, 0), 6);
}

TEST(FixedPointDim, Examples) {
  const auto params = DihedralParams::smallest(7);
  EXPECT_EQ(fixed_point_dim(GModule::trivial(params, 3)), 3u);
  for (const auto& rep : irr2_reps(params)) {
    const auto m = GModule::from_rep(rep, 7);
    EXPECT_EQ(fixed_point_dim(m), 0u);
    EXPECT_EQ(fixed_point_dim(tensor(contragredient(m), m)), 1u);
  }
}

TEST(FixedPointDim, AgreesWithCharacterAverage) {
  for (int n = 3; n <= 10; ++n) {
    const auto params = DihedralParams::smallest(n);
    for (int i0 = 1; params.is_irr2_index(i0); ++i0) {
      const auto phi = contragredient(GModule::from_rep(irr2_rep(params, i0), n));
      for (int j = 1; params.is_irr2_index(j); ++j) {
        const auto m = tensor(phi, adjoint_module(params, j));
        const std::int64_t avg_times_order = character_average(m);
        // The true multiplicity is at most 8 < p, so the lifted sum is exact mod p.
        const auto fixed = static_cast<std::int64_t>(fixed_point_dim(m));
        EXPECT_EQ((avg_times_order - fixed * 2 * n) % params.p(), 0) << "n=" << n << " i0=" << i0;
      }
    }
  }
}

TEST(AdjointDecomposition, Examples) {
  EXPECT_TRUE(adjoint_decomposition_check(DihedralParams::with_prime(5, 11), 1));
  EXPECT_TRUE(adjoint_decomposition_check(DihedralParams::with_prime(6, 7), 2));
  EXPECT_TRUE(adjoint_decomposition_check(DihedralParams::with_prime(4, 5), 1));
}

TEST(AdjointDecomposition, AllSmallN) {
  for (int n = 3; n <= 12; ++n) {
    const auto params = DihedralParams::smallest(n);
    for (int i = 1; params.is_irr2_index(i); ++i) {
      EXPECT_TRUE(adjoint_decomposition_check(params, i)) << "n=" << n << " i=" << i;
    }
  }
}

TEST(Dims, Examples) {
  const auto p5 = DihedralParams::with_prime(5, 11);
  EXPECT_EQ(dims(p5, 2, 1), (CohomologyDims{1, 2}));
  EXPECT_EQ(dims(p5, 2, 2), (CohomologyDims{0, 1}));
  EXPECT_EQ(dims(DihedralParams::with_prime(6, 7), 1, 2), (CohomologyDims{0, 1}));
}

TEST(Dims, StructureOnGrid) {
  for (int n = 3; n <= 12; ++n) {
    for (std::int64_t p : smallest_primes_congruent_one(n, 2)) {
      const auto params = DihedralParams::with_prime(n, p);
      for (int i0 = 1; params.is_irr2_index(i0); ++i0) {
        for (int j = 1; params.is_irr2_index(j); ++j) {
          const auto d = dims(params, i0, j);
          EXPECT_TRUE(d.d1 == 0 || d.d1 == 1);
          EXPECT_EQ(d.d2, d.d1 + 1);
          EXPECT_EQ(d.d1 == 1, t_map(params, j) == RepLabel::irr2(i0));
        }
      }
    }
  }
}

TEST(Dims, InvariantUnderChoiceOfRoot) {
  for (int n = 3; n <= 8; ++n) {
    const auto base = DihedralParams::smallest(n);
    for (const auto& w : primitive_roots_of_unity(base.p(), n)) {
      const DihedralParams alt(n, base.p(), w.value());
      for (int i0 = 1; base.is_irr2_index(i0); ++i0) {
        for (int j = 1; base.is_irr2_index(j); ++j) EXPECT_EQ(dims(alt, i0, j), dims(base, i0, j));
      }
    }
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(d1_oracle_cocycles(DihedralParams::with_prime(3, 7), 1, 1), 1);
  EXPECT_EQ(d1_oracle_cocycles(DihedralParams::with_prime(4, 5), 1, 1), 0);
  EXPECT_EQ(d1_oracle_cocycles(DihedralParams::with_prime(6, 7), 2, 2), 1);
}

TEST(Oracle, MatchesFormulaWithinGuard) {
  int instances = 0;
  for (int n = 3; n <= 12; ++n) {
    for (std::int64_t p : smallest_primes_congruent_one(n, 2)) {
      if (2 * n * p * p > kCocycleOracleGuard) continue;
      const auto params = DihedralParams::with_prime(n, p);
      for (int i0 = 1; params.is_irr2_index(i0); ++i0) {
        for (int j = 1; params.is_irr2_index(j); ++j) {
          EXPECT_EQ(d1_oracle_cocycles(params, i0, j), dims(params, i0, j).d1)
              << "n=" << n << " p=" << p << " i0=" << i0 << " j=" << j;
          ++instances;
        }
      }
    }
  }
  EXPECT_GT(instances, 40);
}

TEST(Oracle, GuardRejectsLargeInstances) {
  EXPECT_THROW(d1_oracle_cocycles(DihedralParams::smallest(7), 1, 1), ParameterError);  // 14 * 29^2
}

TEST(MaximalSet, Examples) {
  EXPECT_EQ(cohomologically_maximal_set(DihedralParams::with_prime(5, 11), 2), (std::vector<int>{1}));
  const auto p6 = DihedralParams::with_prime(6, 7);
  EXPECT_EQ(cohomologically_maximal_set(p6, 2), (std::vector<int>{1, 2}));
  EXPECT_EQ(cohomologically_maximal_set(p6, 1), (std::vector<int>{1, 2}));
  for (int j : {1, 2}) EXPECT_EQ(dims(p6, 1, j).d2, 1);
}

TEST(MaximalSet, PreimageOnOmegaEverythingOffOmega) {
  for (int n = 3; n <= 12; ++n) {
    const auto params = DihedralParams::smallest(n);
    std::vector<int> all;
    for (int j = 1; params.is_irr2_index(j); ++j) all.push_back(j);
    for (int i0 = 1; params.is_irr2_index(i0); ++i0) {
      const auto maximal = cohomologically_maximal_set(params, i0);
      EXPECT_EQ(maximal, in_omega(params, i0) ? t_preimage(params, i0) : all) << "n=" << n << " i0=" << i0;
    }
  }
}

}  // namespace
}  // namespace udrfusion
