#include <gtest/gtest.h>

#include "udrfusion/cohomology.hpp"
#include "udrfusion/deformation.hpp"

namespace udrfusion {
namespace {

UdrSignature signature(std::initializer_list<std::pair<const int, UdrClass>> init) {
  return UdrSignature{std::map<int, UdrClass>(init)};
}

TEST(UdrClass, Notation) {
  EXPECT_EQ(notation(UdrClass::Zp), "Zp");
  EXPECT_EQ(notation(UdrClass::ZpTtorsion), "Zp[[t]]/(t^2,pt)");
  EXPECT_EQ(notation(UdrClass::ZpCp), "Zp[Z/p]");
  EXPECT_EQ(notation(UdrClass::ZpCpSquared), "Zp[Z/pxZ/p]");
}

TEST(UdrClass, Examples) {
  const auto p5 = DihedralParams::with_prime(5, 11);
  EXPECT_EQ(udr_class(p5, 2, 1), UdrClass::ZpTtorsion);
  EXPECT_EQ(udr_class(p5, 2, 2), UdrClass::Zp);
  const auto p6 = DihedralParams::with_prime(6, 7);
  EXPECT_EQ(udr_class(p6, 1, 1), UdrClass::Zp);
  EXPECT_EQ(udr_class(p6, 1, 2), UdrClass::Zp);
}

TEST(UdrSignature, Examples) {
  const auto p6 = DihedralParams::with_prime(6, 7);
  EXPECT_EQ(udr_signature(p6, 2), signature({{1, UdrClass::ZpTtorsion}, {2, UdrClass::ZpTtorsion}}));
  EXPECT_EQ(udr_signature(p6, 1), signature({{1, UdrClass::Zp}, {2, UdrClass::Zp}}));
  const auto sig = udr_signature(DihedralParams::with_prime(5, 11), 1);
  EXPECT_EQ(sig, signature({{1, UdrClass::Zp}, {2, UdrClass::ZpTtorsion}}));
  EXPECT_EQ(sig.digest(), "ZT");
}

TEST(UdrClass, EquivalencesOnGrid) {
  for (int n = 3; n <= 12; ++n) {
    const auto params = DihedralParams::smallest(n);
    for (int i0 = 1; params.is_irr2_index(i0); ++i0) {
      const auto sig = udr_signature(params, i0);
      for (int j = 1; params.is_irr2_index(j); ++j) {
        const auto d = dims(params, i0, j);
        const bool torsion = sig.per_rep.at(j) == UdrClass::ZpTtorsion;
        EXPECT_EQ(torsion, d.d2 == 2);
        EXPECT_EQ(torsion, d.d1 == 1);
        EXPECT_EQ(torsion, t_map(params, j) == RepLabel::irr2(i0));
      }
      if (in_omega(params, i0)) {
        EXPECT_EQ(sig.non_zp(), t_preimage(params, i0));
        EXPECT_EQ(sig.non_zp(), cohomologically_maximal_set(params, i0));
      } else {
        EXPECT_TRUE(sig.non_zp().empty());
      }
    }
  }
}

TEST(Verify, KernelSetsMatchFusionOnOmega) {
  for (int n = 3; n <= 12; ++n) {
    const auto params = DihedralParams::smallest(n);
    for (int i0 : omega_set(params)) EXPECT_TRUE(verify_thm_42(params, i0).passed) << "n=" << n;
  }
  EXPECT_THROW(verify_thm_42(DihedralParams::with_prime(6, 7), 1), ParameterError);
}

TEST(Verify, MaximalityAndPreimageKernels) {
  EXPECT_TRUE(verify_thm_43(DihedralParams::with_prime(9, 19)).passed);
  EXPECT_TRUE(verify_thm_43(DihedralParams::with_prime(6, 7)).passed);
  EXPECT_TRUE(verify_thm_43(DihedralParams::with_prime(12, 13)).passed);
  EXPECT_TRUE(verify_thm_43(DihedralParams::with_prime(4, 5)).passed);  // empty Omega
}

TEST(Verify, GcdSetIdentityExamples) {
  EXPECT_TRUE(verify_lemma_410(12, 4).passed);
  EXPECT_TRUE(verify_lemma_410(12, 2).passed);
  EXPECT_TRUE(verify_lemma_410(20, 6).passed);
  EXPECT_THROW(verify_lemma_410(12, 3), ParameterError);
  EXPECT_THROW(verify_lemma_410(9, 2), ParameterError);
}

TEST(Verify, GcdSetIdentityExhaustive) {
  for (int n = 4; n <= 40; n += 2) {
    for (int i0 = 2; 2 * i0 < n; i0 += 2) EXPECT_TRUE(verify_lemma_410(n, i0).passed) << n << ' ' << i0;
  }
}

TEST(Verify, CenterActionForNonZpClasses) {
  EXPECT_TRUE(verify_cor_34(DihedralParams::with_prime(6, 7), 1).passed);
  EXPECT_TRUE(verify_cor_34(DihedralParams::with_prime(6, 7), 2).passed);
  EXPECT_TRUE(verify_cor_34(DihedralParams::with_prime(5, 11), 1).passed);
}

TEST(Determinability, Examples) {
  const auto d12 = fusion_determinability(DihedralParams::with_prime(12, 13));
  EXPECT_FALSE(d12.determinable);
  ASSERT_TRUE(d12.witness.has_value());
  EXPECT_EQ(*d12.witness, std::make_pair(1, 3));
  EXPECT_TRUE(fusion_determinability(DihedralParams::with_prime(6, 7)).determinable);
  EXPECT_TRUE(fusion_determinability(DihedralParams::with_prime(8, 17)).determinable);
}

TEST(Determinability, PredicateTable) {
  for (int n : {4, 6, 8, 10, 14, 16, 22, 26}) EXPECT_TRUE(determinability_predicate(n)) << n;
  for (int n : {12, 18, 20, 24, 28, 30}) EXPECT_FALSE(determinability_predicate(n)) << n;
  for (int n = 3; n <= 31; n += 2) EXPECT_TRUE(determinability_predicate(n));
}

TEST(Determinability, MatchesPredicateForBothPrimes) {
  for (int n = 4; n <= 30; n += 2) {
    for (std::int64_t p : smallest_primes_congruent_one(n, 2)) {
      const auto det = fusion_determinability(DihedralParams::with_prime(n, p));
      EXPECT_EQ(det.determinable, determinability_predicate(n)) << "n=" << n << " p=" << p;
      EXPECT_EQ(det.witness.has_value(), !det.determinable);
    }
  }
}

TEST(Determinability, ReportCarriesWitness) {
  const auto report = verify_thm_11(DihedralParams::with_prime(12, 13));
  EXPECT_TRUE(report.passed);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->fields.at(0), (std::pair<std::string, std::int64_t>{"i", 1}));
  EXPECT_EQ(report.witness->fields.at(1), (std::pair<std::string, std::int64_t>{"i_prime", 3}));
}

TEST(KernelSet, UsesScannedKernels) {
  const auto params = DihedralParams::smallest(12);
  const auto ks = kernel_set(params, {1, 3});
  ASSERT_EQ(ks.size(), 2u);
  EXPECT_EQ(ks[0].order(), 1u);
  EXPECT_EQ(ks[1].order(), 3u);
}

}  // namespace
}  // namespace udrfusion
