#include "schnorr/lattice_reduction.hpp"

#include "gtest/gtest.h"
#include "support/generators.hpp"
#include "support/hnf.hpp"

namespace schnorr {
namespace {

using testing::algorithm_one_basis;
using testing::columns;
using testing::hermite_normal_form;
using testing::paper_input_basis;
using testing::random_basis;
using testing::random_vector;
using testing::reference_reduced_basis;
using testing::uniform_int;
using testing::vec;

const Rational kThreeQuarters{3, 4};

TEST(GramSchmidt, OrthogonalInputIsUnchanged) {
  IntMatrix b = columns({{3, 0, 0}, {0, 0, 5}});
  auto gs = gram_schmidt(b);
  EXPECT_EQ(gs.mu, RatMatrix::Zero(2, 2));
  EXPECT_EQ(gs.ortho, b.cast<Rational>().eval());
  EXPECT_EQ(gs.norms_sq, (RatVector(2) << 9, 25).finished());
}

TEST(GramSchmidt, FirstCoefficientOfInputBasis) {
  auto gs = gram_schmidt(paper_input_basis());
  // <b2, b1> / <b1, b1> = 22*35 / (1 + 22^2)
  EXPECT_EQ(gs.mu(1, 0), Rational(770, 485));
}

TEST(GramSchmidt, RecombinesAndOrthogonalizesExactly) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = uniform_int(rng, 1, 6);
    IntMatrix b = random_basis(rng, n + 1, n, -50, 50);
    auto gs = gram_schmidt(b);
    for (Eigen::Index i = 0; i < n; ++i) {
      RatVector rebuilt = gs.ortho.col(i);
      for (Eigen::Index j = 0; j < i; ++j) rebuilt += gs.mu(i, j) * gs.ortho.col(j);
      EXPECT_EQ(rebuilt, b.col(i).cast<Rational>().eval());
      for (Eigen::Index j = 0; j < i; ++j)
        EXPECT_EQ(dot(RatVector(gs.ortho.col(i)), RatVector(gs.ortho.col(j))), 0);
    }
    // Idempotent on its own output.
    auto again = gram_schmidt<Rational>(gs.ortho);
    EXPECT_EQ(again.mu, RatMatrix::Zero(n, n));
    EXPECT_EQ(again.ortho, gs.ortho);
  }
}

TEST(GramSchmidt, RankDeficiency) {
  IntMatrix b = columns({{1, 2, 3}, {2, 4, 6}});
  try {
    gram_schmidt(b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankDeficient);
  }
}

TEST(Lll, ReproducesPrintedAlgorithmOutput) {
  auto result = lll_reduce(paper_input_basis(), kThreeQuarters);
  EXPECT_EQ(result.reduced, algorithm_one_basis());
  EXPECT_EQ((paper_input_basis() * result.transform).eval(),
            result.reduced);
  EXPECT_EQ(bmp::abs(determinant(result.transform)), 1);
}

TEST(Lll, AlreadyReducedIsUnchanged) {
  IntMatrix b = columns({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 0, 3}});
  auto result = lll_reduce(b, kThreeQuarters);
  EXPECT_EQ(result.reduced, b);
  EXPECT_EQ(result.transform, IntMatrix::Identity(3, 3));
}

TEST(Lll, RejectsDeltaOutsideRange) {
  for (Rational bad : {Rational(1, 4), Rational(0), Rational(5, 4)}) {
    try {
      lll_reduce(paper_input_basis(), bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
  }
}

TEST(Lll, IterationCap) {
  try {
    lll_reduce(paper_input_basis(), Rational(1), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIterationCap);
  }
  auto exact = lll_reduce(paper_input_basis(), Rational(1));
  EXPECT_TRUE(is_lll_reduced(exact.reduced, Rational(1)));
}

TEST(Lll, Deterministic) {
  Rng rng(5);
  IntMatrix b = random_basis(rng, 6, 5, -50, 50);
  auto first = lll_reduce(b, Rational(99, 100));
  auto second = lll_reduce(b, Rational(99, 100));
  EXPECT_EQ(first.reduced, second.reduced);
  EXPECT_EQ(first.transform, second.transform);
  EXPECT_EQ(first.iterations, second.iterations);
}

TEST(Lll, RandomBasesAreReducedAndSpanTheSameLattice) {
  Rng rng(200);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = uniform_int(rng, 1, 6);
    const auto m = n + uniform_int(rng, 0, 1);
    IntMatrix b = random_basis(rng, m, n, -50, 50);
    auto result = lll_reduce(b, kThreeQuarters);
    auto check = is_lll_reduced(result.reduced, kThreeQuarters);
    ASSERT_TRUE(check) << "trial " << trial << " violation at "
                       << check.violation->i << "," << check.violation->j;
    EXPECT_EQ(bmp::abs(determinant(result.transform)), 1);
    EXPECT_EQ((b * result.transform).eval(), result.reduced);
    EXPECT_EQ(hermite_normal_form(result.reduced), hermite_normal_form(b));
  }
}

TEST(IsLllReduced, Reports) {
  EXPECT_TRUE(is_lll_reduced(algorithm_one_basis(), kThreeQuarters));
  EXPECT_TRUE(is_lll_reduced(reference_reduced_basis(), kThreeQuarters));
  EXPECT_TRUE(is_lll_reduced(columns({{7, 1}}), kThreeQuarters));

  auto check = is_lll_reduced(paper_input_basis(), kThreeQuarters);
  EXPECT_FALSE(check);
  ASSERT_TRUE(check.violation);
  EXPECT_EQ(check.violation->kind, LllViolation::Kind::kSizeReduction);
  EXPECT_EQ(check.violation->i, 2);
  EXPECT_EQ(check.violation->j, 1);

  // Size-reduced but the long vector comes first.
  auto lovasz = is_lll_reduced(columns({{10, 0}, {0, 1}}), kThreeQuarters);
  EXPECT_FALSE(lovasz);
  EXPECT_EQ(lovasz.violation->kind, LllViolation::Kind::kLovasz);
  EXPECT_EQ(lovasz.violation->i, 2);
}

TEST(Transform, RecoversUnimodularMatrix) {
  auto reduction = reduction_from_basis(paper_input_basis(),
                                        reference_reduced_basis(), kThreeQuarters);
  EXPECT_EQ((paper_input_basis() * reduction.transform).eval(),
            reference_reduced_basis());
  EXPECT_EQ(bmp::abs(determinant(reduction.transform)), 1);

  IntMatrix outside = reference_reduced_basis();
  outside(2, 1) += 1;
  EXPECT_THROW(unimodular_transform(paper_input_basis(), outside), Error);
  IntMatrix sublattice = paper_input_basis();
  sublattice.col(0) *= Integer(2);
  EXPECT_THROW(unimodular_transform(paper_input_basis(), sublattice), Error);
}

TEST(Babai, ReferenceReductionGivesPublishedPoint) {
  auto reduction = reduction_from_basis(paper_input_basis(),
                                        reference_reduced_basis(), kThreeQuarters);
  auto babai = babai_nearest_plane(reduction, vec({0, 0, 0, 240}));
  EXPECT_EQ(babai.b_op, vec({0, 4, 4, 242}));
  EXPECT_EQ(babai.residual, vec({0, -4, -4, -2}));
  EXPECT_EQ(babai.dist_sq, 36);
  EXPECT_EQ((reference_reduced_basis() * babai.coeffs_reduced).eval(),
            babai.b_op);
  EXPECT_EQ(babai.coeffs_original, vec({0, 4, 2}));
  EXPECT_EQ((paper_input_basis() * babai.coeffs_original).eval(),
            babai.b_op);
}

TEST(Babai, AlgorithmOneBasis) {
  auto reduction = lll_reduce(paper_input_basis(), kThreeQuarters);
  auto babai = babai_nearest_plane(reduction, vec({0, 0, 0, 240}));
  // Independent check: exact rational nearest-plane worked by hand in
  // Python fractions gives (3, 2, 4, 238), distance^2 = 33.
  EXPECT_EQ(babai.b_op, vec({3, 2, 4, 238}));
  EXPECT_EQ(babai.dist_sq, 33);
  EXPECT_EQ(babai.coeffs_original, vec({3, 2, 2}));
}

TEST(Babai, LatticeTargetIsExact) {
  auto reduction = lll_reduce(paper_input_basis(), kThreeQuarters);
  IntVector t = paper_input_basis() * vec({5, -7, 3});
  auto babai = babai_nearest_plane(reduction, t);
  EXPECT_EQ(babai.b_op, t);
  EXPECT_EQ(babai.residual, IntVector::Zero(4));
  EXPECT_EQ(babai.dist_sq, 0);
  EXPECT_EQ(babai.coeffs_original, vec({5, -7, 3}));
}

TEST(Babai, LengthMismatch) {
  auto reduction = lll_reduce(paper_input_basis(), kThreeQuarters);
  EXPECT_THROW(babai_nearest_plane(reduction, vec({0, 240})), Error);
}

TEST(Babai, WithinApproximationBoundOfExhaustiveOracle) {
  Rng rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = uniform_int(rng, 1, 4);
    IntMatrix b = random_basis(rng, n + 1, n, -20, 20);
    auto reduction = lll_reduce(b, kThreeQuarters);
    IntVector t = b * random_vector(rng, n, -3, 3);
    t += random_vector(rng, n + 1, -15, 15);
    auto babai = babai_nearest_plane(reduction, t);
    auto best = brute_force_cvp(reduction.reduced, t, 5);
    ASSERT_LE(babai.dist_sq, (Integer(1) << n) * best.dist_sq) << "trial " << trial;
    EXPECT_EQ(babai.residual, (t - babai.b_op).eval());
  }
}

TEST(BruteForceCvp, Examples) {
  IntVector t = paper_input_basis() * vec({1, -2, 0});
  auto hit = brute_force_cvp(paper_input_basis(), t, 3);
  EXPECT_EQ(hit.vector, t);
  EXPECT_EQ(hit.dist_sq, 0);

  auto tie = brute_force_cvp(columns({{2, 0}}), vec({3, 0}), 3);
  EXPECT_EQ(tie.vector, vec({2, 0}));
  EXPECT_EQ(tie.coeffs, vec({1}));
  EXPECT_EQ(tie.dist_sq, 1);

  // The closest points have coefficients near (22, 33, -20), so the box is
  // centered on the nearest-plane coefficients.
  auto near = brute_force_cvp(algorithm_one_basis(), vec({0, 0, 0, 240}), 6,
                              vec({22, 33, -20}));
  EXPECT_LE(near.dist_sq, 36);
  EXPECT_EQ(near.dist_sq, 33);
  EXPECT_EQ(near.vector, vec({3, 2, 4, 238}));
}

TEST(BruteForceCvp, RefusesHugeBoxes) {
  IntMatrix b = IntMatrix::Identity(7, 7);
  try {
    brute_force_cvp(b, IntVector::Zero(7), 8);  // 17^7 > 1e8
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleTooLarge);
  }
}

}  // namespace
}  // namespace schnorr
