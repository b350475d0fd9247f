#include <gtest/gtest.h>

#include <qeccf/cxla.hpp>
#include <qeccf/error.hpp>

#include "oracles.hpp"

using namespace qeccf;

TEST(Cxla, KronMatchesHandWrittenXZ) {
  const CMat xz = cxla::kron(oracle::pauli2('X'), oracle::pauli2('Z'));
  const CMat expected = cxla::from_rows(4, 4, {0, 0, 1, 0,  //
                                               0, 0, 0, -1,
                                               1, 0, 0, 0,
                                               0, -1, 0, 0});
  EXPECT_TRUE(cxla::approx_equal(xz, expected, 0));
}

TEST(Cxla, TraceAndAdjoint) {
  const CMat y = oracle::pauli2('Y');
  EXPECT_EQ(cxla::trace(y), cd(0));
  EXPECT_TRUE(cxla::approx_equal(cxla::adjoint(y), y, 0));
  EXPECT_TRUE(cxla::is_hermitian(y));
  EXPECT_TRUE(cxla::is_unitary(y));
}

TEST(Cxla, HermitianEigReconstructs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    const CMat h = cxla::random_hermitian(n, rng);
    const auto e = cxla::eig_hermitian(h);
    for (Eigen::Index i = 1; i < e.values.size(); ++i) EXPECT_LE(e.values[i - 1], e.values[i]);
    const CMat back = e.vectors * e.values.cast<cd>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LT(cxla::max_diff(back, h), 1e-10);
    EXPECT_TRUE(cxla::is_unitary(e.vectors));
  }
}

TEST(Cxla, EigRejectsNonHermitian) {
  const CMat a = cxla::from_rows(2, 2, {1, 1, 0, 1});
  try {
    cxla::eig_hermitian(a);
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), Error::Kind::kNotHermitian);
  }
}

TEST(Cxla, ImageBasisOfRandomProjector) {
  std::mt19937_64 rng(11);
  for (std::size_t rank = 0; rank <= 6; ++rank) {
    const CMat p = oracle::random_projector(6, rank, rng);
    const CMat b = cxla::orthonormal_image_basis(p);
    ASSERT_EQ(static_cast<std::size_t>(b.cols()), rank);
    if (rank == 0) continue;
    EXPECT_LT(cxla::max_diff(b.adjoint() * b, cxla::identity(rank)), 1e-10);
    EXPECT_LT(cxla::max_diff(b * b.adjoint(), p), 1e-10);
    EXPECT_EQ(cxla::rank(p), rank);
  }
}

TEST(Cxla, ProjectorPredicates) {
  const CMat oblique = cxla::from_rows(2, 2, {1, 1, 0, 0});
  EXPECT_TRUE(cxla::is_idempotent(oblique));
  EXPECT_FALSE(cxla::is_projector(oblique));
  const CMat half = (cxla::identity(2) + oracle::pauli2('X')) / 2.0;
  EXPECT_TRUE(cxla::is_projector(half));
}

TEST(Cxla, NearInteger) {
  long v = 0;
  EXPECT_TRUE(cxla::near_integer(cd(2.0 + 1e-12, -1e-12), 1e-8, &v));
  EXPECT_EQ(v, 2);
  EXPECT_FALSE(cxla::near_integer(cd(2.5, 0), 1e-8, &v));
  EXPECT_FALSE(cxla::near_integer(cd(2.0, 0.1), 1e-8, &v));
}

TEST(Cxla, ToleranceValidation) {
  EXPECT_NO_THROW(cxla::validate(Tol{}));
  EXPECT_THROW(cxla::validate(Tol{-1e-9, 1e-8}), Error);
  EXPECT_THROW(cxla::validate(Tol{1e-9, 1e-2}), Error);
}

TEST(Cxla, DimensionMismatchThrows) {
  EXPECT_THROW(cxla::matmul(CMat::Zero(2, 3), CMat::Zero(2, 3)), Error);
}

TEST(Cxla, RandomUnitaryIsUnitary) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 2u, 5u, 16u}) EXPECT_TRUE(cxla::is_unitary(cxla::random_unitary(n, rng)));
}
