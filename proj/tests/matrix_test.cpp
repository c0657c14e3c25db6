#include <soq/matrix.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace soq {
namespace {

using testing::third_matrix;

template <typename F>
void expect_error(errc code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(Matrix, ConstructionChecksShape) {
  expect_error(errc::dimension_mismatch, [] { Matrix(0, 3); });
  expect_error(errc::dimension_mismatch, [] { Matrix(2, 2, std::vector<Rational>(3)); });
  expect_error(errc::dimension_mismatch, [] { Matrix::from_rows({{1, 2}, {3}}); });
}

TEST(MatMul, IdentityIsNeutral) {
  const Matrix m{{1, Rational(2, 3), -4}, {0, 5, Rational(1, 7)}, {8, 9, 10}};
  EXPECT_EQ(mat_mul(Matrix::identity(3), m), m);
  EXPECT_EQ(mat_mul(m, Matrix::identity(3)), m);
}

TEST(MatMul, QuarterTurnSquared) {
  const Matrix j{{0, 1}, {-1, 0}};
  EXPECT_EQ(mat_mul(j, j), (Matrix{{-1, 0}, {0, -1}}));
}

TEST(MatMul, ThirdMatrixTimesTransposeIsIdentity) {
  EXPECT_EQ(mat_mul(third_matrix(), mat_transpose(third_matrix())), Matrix::identity(3));
}

TEST(MatMul, RejectsMismatchedShapes) {
  expect_error(errc::dimension_mismatch, [] { mat_mul(Matrix(2, 3), Matrix(2, 3)); });
}

TEST(MatTranspose, Examples) {
  EXPECT_EQ(mat_transpose(Matrix::identity(4)), Matrix::identity(4));
  EXPECT_EQ(mat_transpose(Matrix{{0, 1}, {-1, 0}}), (Matrix{{0, -1}, {1, 0}}));
  const Matrix rect{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(mat_transpose(rect).rows(), 3u);
  EXPECT_EQ(mat_transpose(mat_transpose(rect)), rect);
}

TEST(MatDet, Examples) {
  EXPECT_EQ(mat_det(Matrix::identity(5)), Rational(1));
  EXPECT_EQ(mat_det(Matrix{{1, -1}, {1, 1}}), Rational(2));
  EXPECT_EQ(testing::cofactor_det(third_matrix()), Rational(1));
  EXPECT_EQ(mat_det(third_matrix()), Rational(1));
  EXPECT_EQ(mat_det(Matrix{{1, 2}, {2, 4}}), Rational(0));
  // Needs a row swap: leading entry is zero.
  EXPECT_EQ(mat_det(Matrix{{0, 1}, {1, 0}}), Rational(-1));
  expect_error(errc::not_square, [] { mat_det(Matrix(2, 3)); });
}

TEST(MatInverse, Examples) {
  EXPECT_EQ(mat_inverse(Matrix{{1, 1}, {0, 1}}), (Matrix{{1, -1}, {0, 1}}));
  const Rational h(1, 2);
  EXPECT_EQ(mat_inverse(Matrix{{1, -1}, {1, 1}}), (Matrix{{h, h}, {-h, h}}));
  // (1 - A[1,1])^{-1}
  const Matrix one_minus_a{{1, 0, -1}, {0, 1, -1}, {1, 1, 1}};
  const Rational t(1, 3);
  const Matrix expected{{2 * t, -t, t}, {-t, 2 * t, t}, {-t, -t, t}};
  EXPECT_EQ(testing::adjugate_inverse(one_minus_a), expected);
  EXPECT_EQ(mat_inverse(one_minus_a), expected);
}

TEST(MatInverse, Errors) {
  expect_error(errc::singular, [] { mat_inverse(Matrix{{1, 2}, {2, 4}}); });
  expect_error(errc::not_square, [] { mat_inverse(Matrix(3, 2)); });
}

TEST(EmbedTopLeft, Examples) {
  EXPECT_EQ(embed_topleft(Matrix{{1}}, 3), Matrix::identity(3));
  EXPECT_EQ(embed_topleft(Matrix{{0, 1}, {-1, 0}}, 3), (Matrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(embed_topleft(third_matrix(), 3), third_matrix());
  expect_error(errc::size_exceeds_target, [] { embed_topleft(Matrix::identity(4), 3); });
}

TEST(OmegaForm, Examples) {
  EXPECT_TRUE(has_omega_form(Matrix::identity(2)));
  EXPECT_TRUE(has_omega_form(Matrix::identity(6)));
  EXPECT_TRUE(has_omega_form(Matrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}));
  EXPECT_FALSE(has_omega_form(Matrix::diagonal({1, -1, -1})));
  EXPECT_FALSE(has_omega_form(Matrix{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}));
  EXPECT_FALSE(has_omega_form(Matrix{{1}}));
}

TEST(SpecialOrthogonal, Examples) {
  EXPECT_TRUE(is_special_orthogonal(Matrix::identity(4)));
  EXPECT_FALSE(is_special_orthogonal(Matrix::diagonal({1, 1, 1, -1})));
  EXPECT_TRUE(is_special_orthogonal(third_matrix()));
  EXPECT_FALSE(is_special_orthogonal(Matrix{{1, 1}, {0, 1}}));
  EXPECT_FALSE(is_special_orthogonal(Matrix(2, 3)));
}

TEST(MatrixProperty, DetMatchesCofactorExpansion) {
  testing::Sampler s(7);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      const Matrix m = s.matrix(n, n);
      EXPECT_EQ(mat_det(m), testing::cofactor_det(m)) << "n=" << n;
    }
  }
  // Rank-deficient inputs hit the zero-pivot exit.
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = s.matrix(4, 2);
    const Matrix b = s.matrix(2, 4);
    EXPECT_EQ(mat_det(a * b), Rational());
  }
}

TEST(MatrixProperty, DetIsMultiplicative) {
  testing::Sampler s(8);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix a = s.matrix(n, n), b = s.matrix(n, n);
      EXPECT_EQ(mat_det(a * b), mat_det(a) * mat_det(b));
    }
  }
}

TEST(MatrixProperty, InverseMultipliesToIdentity) {
  testing::Sampler s(9);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix m = s.matrix(n, n);
      if (mat_det(m).is_zero()) continue;
      const Matrix inv = mat_inverse(m);
      EXPECT_EQ(m * inv, Matrix::identity(n));
      EXPECT_EQ(inv * m, Matrix::identity(n));
      if (n <= 4) {
        EXPECT_EQ(inv, testing::adjugate_inverse(m));
      }
    }
  }
}

TEST(MatrixProperty, OrthonormalColumnsAndOmegaBlock) {
  testing::Sampler s(10);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix o = s.elementary_product(n, 4);
      ASSERT_TRUE(is_special_orthogonal(o));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Rational dot;
          for (std::size_t k = 0; k < n; ++k) dot += o(k, i) * o(k, j);
          EXPECT_EQ(dot, Rational(i == j ? 1 : 0));
        }
      }
      if (n >= 3) {
        const Matrix block = s.elementary_product(n - 1, 3);
        const Matrix omega = embed_topleft(block, n);
        EXPECT_TRUE(has_omega_form(omega));
        EXPECT_TRUE(is_special_orthogonal(omega.top_left(n - 1)));
      }
    }
  }
}

}  // namespace
}  // namespace soq
