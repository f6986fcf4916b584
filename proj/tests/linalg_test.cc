#include "eprdist/linalg.h"

#include <numeric>
#include <random>

#include "eprdist/errors.h"
#include "gtest/gtest.h"
#include "test_support.h"

using namespace eprdist;
using eprdist::testing::random_density;
using eprdist::testing::random_hermitian;

namespace {

// Determinant by Gaussian elimination with partial pivoting.
template <std::size_t N>
Complex determinant(CMatrix<N> m) {
  Complex det = 1.0;
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < N; ++r) {
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) {
        pivot = r;
      }
    }
    if (m(pivot, col) == Complex(0.0)) {
      return 0.0;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < N; ++j) {
        std::swap(m(pivot, j), m(col, j));
      }
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < N; ++r) {
      const Complex factor = m(r, col) / m(col, col);
      for (std::size_t j = col; j < N; ++j) {
        m(r, j) -= factor * m(col, j);
      }
    }
  }
  return det;
}

}  // namespace

TEST(pauli, algebra) {
  const Complex i(0.0, 1.0);
  EXPECT_LT((pauli(1) * pauli(2) - i * pauli(3)).frobenius_norm(), 1e-15);
  for (unsigned k = 0; k < 4; ++k) {
    EXPECT_LT((pauli(k) * pauli(k) - CMatrix2::identity()).frobenius_norm(), 1e-15);
  }
  EXPECT_THROW(pauli(4), ValidationError);
}

TEST(kron, block_structure) {
  const CMatrix4 xz = kron(pauli(1), pauli(3));
  EXPECT_EQ(xz(0, 2), Complex(1.0));
  EXPECT_EQ(xz(1, 3), Complex(-1.0));
  EXPECT_EQ(xz(0, 0), Complex(0.0));
  EXPECT_EQ((kron(pauli(0), pauli(0)) - CMatrix4::identity()).frobenius_norm(), 0.0);
}

TEST(hermitian_eigenvalues, examples) {
  const auto ident = hermitian_eigenvalues(CMatrix4::identity());
  for (double v : ident) {
    EXPECT_DOUBLE_EQ(v, 1.0);
  }
  const auto diag = hermitian_eigenvalues(CMatrix4::diagonal({1.0, 3.0, 4.0, 2.0}));
  EXPECT_EQ(diag, (std::array<double, 4>{4.0, 3.0, 2.0, 1.0}));
}

TEST(hermitian_eigenvalues, characteristic_identities) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    const CMatrix4 m = random_hermitian<4>(rng);
    const auto values = hermitian_eigenvalues(m);
    EXPECT_TRUE(std::is_sorted(values.rbegin(), values.rend()));
    const double sum = std::accumulate(values.begin(), values.end(), 0.0);
    const double product = values[0] * values[1] * values[2] * values[3];
    EXPECT_NEAR(sum, m.trace().real(), 1e-11);
    EXPECT_NEAR(product, determinant(m).real(), 1e-10 * std::max(1.0, std::abs(product)));
  }
}

TEST(hermitian_eigensystem, reconstruction_and_orthonormality) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 500; ++trial) {
    const CMatrix4 m = random_hermitian<4>(rng);
    const auto eig = hermitian_eigensystem(m);
    EXPECT_LT((eig.reconstruct() - m).frobenius_norm(), 1e-10);
    EXPECT_LT((eig.vectors.adjoint() * eig.vectors - CMatrix4::identity()).frobenius_norm(), 1e-12);
  }
  const CMatrix2 m2 = random_hermitian<2>(rng);
  EXPECT_LT((hermitian_eigensystem(m2).reconstruct() - m2).frobenius_norm(), 1e-12);
}

TEST(hermitian_eigensystem, degenerate_spectrum) {
  // Repeated eigenvalue conjugated by a random unitary.
  std::mt19937_64 rng(53);
  const auto basis = hermitian_eigensystem(random_hermitian<4>(rng)).vectors;
  const CMatrix4 m = basis * CMatrix4::diagonal({2.0, 2.0, -1.0, 0.0}) * basis.adjoint();
  const auto values = hermitian_eigenvalues(m);
  EXPECT_NEAR(values[0], 2.0, 1e-13);
  EXPECT_NEAR(values[1], 2.0, 1e-13);
  EXPECT_NEAR(values[2], 0.0, 1e-13);
  EXPECT_NEAR(values[3], -1.0, 1e-13);
}

TEST(hermitian_eigensystem, rejects_non_hermitian) {
  CMatrix4 m = CMatrix4::identity();
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eigensystem(m), ValidationError);
}

TEST(psd_sqrt, examples) {
  EXPECT_LT((psd_sqrt(CMatrix4::identity()) - CMatrix4::identity()).frobenius_norm(), 1e-15);
  EXPECT_LT((psd_sqrt(CMatrix4::diagonal({4, 1, 0, 9})) - CMatrix4::diagonal({2, 1, 0, 3}))
                .frobenius_norm(),
            1e-15);
  EXPECT_THROW(psd_sqrt(CMatrix4::diagonal({1, 1, 1, -1e-3})), ValidationError);
  EXPECT_THROW(psd_sqrt(CMatrix4::diagonal({1, 1, 1, -1e-9})), ValidationError);
  // Rounding-level negatives are clamped.
  EXPECT_NO_THROW(psd_sqrt(CMatrix4::diagonal({1, 1, 1, -1e-12})));
}

TEST(psd_sqrt, squares_back) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 300; ++trial) {
    const CMatrix4 m = random_density<4>(rng);
    const CMatrix4 root = psd_sqrt(m);
    EXPECT_LT((root * root - m).frobenius_norm(), 1e-9);
    EXPECT_LT(root.hermiticity_defect(), 1e-14);
  }
}
