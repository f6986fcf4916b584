#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace eprdist {

using Complex = std::complex<double>;

/// Dense row-major N x N complex matrix with value semantics.
template <std::size_t N>
class CMatrix {
 public:
  CMatrix() = default;

  static CMatrix identity() {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
      m(i, i) = 1.0;
    }
    return m;
  }

  static CMatrix diagonal(const std::array<double, N> &diag) {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
      m(i, i) = diag[i];
    }
    return m;
  }

  /// |v><v|
  static CMatrix outer(const std::array<Complex, N> &v) {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        m(i, j) = v[i] * std::conj(v[j]);
      }
    }
    return m;
  }

  static constexpr std::size_t size() { return N; }

  Complex &operator()(std::size_t i, std::size_t j) { return data_[i * N + j]; }
  const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * N + j]; }

  CMatrix adjoint() const {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        m(i, j) = std::conj((*this)(j, i));
      }
    }
    return m;
  }

  /// Entrywise complex conjugate (not the adjoint).
  CMatrix conjugate() const {
    CMatrix m;
    for (std::size_t k = 0; k < N * N; ++k) {
      m.data_[k] = std::conj(data_[k]);
    }
    return m;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      t += (*this)(i, i);
    }
    return t;
  }

  double frobenius_norm() const {
    double sum = 0.0;
    for (const Complex &z : data_) {
      sum += std::norm(z);
    }
    return std::sqrt(sum);
  }

  /// Largest |A - A^dagger| entry.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = i; j < N; ++j) {
        worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
      }
    }
    return worst;
  }

  /// Expectation <v|A|v>.
  Complex expectation(const std::array<Complex, N> &v) const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        sum += std::conj(v[i]) * (*this)(i, j) * v[j];
      }
    }
    return sum;
  }

  CMatrix &operator+=(const CMatrix &o) {
    for (std::size_t k = 0; k < N * N; ++k) {
      data_[k] += o.data_[k];
    }
    return *this;
  }

  CMatrix &operator-=(const CMatrix &o) {
    for (std::size_t k = 0; k < N * N; ++k) {
      data_[k] -= o.data_[k];
    }
    return *this;
  }

  CMatrix &operator*=(Complex scalar) {
    for (Complex &z : data_) {
      z *= scalar;
    }
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }

  friend CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) {
          m(i, j) += aik * b(k, j);
        }
      }
    }
    return m;
  }

 private:
  std::array<Complex, N * N> data_{};
};

using CMatrix2 = CMatrix<2>;
using CMatrix4 = CMatrix<4>;

/// Kronecker product a (x) b.
CMatrix4 kron(const CMatrix2 &a, const CMatrix2 &b);

/// Pauli matrix by index: 0 = I, 1 = X, 2 = Y, 3 = Z.
const CMatrix2 &pauli(unsigned k);

/// Eigen-decomposition of a Hermitian matrix: A = V diag(values) V^dagger,
/// with eigenvalues sorted descending and eigenvectors in the columns of V.
template <std::size_t N>
struct Eigensystem {
  std::array<double, N> values{};
  CMatrix<N> vectors;

  CMatrix<N> reconstruct() const {
    return vectors * CMatrix<N>::diagonal(values) * vectors.adjoint();
  }
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kNegativeEigenvalueTolerance = -1e-10;
inline constexpr double kJacobiRelativeTolerance = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic complex Jacobi. Throws ValidationError for non-Hermitian input and
/// NumericError if the off-diagonal norm has not dropped below
/// 1e-14 * ||A||_F after 100 sweeps.
template <std::size_t N>
Eigensystem<N> hermitian_eigensystem(const CMatrix<N> &m);

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const CMatrix<N> &m) {
  return hermitian_eigensystem(m).values;
}

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [kNegativeEigenvalueTolerance, 0) are treated as rounding
/// noise and clamped.
template <std::size_t N>
CMatrix<N> psd_sqrt(const CMatrix<N> &m);

extern template Eigensystem<2> hermitian_eigensystem(const CMatrix<2> &);
extern template Eigensystem<4> hermitian_eigensystem(const CMatrix<4> &);
extern template CMatrix<2> psd_sqrt(const CMatrix<2> &);
extern template CMatrix<4> psd_sqrt(const CMatrix<4> &);

}  // namespace eprdist
