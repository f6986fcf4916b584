#include "eprdist/linalg.h"

#include <algorithm>
#include <numeric>

#include "eprdist/errors.h"

namespace eprdist {

CMatrix4 kron(const CMatrix2 &a, const CMatrix2 &b) {
  CMatrix4 m;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return m;
}

const CMatrix2 &pauli(unsigned k) {
  static const std::array<CMatrix2, 4> paulis = [] {
    std::array<CMatrix2, 4> p;
    p[0] = CMatrix2::identity();
    p[1](0, 1) = 1.0;
    p[1](1, 0) = 1.0;
    p[2](0, 1) = Complex(0.0, -1.0);
    p[2](1, 0) = Complex(0.0, 1.0);
    p[3](0, 0) = 1.0;
    p[3](1, 1) = -1.0;
    return p;
  }();
  if (k > 3) {
    throw ValidationError("Pauli index must be in 0..3");
  }
  return paulis[k];
}

namespace {

template <std::size_t N>
double off_diagonal_norm(const CMatrix<N> &a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (i != j) {
        sum += std::norm(a(i, j));
      }
    }
  }
  return std::sqrt(sum);
}

}  // namespace

template <std::size_t N>
Eigensystem<N> hermitian_eigensystem(const CMatrix<N> &m) {
  const double norm = m.frobenius_norm();
  if (!std::isfinite(norm)) {
    throw ValidationError("matrix entries must be finite");
  }
  if (m.hermiticity_defect() > kHermitianTolerance * std::max(1.0, norm)) {
    throw ValidationError("matrix is not Hermitian");
  }

  CMatrix<N> a = m;
  CMatrix<N> v = CMatrix<N>::identity();
  const double target = kJacobiRelativeTolerance * norm;

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > kJacobiMaxSweeps) {
      throw NumericError("Jacobi eigenvalue iteration did not converge");
    }
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) {
          continue;
        }
        // Phase the (p,q) element real, then apply a real Jacobi rotation.
        const Complex phase = std::conj(apq) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        CMatrix<N> u = CMatrix<N>::identity();
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -s * phase;
        u(q, q) = c * phase;

        a = u.adjoint() * a * u;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
          a(i, i) = a(i, i).real();
        }
        v = v * u;
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  Eigensystem<N> result;
  for (std::size_t k = 0; k < N; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < N; ++i) {
      result.vectors(i, k) = v(i, order[k]);
    }
  }
  return result;
}

template <std::size_t N>
CMatrix<N> psd_sqrt(const CMatrix<N> &m) {
  Eigensystem<N> eig = hermitian_eigensystem(m);
  for (double &lambda : eig.values) {
    if (lambda < kNegativeEigenvalueTolerance) {
      throw ValidationError("matrix is not positive semidefinite");
    }
    lambda = std::sqrt(std::max(lambda, 0.0));
  }
  return eig.reconstruct();
}

template Eigensystem<2> hermitian_eigensystem(const CMatrix<2> &);
template Eigensystem<4> hermitian_eigensystem(const CMatrix<4> &);
template CMatrix<2> psd_sqrt(const CMatrix<2> &);
template CMatrix<4> psd_sqrt(const CMatrix<4> &);

}  // namespace eprdist
