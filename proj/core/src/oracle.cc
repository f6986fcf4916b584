#include "eprdist/oracle.h"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "eprdist/errors.h"

namespace eprdist {

namespace {

constexpr double kDensityTolerance = 1e-12;

}  // namespace

template <std::size_t N>
DensityMatrix<N>::DensityMatrix(const CMatrix<N> &m) : m_(m) {
  if (m.hermiticity_defect() > kDensityTolerance) {
    throw ValidationError("density matrix must be Hermitian");
  }
  const Complex tr = m.trace();
  if (std::abs(tr.real() - 1.0) > kDensityTolerance || std::abs(tr.imag()) > kDensityTolerance) {
    throw ValidationError("density matrix must have unit trace");
  }
  const auto values = hermitian_eigenvalues(m);
  if (values[N - 1] < kNegativeEigenvalueTolerance) {
    throw ValidationError("density matrix must be positive semidefinite");
  }
}

template <std::size_t N>
DensityMatrix<N> DensityMatrix<N>::maximally_mixed() {
  return DensityMatrix(CMatrix<N>::identity() * Complex(1.0 / static_cast<double>(N)));
}

template <std::size_t N>
DensityMatrix<N> DensityMatrix<N>::basis_state(std::size_t index) {
  if (index >= N) {
    throw ValidationError("basis index out of range");
  }
  CMatrix<N> m;
  m(index, index) = 1.0;
  return DensityMatrix(m);
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;

std::array<Complex, 4> bell_vector(BellState kind) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case BellState::psi_plus: return {h, 0.0, 0.0, h};
    case BellState::psi_minus: return {h, 0.0, 0.0, -h};
    case BellState::phi_plus: return {0.0, h, h, 0.0};
    case BellState::phi_minus: return {0.0, h, -h, 0.0};
  }
  throw ValidationError("unknown Bell state");
}

DensityMatrix4 bell_state(BellState kind) { return DensityMatrix4(CMatrix4::outer(bell_vector(kind))); }

DensityMatrix2 apply_single_qubit_pauli(const PauliProbs &p, const DensityMatrix2 &rho) {
  CMatrix2 out;
  for (unsigned k = 0; k < 4; ++k) {
    if (p[k] == 0.0) {
      continue;
    }
    out += p[k] * (pauli(k) * rho.matrix() * pauli(k));
  }
  return DensityMatrix2(out);
}

DensityMatrix4 apply_two_sided(const PauliProbs &r, const PauliProbs &s, const DensityMatrix4 &rho) {
  CMatrix4 out;
  for (unsigned k = 0; k < 4; ++k) {
    for (unsigned l = 0; l < 4; ++l) {
      const double weight = r[k] * s[l];
      if (weight == 0.0) {
        continue;
      }
      const CMatrix4 op = kron(pauli(k), pauli(l));
      out += weight * (op * rho.matrix() * op);
    }
  }
  return DensityMatrix4(out);
}

double wootters_concurrence(const DensityMatrix4 &rho) {
  const CMatrix4 yy = kron(pauli(2), pauli(2));
  const CMatrix4 flipped = yy * rho.matrix().conjugate() * yy;
  const CMatrix4 root = psd_sqrt(flipped);
  CMatrix4 product = root * rho.matrix() * root;
  // Symmetrise away rounding so the Hermitian solver sees an exact Hermitian.
  product = 0.5 * (product + product.adjoint());

  auto values = hermitian_eigenvalues(product);
  // Eigenvalues below the solver's resolution are zero; their square roots
  // would otherwise inject ~1e-8 noise.
  const double floor = 4.0 * DBL_EPSILON * std::max(1.0, product.frobenius_norm());
  std::array<double, 4> roots{};
  for (std::size_t i = 0; i < 4; ++i) {
    roots[i] = values[i] > floor ? std::sqrt(values[i]) : 0.0;
  }
  return std::clamp(roots[0] - roots[1] - roots[2] - roots[3], 0.0, 1.0);
}

BellProjection bell_diagonal_project(const DensityMatrix4 &rho) {
  std::array<double, 4> weights{};
  CMatrix4 diagonal_part;
  for (unsigned i = 0; i < 4; ++i) {
    const auto v = bell_vector(static_cast<BellState>(i));
    weights[i] = rho.matrix().expectation(v).real();
    diagonal_part += weights[i] * CMatrix4::outer(v);
  }
  return {BellDiagonal(weights), (rho.matrix() - diagonal_part).frobenius_norm()};
}

BellState bell_outcome(unsigned k, unsigned l) {
  switch (pauli_product(k, l)) {
    case 0: return BellState::psi_plus;
    case 1: return BellState::phi_plus;
    case 2: return BellState::phi_minus;
    default: return BellState::psi_minus;
  }
}

}  // namespace eprdist
