#pragma once

#include <random>
#include <vector>

#include "holoq/matrix.hpp"

namespace holoq {

// Eigen-data of a Hermitian matrix: H = Q diag(eigenvalues) Q†.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // real, ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, same order
};

// Cyclic Jacobi rotations specialised to complex Hermitian input. Matrices
// here never exceed a few dozen rows, so robustness wins over asymptotics
// and the library stays free of external numeric dependencies.
SpectralDecomposition hermitian_eig(const ComplexMatrix& h);

// The one-parameter unitary group t -> e^{tX} of an anti-Hermitian X,
// realised through a single spectral decomposition of the Hermitian -iX.
class UnitaryFlow {
 public:
  explicit UnitaryFlow(const ComplexMatrix& x);

  std::size_t dim() const { return basis_.rows(); }
  ComplexMatrix operator()(double t) const;  // e^{tX}

 private:
  ComplexMatrix basis_;         // X = basis diag(i*angles) basis†
  std::vector<double> angles_;
};

ComplexMatrix expm_antihermitian(const ComplexMatrix& x);  // e^{X}

// Spectrum of a unitary in the e^{-i omega} convention:
// U u_j = e^{-i omega_j} u_j with omega_j in (-pi, pi]. An eigenvalue at -1
// sits on the branch cut and is assigned +pi.
struct UnitarySpectrum {
  std::vector<double> phases;  // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns, same order
};

UnitarySpectrum unitary_eig(const ComplexMatrix& u);

// Principal anti-Hermitian logarithm: returns the unique Omega with
// eigenvalues i*omega_j, omega_j in (-pi, pi], sharing U's eigenvectors,
// such that e^{-Omega} = U.
ComplexMatrix unitary_log_principal(const ComplexMatrix& u);

// Haar-style random unitary: Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

}  // namespace holoq
