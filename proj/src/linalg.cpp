#include "holoq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "holoq/errors.hpp"
#include "holoq/tolerances.hpp"

namespace holoq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiConvergence = 1e-15;  // relative off-diagonal target

double operand_scale(const ComplexMatrix& m) {
  return std::max(1.0, frobenius_norm(m));
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Zero out a(p,q) by the unitary rotation
//   U = I except U(p,p) = c, U(p,q) = s e^{i phi}, U(q,p) = -s e^{-i phi},
//   U(q,q) = c,  with a(p,q) = r e^{i phi},
// applied as A <- U† A U, accumulating Q <- Q U.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& q, std::size_t p,
                   std::size_t r_q) {
  const std::size_t n = a.rows();
  const Complex apq = a(p, r_q);
  const double r = std::abs(apq);
  const Complex eip = apq / r;  // e^{i phi}
  const double alpha = a(p, p).real();
  const double beta = a(r_q, r_q).real();
  const double tau = (alpha - beta) / (2.0 * r);
  const double sign_tau = (tau >= 0.0) ? 1.0 : -1.0;
  const double t = -sign_tau / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // Columns: A <- A U and Q <- Q U.
  for (std::size_t i = 0; i < n; ++i) {
    const Complex aip = a(i, p);
    const Complex aiq = a(i, r_q);
    a(i, p) = c * aip - s * std::conj(eip) * aiq;
    a(i, r_q) = s * eip * aip + c * aiq;

    const Complex qip = q(i, p);
    const Complex qiq = q(i, r_q);
    q(i, p) = c * qip - s * std::conj(eip) * qiq;
    q(i, r_q) = s * eip * qip + c * qiq;
  }
  // Rows: A <- U† A.
  for (std::size_t j = 0; j < n; ++j) {
    const Complex apj = a(p, j);
    const Complex aqj = a(r_q, j);
    a(p, j) = c * apj - s * eip * aqj;
    a(r_q, j) = s * std::conj(eip) * apj + c * aqj;
  }
  // Pin the analytically exact entries to kill roundoff drift.
  a(p, r_q) = Complex(0.0, 0.0);
  a(r_q, p) = Complex(0.0, 0.0);
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(r_q, r_q) = Complex(a(r_q, r_q).real(), 0.0);
}

}  // namespace

SpectralDecomposition hermitian_eig(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw DimensionError("hermitian_eig: matrix is not square");
  }
  const std::size_t n = h.rows();
  const double scale = operand_scale(h);
  if (hermiticity_defect(h) > tol::kHermitian * scale) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", hermiticity_defect(h));
    throw NotHermitianError(std::string("hermitian_eig: |H - H†| = ") + buf);
  }

  ComplexMatrix a = h;
  ComplexMatrix q = ComplexMatrix::identity(n);
  bool converged = (n < 2);
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= kJacobiConvergence * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t c = p + 1; c < n; ++c) {
        if (std::abs(a(p, c)) <= 1e-300) continue;
        jacobi_rotate(a, q, p, c);
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > 1e-12 * scale) {
    throw Error("hermitian_eig: Jacobi sweeps failed to converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  SpectralDecomposition result;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    result.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) {
      result.eigenvectors(i, j) = q(i, order[j]);
    }
  }
  return result;
}

UnitaryFlow::UnitaryFlow(const ComplexMatrix& x) {
  if (x.rows() != x.cols()) {
    throw DimensionError("UnitaryFlow: matrix is not square");
  }
  const double scale = operand_scale(x);
  if (anti_hermiticity_defect(x) > tol::kAntiHermitian * scale) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", anti_hermiticity_defect(x));
    throw NotAntiHermitianError(std::string("UnitaryFlow: |X + X†| = ") + buf);
  }
  ComplexMatrix h = Complex(0.0, -1.0) * x;  // -iX is Hermitian
  h = 0.5 * (h + h.adjoint());
  SpectralDecomposition eig = hermitian_eig(h);
  basis_ = std::move(eig.eigenvectors);
  angles_ = std::move(eig.eigenvalues);
}

ComplexMatrix UnitaryFlow::operator()(double t) const {
  const std::size_t n = dim();
  ComplexMatrix scaled = basis_;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex phase = std::polar(1.0, t * angles_[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= phase;
  }
  return scaled * basis_.adjoint();
}

ComplexMatrix expm_antihermitian(const ComplexMatrix& x) {
  return UnitaryFlow(x)(1.0);
}

UnitarySpectrum unitary_eig(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) {
    throw DimensionError("unitary_eig: matrix is not square");
  }
  const std::size_t n = u.rows();
  const double scale = operand_scale(u);
  if (unitarity_defect(u) > tol::kUnitary * scale) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", unitarity_defect(u));
    throw NotUnitaryError(std::string("unitary_eig: |U†U - I| = ") + buf);
  }

  // U is normal, so its Hermitian and anti-Hermitian parts commute and can
  // be diagonalised jointly: eigenbasis of C first, then the residual
  // rotation of S inside each degenerate C-eigenspace.
  const ComplexMatrix uh = u.adjoint();
  const ComplexMatrix c_part = 0.5 * (u + uh);
  const ComplexMatrix s_part = Complex(0.0, -0.5) * (u - uh);

  SpectralDecomposition ec = hermitian_eig(c_part);
  ComplexMatrix q = std::move(ec.eigenvectors);

  constexpr double kClusterGap = 1e-8;
  std::size_t start = 0;
  while (start < n) {
    std::size_t stop = start + 1;
    while (stop < n && ec.eigenvalues[stop] - ec.eigenvalues[stop - 1] <= kClusterGap) {
      ++stop;
    }
    const std::size_t m = stop - start;
    if (m > 1) {
      ComplexMatrix qc = q.block(0, start, n, m);
      ComplexMatrix b = qc.adjoint() * (s_part * qc);
      b = 0.5 * (b + b.adjoint());
      SpectralDecomposition eb = hermitian_eig(b);
      q.set_block(0, start, qc * eb.eigenvectors);
    }
    start = stop;
  }

  UnitarySpectrum result;
  result.phases.resize(n);
  result.eigenvectors = ComplexMatrix(n, n);
  std::vector<std::pair<double, std::size_t>> keyed(n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix col = q.block(0, j, n, 1);
    Complex lambda = (col.adjoint() * (u * col))(0, 0);
    lambda /= std::abs(lambda);
    double omega;
    if (std::abs(lambda + Complex(1.0, 0.0)) <= tol::kMinusOneSnap) {
      omega = kPi;
    } else {
      omega = -std::arg(lambda);
      if (omega <= -kPi) omega = kPi;
    }
    keyed[j] = {omega, j};
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t j = 0; j < n; ++j) {
    result.phases[j] = keyed[j].first;
    for (std::size_t i = 0; i < n; ++i) {
      result.eigenvectors(i, j) = q(i, keyed[j].second);
    }
  }

  // Joint diagonalisation must reproduce the input; guard against a silent
  // mis-clustering instead of returning bad eigenvectors.
  ComplexMatrix rebuilt(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix col = result.eigenvectors.block(0, j, n, 1);
    rebuilt += std::polar(1.0, -result.phases[j]) * outer_product(col);
  }
  if (frobenius_distance(rebuilt, u) > 1e-8 * scale) {
    throw Error("unitary_eig: eigendecomposition residual too large");
  }
  return result;
}

ComplexMatrix unitary_log_principal(const ComplexMatrix& u) {
  const UnitarySpectrum spec = unitary_eig(u);
  const std::size_t n = u.rows();
  ComplexMatrix omega(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix col = spec.eigenvectors.block(0, j, n, 1);
    omega += Complex(0.0, spec.phases[j]) * outer_product(col);
  }
  return 0.5 * (omega - omega.adjoint());  // exact anti-Hermiticity
}

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw DimensionError("random_unitary: n must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  // Modified Gram-Schmidt; the positive-diagonal R makes the result Haar.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t prev = 0; prev < j; ++prev) {
      Complex overlap(0.0, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        overlap += std::conj(g(i, prev)) * g(i, j);
      }
      for (std::size_t i = 0; i < n; ++i) g(i, j) -= overlap * g(i, prev);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(g(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) g(i, j) /= norm;
  }
  return g;
}

}  // namespace holoq
