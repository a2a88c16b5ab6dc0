#include "holoq/manifold.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "holoq/errors.hpp"
#include "holoq/linalg.hpp"
#include "holoq/tolerances.hpp"

namespace holoq {

namespace {

double operand_scale(const ComplexMatrix& m) {
  return std::max(1.0, frobenius_norm(m));
}

void require_rank_range(std::size_t ambient, std::size_t rank, const char* who) {
  if (rank < 1 || rank >= ambient) {
    throw DimensionError(std::string(who) + ": need 1 <= k < N, got k = " +
                         std::to_string(rank) + ", N = " + std::to_string(ambient));
  }
}

// Penalty of t*X evaluated from a prebuilt flow: squared norm of the
// upper-right block of e^{tX}.
double penalty_at(const UnitaryFlow& flow, std::size_t k, double t) {
  const ComplexMatrix e = flow(t);
  const std::size_t n = flow.dim();
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = k; j < n; ++j) {
      sum += std::norm(e(i, j));
    }
  }
  return sum;
}

// Golden-section minimisation of the penalty on [lo, hi].
double refine_minimum(const UnitaryFlow& flow, std::size_t k, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = penalty_at(flow, k, x1);
  double f2 = penalty_at(flow, k, x2);
  for (int iter = 0; iter < 200 && (b - a) > 1e-13; ++iter) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = penalty_at(flow, k, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = penalty_at(flow, k, x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

StiefelFrame::StiefelFrame(std::size_t ambient_in, std::size_t rank_in,
                           ComplexMatrix v_in)
    : ambient(ambient_in), rank(rank_in), v(std::move(v_in)) {
  require_rank_range(ambient, rank, "StiefelFrame");
  if (v.rows() != ambient || v.cols() != rank) {
    throw DimensionError("StiefelFrame: matrix shape does not match N x k");
  }
  const double defect =
      frobenius_distance(v.adjoint() * v, ComplexMatrix::identity(rank));
  if (defect > tol::kFrame * operand_scale(v)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", defect);
    throw InvalidFrameError(std::string("StiefelFrame: |V†V - I| = ") + buf);
  }
}

GrassmannPoint::GrassmannPoint(std::size_t ambient_in, std::size_t rank_in,
                               ComplexMatrix p_in)
    : ambient(ambient_in), rank(rank_in), p(std::move(p_in)) {
  require_rank_range(ambient, rank, "GrassmannPoint");
  if (p.rows() != ambient || p.cols() != ambient) {
    throw DimensionError("GrassmannPoint: matrix is not N x N");
  }
  const double scale = operand_scale(p);
  const double herm = hermiticity_defect(p);
  const double idem = frobenius_distance(p * p, p);
  const double rank_defect = std::abs(p.trace() - Complex(double(rank), 0.0));
  if (herm > tol::kProjector * scale || idem > tol::kProjector * scale ||
      rank_defect > tol::kProjector * scale) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "herm %.3g, idem %.3g, trace %.3g", herm,
                  idem, rank_defect);
    throw InvalidFrameError(std::string("GrassmannPoint: not a rank-k projector (") +
                            buf + ")");
  }
}

ControlMatrix ControlMatrix::from_blocks(ComplexMatrix omega, ComplexMatrix w,
                                         ComplexMatrix z) {
  const std::size_t k = omega.rows();
  const std::size_t m = w.cols();
  if (omega.cols() != k || k == 0) {
    throw DimensionError("ControlMatrix: Omega must be square and non-empty");
  }
  if (w.rows() != k || m == 0) {
    throw DimensionError("ControlMatrix: W must be k x (N-k) with N > k");
  }
  if (z.rows() != m || z.cols() != m) {
    throw DimensionError("ControlMatrix: Z must be (N-k) x (N-k)");
  }
  if (anti_hermiticity_defect(omega) > tol::kAntiHermitian * operand_scale(omega)) {
    throw NotAntiHermitianError("ControlMatrix: Omega block is not anti-Hermitian");
  }
  if (anti_hermiticity_defect(z) > tol::kAntiHermitian * operand_scale(z)) {
    throw NotAntiHermitianError("ControlMatrix: Z block is not anti-Hermitian");
  }
  ControlMatrix x;
  x.k_ = k;
  x.omega_ = std::move(omega);
  x.w_ = std::move(w);
  x.z_ = std::move(z);
  return x;
}

ControlMatrix ControlMatrix::from_matrix(const ComplexMatrix& x, std::size_t gate_dim) {
  if (x.rows() != x.cols()) {
    throw DimensionError("ControlMatrix: matrix is not square");
  }
  const std::size_t n = x.rows();
  require_rank_range(n, gate_dim, "ControlMatrix");
  const double defect = anti_hermiticity_defect(x);
  if (defect > tol::kAntiHermitian * operand_scale(x)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", defect);
    throw NotAntiHermitianError(std::string("ControlMatrix: |X + X†| = ") + buf);
  }
  ControlMatrix out;
  out.k_ = gate_dim;
  out.omega_ = x.block(0, 0, gate_dim, gate_dim);
  out.w_ = x.block(0, gate_dim, gate_dim, n - gate_dim);
  out.z_ = x.block(gate_dim, gate_dim, n - gate_dim, n - gate_dim);
  return out;
}

ComplexMatrix ControlMatrix::assemble() const {
  const std::size_t n = ambient_dim();
  ComplexMatrix x(n, n);
  x.set_block(0, 0, omega_);
  x.set_block(0, k_, w_);
  x.set_block(k_, 0, -w_.adjoint());
  x.set_block(k_, k_, z_);
  return x;
}

ControlMatrix ControlMatrix::scaled(double t) const {
  ControlMatrix x;
  x.k_ = k_;
  x.omega_ = t * omega_;
  x.w_ = t * w_;
  x.z_ = t * z_;
  return x;  // labels dropped: a partial loop is no longer a family member
}

StiefelFrame reference_frame(std::size_t ambient, std::size_t rank) {
  require_rank_range(ambient, rank, "reference_frame");
  ComplexMatrix v(ambient, rank);
  for (std::size_t j = 0; j < rank; ++j) v(j, j) = 1.0;
  return StiefelFrame(ambient, rank, std::move(v));
}

GrassmannPoint project(const StiefelFrame& frame) {
  return GrassmannPoint(frame.ambient, frame.rank, frame.v * frame.v.adjoint());
}

GrassmannPoint loop_point(const ControlMatrix& x, double t) {
  const std::size_t n = x.ambient_dim();
  const std::size_t k = x.gate_dim();
  const ComplexMatrix transport = UnitaryFlow(x.assemble())(t);
  // e^{tX} V0 is just the first k columns of the transport.
  StiefelFrame frame(n, k, transport.block(0, 0, n, k));
  return project(frame);
}

double penalty(const ControlMatrix& x) {
  return penalty_at(UnitaryFlow(x.assemble()), x.gate_dim(), 1.0);
}

double loop_speed(const ControlMatrix& x) { return frobenius_norm(x.w()); }

std::vector<std::pair<double, double>> winding_profile(const ControlMatrix& x,
                                                       std::size_t samples) {
  if (samples < 2) {
    throw DimensionError("winding_profile: need at least 2 samples");
  }
  const UnitaryFlow flow(x.assemble());
  const std::size_t k = x.gate_dim();
  std::vector<std::pair<double, double>> profile;
  profile.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = double(i) / double(samples - 1);
    profile.emplace_back(t, penalty_at(flow, k, t));
  }
  return profile;
}

WindingCount winding_zero_count(const ControlMatrix& x, std::size_t samples) {
  const auto profile = winding_profile(x, samples);
  double peak = 0.0;
  for (const auto& [t, p] : profile) peak = std::max(peak, p);
  WindingCount count;
  if (peak < 1e-15) {
    count.degenerate = true;  // constant curve: winding is undefined
    return count;
  }
  const UnitaryFlow flow(x.assemble());
  const std::size_t k = x.gate_dim();
  for (std::size_t i = 1; i + 1 < profile.size(); ++i) {
    const bool strict_min = profile[i].second < profile[i - 1].second &&
                            profile[i].second < profile[i + 1].second;
    if (!strict_min) continue;
    const double refined =
        refine_minimum(flow, k, profile[i - 1].first, profile[i + 1].first);
    if (refined < tol::kWindingZero) ++count.interior_zeros;
  }
  return count;
}

}  // namespace holoq
