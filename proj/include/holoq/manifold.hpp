#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "holoq/matrix.hpp"

namespace holoq {

// An isometric N x k frame V with V†V = I. Frames are the working
// coordinates; physical states are the subspaces they span.
struct StiefelFrame {
  StiefelFrame(std::size_t ambient, std::size_t rank, ComplexMatrix v);

  std::size_t ambient = 0;  // N
  std::size_t rank = 0;     // k, with 1 <= k < N
  ComplexMatrix v;          // N x k, orthonormal columns
};

// A rank-k orthogonal projector P = P† = P² with tr P = k: one point of the
// space of k-dimensional subspaces of C^N.
struct GrassmannPoint {
  GrassmannPoint(std::size_t ambient, std::size_t rank, ComplexMatrix p);

  std::size_t ambient = 0;
  std::size_t rank = 0;
  ComplexMatrix p;  // N x N
};

// Anti-Hermitian generator of a candidate control loop, in the block form
//   X = [ Omega   W ]
//       [ -W†     Z ]
// with Omega the k x k gate generator, W the k x (N-k) coupling, and Z the
// residual lower block (zero for every constructed solution).
class ControlMatrix {
 public:
  static ControlMatrix from_blocks(ComplexMatrix omega, ComplexMatrix w,
                                   ComplexMatrix z);
  // Split a full anti-Hermitian N x N matrix at row/column gate_dim.
  static ControlMatrix from_matrix(const ComplexMatrix& x, std::size_t gate_dim);

  std::size_t gate_dim() const { return k_; }                  // k
  std::size_t ambient_dim() const { return k_ + w_.cols(); }   // N

  const ComplexMatrix& omega() const { return omega_; }
  const ComplexMatrix& w() const { return w_; }
  const ComplexMatrix& z() const { return z_; }

  ComplexMatrix assemble() const;        // the full N x N generator
  ControlMatrix scaled(double t) const;  // generator of the partial loop tX

  // Provenance labels set by the synthesis layer (1-based family, winding n).
  std::optional<int> family_mu;
  std::optional<int> winding;

 private:
  ControlMatrix() = default;

  std::size_t k_ = 0;
  ComplexMatrix omega_, w_, z_;
};

// The distinguished base frame V0 = [I_k; 0].
StiefelFrame reference_frame(std::size_t ambient, std::size_t rank);

// Bundle projection V -> V V†, invariant under V -> V h for unitary h.
GrassmannPoint project(const StiefelFrame& frame);

// Point of the loop P(t) = e^{tX} P0 e^{-tX}, t in [0, 1].
GrassmannPoint loop_point(const ControlMatrix& x, double t);

// Closure penalty: squared Frobenius norm of the upper-right k x (N-k)
// block of e^{X}. Zero exactly when the loop closes, i.e. e^{X} is block
// diagonal and P(1) = P(0).
double penalty(const ControlMatrix& x);

// Constant speed of the loop, |W|_F: the length functional being ranked.
double loop_speed(const ControlMatrix& x);

// Uniform samples (t_i, penalty(t_i X)) over t in [0, 1].
std::vector<std::pair<double, double>> winding_profile(const ControlMatrix& x,
                                                       std::size_t samples);

struct WindingCount {
  std::size_t interior_zeros = 0;  // interior revisits of P(0); |n| - 1 for members
  bool degenerate = false;         // identically-zero profile (constant curve)
};

// Counts interior returns of the partial-loop penalty to zero. Each strict
// local minimum of the sampled profile is refined by golden-section search
// before the zero threshold is applied, so revisits that fall between grid
// points are still counted.
WindingCount winding_zero_count(const ControlMatrix& x, std::size_t samples = 1001);

}  // namespace holoq
