#pragma once

#include <cstddef>

#include "holoq/manifold.hpp"
#include "holoq/matrix.hpp"

namespace holoq {

enum class HolonomyMethod { kExact, kPathOrdered };

struct HolonomyResult {
  ComplexMatrix unitary;   // k x k holonomy of the closed loop
  HolonomyMethod method = HolonomyMethod::kExact;
  std::size_t steps = 0;   // discretisation steps (0 for the exact method)
  double residual = 0.0;   // |U†U - I|_F of the returned matrix
};

// Exact holonomy of a closed small-circle loop: U = e^{-Omega} with Omega
// the upper-left block of X. Requires penalty(X) below the closed-loop
// tolerance; throws OpenLoopError (carrying the penalty) otherwise.
HolonomyResult holonomy_exact(const ControlMatrix& x);

// Independent numerical oracle: the ordered product, later factors on the
// left, of the frame overlaps V(t_{i+1})† V(t_i) for V(t) = e^{tX} V0 on a
// uniform grid. Each overlap equals e^{-A dt} + O(dt²) for the connection
// A = V† dV, so the product converges to the exact holonomy at first order
// in 1/steps and is exact whenever W = 0 (A constant along a block-diagonal
// flow). Requires steps >= 10 and a closed loop.
HolonomyResult holonomy_path_ordered(const ControlMatrix& x, std::size_t steps);

// Finite-difference connection A(t) = V(t)† dV/dt (t) along the loop, by a
// central difference with spacing dt. For a closed-loop generator the result
// is t-independent and equals Omega. Requires 0 <= t <= 1, 0 < dt <= 1e-4.
ComplexMatrix connection_numeric(const ControlMatrix& x, double t, double dt);

}  // namespace holoq
