#include "holoq/holonomy.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "holoq/errors.hpp"
#include "holoq/linalg.hpp"
#include "holoq/tolerances.hpp"

namespace holoq {

namespace {

double require_closed(const ControlMatrix& x, const char* who) {
  const double p = penalty(x);
  if (p > tol::kClosedLoop) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", p);
    throw OpenLoopError(std::string(who) + ": loop does not close, penalty = " + buf,
                        p);
  }
  return p;
}

}  // namespace

HolonomyResult holonomy_exact(const ControlMatrix& x) {
  require_closed(x, "holonomy_exact");
  HolonomyResult result;
  result.unitary = expm_antihermitian(-x.omega());
  result.method = HolonomyMethod::kExact;
  result.steps = 0;
  result.residual = unitarity_defect(result.unitary);
  return result;
}

HolonomyResult holonomy_path_ordered(const ControlMatrix& x, std::size_t steps) {
  if (steps < 10) {
    throw InsufficientStepsError("holonomy_path_ordered: need at least 10 steps, got " +
                                 std::to_string(steps));
  }
  require_closed(x, "holonomy_path_ordered");

  const std::size_t n = x.ambient_dim();
  const std::size_t k = x.gate_dim();
  const UnitaryFlow flow(x.assemble());

  // March the frame around the loop and accumulate the transport factors.
  // Each frame is evaluated directly from the spectral flow at its own grid
  // time; chaining one step transport instead would compound its rounding
  // quadratically in the step count.
  const ComplexMatrix v0 = reference_frame(n, k).v;
  ComplexMatrix frame = v0;
  ComplexMatrix u = ComplexMatrix::identity(k);
  for (std::size_t i = 1; i <= steps; ++i) {
    ComplexMatrix next = flow(double(i) / double(steps)) * v0;
    u = (next.adjoint() * frame) * u;
    frame = std::move(next);
  }

  HolonomyResult result;
  result.unitary = std::move(u);
  result.method = HolonomyMethod::kPathOrdered;
  result.steps = steps;
  result.residual = unitarity_defect(result.unitary);
  return result;
}

ComplexMatrix connection_numeric(const ControlMatrix& x, double t, double dt) {
  if (t < 0.0 || t > 1.0) {
    throw DimensionError("connection_numeric: t must lie in [0, 1]");
  }
  if (!(dt > 0.0) || dt > 1e-4) {
    throw DimensionError("connection_numeric: dt must lie in (0, 1e-4]");
  }
  const std::size_t n = x.ambient_dim();
  const std::size_t k = x.gate_dim();
  const UnitaryFlow flow(x.assemble());
  const ComplexMatrix v0 = reference_frame(n, k).v;
  const ComplexMatrix here = flow(t) * v0;
  const ComplexMatrix fwd = flow(t + dt) * v0;
  const ComplexMatrix bwd = flow(t - dt) * v0;
  return here.adjoint() * ((fwd - bwd) * (1.0 / (2.0 * dt)));
}

}  // namespace holoq
