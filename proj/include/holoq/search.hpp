#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "holoq/matrix.hpp"
#include "holoq/synthesis.hpp"

namespace holoq {

struct SearchSettings {
  double objective_tolerance = 1e-14;  // penalty counting as an exact zero
  double initial_step = 0.5;
  double min_step = 1e-9;
  std::size_t max_evaluations = 200000;
  // Iterates closer to W = 0 than this are rejected, keeping the search away
  // from the constant-curve minimum at the origin.
  double barrier_radius = 0.1;
};

// Identification of a coupling column with an analytic family member.
struct FamilyMatch {
  std::size_t mu = 0;              // 1-based family
  int winding = 0;                 // positive representative
  double norm_error = 0.0;         // | |W| - a(omega_mu, n) |
  double direction_residual = 0.0; // |P_mu d - d| for the unit direction d
};

struct SearchResult {
  ComplexMatrix w;                 // best coupling column found
  double objective = 0.0;          // its closure penalty
  std::size_t evaluations = 0;
  bool converged = false;          // objective <= tolerance
  std::optional<FamilyMatch> classified;  // set when converged and matched
};

// Closure penalty of the candidate generator
//   X(W) = [ Omega  W ]
//          [ -W†    0 ]
// as a function of the k x 1 coupling column, with Omega the target's
// principal generator block.
double penalty_objective(const TargetGate& target, const ComplexMatrix& w);

// Derivative-free search over the 2k real coordinates of W. Inner loop is a
// compass descent: probe +/- step along each coordinate and move on first
// improvement; on a full stall, probe a deterministic batch of random
// directions of the same length (axis probes alone wedge in diagonal
// valleys), and halve the step only when those fail too. The penalty is
// multimodal, so when the step bottoms out above the tolerance the search
// basin-hops: it restarts from the best point seen plus a random kick,
// doubling the kick length after unproductive hops so it can jump clear of
// wide basins (notably the excluded origin's), until it converges or the
// evaluation budget runs out. All randomness is seeded per call, so repeated
// runs from the same start are identical. Throws DegenerateStartError when the start
// lies inside the barrier radius (the origin is the constant curve, not a
// loop).
SearchResult minimize_penalty(const TargetGate& target,
                              const ComplexMatrix& initial_w,
                              const SearchSettings& settings = {});

// Match a coupling column against the analytic families: the radius must
// sit within the classification tolerance of some a(omega_mu, n) and the
// direction inside the family eigenspace.
std::optional<FamilyMatch> classify_solution(const TargetGate& target,
                                             const ComplexMatrix& w);

// Penalty profile along a ray: samples (r_i, penalty(r_i * direction)) for
// r_i uniform on [0, r_max]. The direction must be a unit column.
std::vector<std::pair<double, double>> scan_penalty_ray(
    const TargetGate& target, const ComplexMatrix& direction, double r_max,
    std::size_t samples);

}  // namespace holoq
