#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"

#include "holoq/errors.hpp"
#include "holoq/linalg.hpp"
#include "holoq/manifold.hpp"
#include "holoq/matrix.hpp"
#include "holoq/search.hpp"
#include "holoq/synthesis.hpp"

using namespace holoq;

namespace {

constexpr double kPi = std::numbers::pi;

TargetGate hadamard_target() {
  const double r = 1.0 / std::numbers::sqrt2;
  return analyze_gate(ComplexMatrix::from_rows({{r, r}, {r, -r}}));
}

// Closure penalty of the primitive one-coupling loop: r^2 sin^2(rho)/rho^2
// with rho = sqrt(omega^2/4 + r^2).
double primitive_penalty(double omega, double r) {
  const double rho = std::hypot(0.5 * omega, r);
  const double s = std::sin(rho);
  return r * r * s * s / (rho * rho);
}

ComplexMatrix scaled_direction(const ComplexMatrix& direction, double r) {
  ComplexMatrix w = direction;
  for (std::size_t i = 0; i < w.rows(); ++i) w(i, 0) *= r;
  return w;
}

}  // namespace

TEST_CASE("penalty_objective matches the closed-form ray profile") {
  const TargetGate target = hadamard_target();
  const ComplexMatrix axis = target.canonical_direction(2);
  for (double r : {0.4, 1.3, 2.7206990463513265, 4.0}) {
    const double objective = penalty_objective(target, scaled_direction(axis, r));
    CHECK(std::abs(objective - primitive_penalty(kPi, r)) <= 1e-12);
  }
  // Exact members are numerical zeros of the objective.
  const ControlMatrix member =
      build_solution(target, 2, axis, 1);
  CHECK(penalty_objective(target, member.w()) <= 1e-28);
  CHECK_THROWS_AS(penalty_objective(target, ComplexMatrix(3, 1)),
                  DimensionError);
}

TEST_CASE("scan_penalty_ray hits the analytic closing radii") {
  const TargetGate target = hadamard_target();

  {  // Branch-cut family: zeros at pi sqrt(3)/2 and pi sqrt(15)/2.
    const auto profile =
        scan_penalty_ray(target, target.canonical_direction(2), 7.0, 1401);
    REQUIRE(profile.size() == 1401);
    CHECK(profile.front().first == 0.0);
    CHECK(profile.front().second <= 1e-28);
    CHECK(profile.back().first == doctest::Approx(7.0).epsilon(1e-15));
    for (double zero : {2.7206990463513265, 6.0836766547107275}) {
      double window_min = 1.0;
      for (const auto& [r, p] : profile) {
        if (std::abs(r - zero) <= 0.01) window_min = std::min(window_min, p);
      }
      CHECK(window_min <= 1e-4);
    }
    // Away from the zeros the penalty stays visibly positive.
    for (const auto& [r, p] : profile) {
      if (std::abs(r - 1.5) <= 0.2) CHECK(p >= 1e-3);
    }
  }

  {  // Fixed-axis family: zeros at pi and 2 pi.
    const auto profile =
        scan_penalty_ray(target, target.canonical_direction(1), 7.0, 1401);
    for (double zero : {kPi, 2.0 * kPi}) {
      double window_min = 1.0;
      for (const auto& [r, p] : profile) {
        if (std::abs(r - zero) <= 0.01) window_min = std::min(window_min, p);
      }
      CHECK(window_min <= 1e-4);
    }
  }
}

TEST_CASE("scan_penalty_ray validates its arguments") {
  const TargetGate target = hadamard_target();
  const ComplexMatrix axis = target.canonical_direction(1);
  CHECK_THROWS_AS(scan_penalty_ray(target, scaled_direction(axis, 0.9), 7.0, 100),
                  InvalidDirectionError);
  CHECK_THROWS_AS(scan_penalty_ray(target, axis, 0.0, 100), DimensionError);
  CHECK_THROWS_AS(scan_penalty_ray(target, axis, -1.0, 100), DimensionError);
  CHECK_THROWS_AS(scan_penalty_ray(target, axis, 7.0, 1), DimensionError);
  CHECK_THROWS_AS(scan_penalty_ray(target, ComplexMatrix(3, 1), 7.0, 100),
                  DimensionError);
}

TEST_CASE("classify_solution recognises exact members") {
  const TargetGate target = hadamard_target();
  const ComplexMatrix axis = target.canonical_direction(2);

  for (int n : {1, 2}) {
    const ControlMatrix member = build_solution(target, 2, axis, n, 0.4);
    const auto match = classify_solution(target, member.w());
    REQUIRE(match.has_value());
    CHECK(match->mu == 2);
    CHECK(match->winding == n);
    CHECK(match->norm_error <= 1e-12);
    CHECK(match->direction_residual <= 1e-12);
  }

  // Radius near but not at a member: inside the tolerance it classifies,
  // outside it does not.
  CHECK(classify_solution(target,
                          scaled_direction(axis, 2.7206990463513265 + 3e-7))
            .has_value());
  CHECK_FALSE(classify_solution(target,
                                scaled_direction(axis, 2.7206990463513265 + 3e-6))
                  .has_value());

  // Directions outside every eigenspace never classify.
  const ComplexMatrix skew =
      ComplexMatrix::column_vector({1.0, 0.0});
  CHECK_FALSE(classify_solution(target, scaled_direction(skew, kPi))
                  .has_value());

  // The zero column is the constant curve, not a loop.
  CHECK_FALSE(classify_solution(target, ComplexMatrix(2, 1)).has_value());
  CHECK_THROWS_AS(classify_solution(target, ComplexMatrix(3, 1)),
                  DimensionError);
}

TEST_CASE("minimize_penalty descends to a classified loop") {
  const TargetGate target = hadamard_target();
  const ComplexMatrix start = scaled_direction(target.canonical_direction(2), 1.2);

  const SearchResult result = minimize_penalty(target, start);
  CHECK(result.converged);
  CHECK(result.objective <= 1e-14);
  REQUIRE(result.classified.has_value());
  CHECK(result.classified->norm_error <= 1e-6);
  CHECK(result.classified->direction_residual <= 1e-6);
  CHECK(result.classified->winding >= 1);
  const double omega =
      target.cluster_phases[result.classified->mu - 1];
  CHECK(std::abs(frobenius_norm(result.w) -
                 family_norm(omega, result.classified->winding)) <= 1e-6);

  // The search is deterministic.
  const SearchResult again = minimize_penalty(target, start);
  CHECK(frobenius_distance(again.w, result.w) == 0.0);
  CHECK(again.evaluations == result.evaluations);
}

TEST_CASE("minimize_penalty rejects starts at the constant curve") {
  const TargetGate target = hadamard_target();
  CHECK_THROWS_AS(
      minimize_penalty(target,
                       scaled_direction(target.canonical_direction(1), 0.05)),
      DegenerateStartError);
  CHECK_THROWS_AS(minimize_penalty(target, ComplexMatrix(2, 1)),
                  DegenerateStartError);
  CHECK_THROWS_AS(minimize_penalty(target, ComplexMatrix(3, 1)),
                  DimensionError);
}

TEST_CASE("minimize_penalty respects the evaluation budget") {
  const TargetGate target = hadamard_target();
  SearchSettings settings;
  settings.max_evaluations = 3;
  const SearchResult result = minimize_penalty(
      target, scaled_direction(target.canonical_direction(2), 1.2), settings);
  CHECK_FALSE(result.converged);
  CHECK_FALSE(result.classified.has_value());
  // The budget is checked before every probe, so it is hit exactly.
  CHECK(result.evaluations == 3);
}
