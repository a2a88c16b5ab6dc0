#include "holoq/search.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "holoq/errors.hpp"
#include "holoq/manifold.hpp"
#include "holoq/tolerances.hpp"

namespace holoq {

namespace {

ComplexMatrix column_from_params(const std::vector<double>& params,
                                 std::size_t k) {
  ComplexMatrix w(k, 1);
  for (std::size_t i = 0; i < k; ++i) {
    w(i, 0) = Complex(params[2 * i], params[2 * i + 1]);
  }
  return w;
}

double column_radius(const std::vector<double>& params) {
  double sum = 0.0;
  for (double v : params) sum += v * v;
  return std::sqrt(sum);
}

}  // namespace

double penalty_objective(const TargetGate& target, const ComplexMatrix& w) {
  if (w.rows() != target.k || w.cols() != 1) {
    throw DimensionError("penalty_objective: coupling must be a k x 1 column");
  }
  const ControlMatrix x = ControlMatrix::from_blocks(
      target.log_generator, w, ComplexMatrix(1, 1));
  return penalty(x);
}

SearchResult minimize_penalty(const TargetGate& target,
                              const ComplexMatrix& initial_w,
                              const SearchSettings& settings) {
  if (initial_w.rows() != target.k || initial_w.cols() != 1) {
    throw DimensionError("minimize_penalty: start must be a k x 1 column");
  }
  if (frobenius_norm(initial_w) < settings.barrier_radius) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", frobenius_norm(initial_w));
    throw DegenerateStartError(
        std::string("minimize_penalty: start radius ") + buf +
        " lies inside the excluded ball around the constant curve");
  }

  const std::size_t dims = 2 * target.k;
  std::vector<double> params(dims);
  for (std::size_t i = 0; i < target.k; ++i) {
    params[2 * i] = initial_w(i, 0).real();
    params[2 * i + 1] = initial_w(i, 0).imag();
  }

  SearchResult result;
  const auto evaluate = [&](const std::vector<double>& p) {
    ++result.evaluations;
    if (column_radius(p) < settings.barrier_radius) {
      return std::numeric_limits<double>::infinity();
    }
    return penalty_objective(target, column_from_params(p, target.k));
  };
  const auto budget_left = [&]() {
    return result.evaluations < settings.max_evaluations;
  };

  // Probe directions are re-drawn from a fixed seed, so repeated searches
  // from the same start are identical.
  std::mt19937_64 probe_rng(0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::uniform_real_distribution<double> kick_scale(0.5, 1.5);

  std::vector<double> best_params = params;
  double best = evaluate(params);
  double current = best;

  // The penalty is multimodal: compass descent alone can settle on a strictly
  // positive local minimum.  The worst offender is the basin of the excluded
  // origin (the constant curve), whose floor is the barrier sphere itself.
  // Wrap the compass in monotonic basin hopping: each round runs it until the
  // step bottoms out, keeps the best point seen, and restarts from that point
  // with a random kick.  Failed hops double the kick length (up to a cap), so
  // the search eventually jumps clear across whatever basin trapped it; a hop
  // that improves the best value resets the length.  The loop only ends on
  // convergence or budget exhaustion.
  double kick_growth = 1.0;
  constexpr double kKickGrowthCap = 64.0;
  while (best > settings.objective_tolerance && budget_left()) {
    double step = settings.initial_step;
    while (current > settings.objective_tolerance &&
           step >= settings.min_step && budget_left()) {
      bool improved = false;
      // Axis probes first: +/- step along each real coordinate.
      for (std::size_t d = 0; d < dims && !improved && budget_left(); ++d) {
        for (double sign : {+1.0, -1.0}) {
          if (!budget_left()) break;
          std::vector<double> probe = params;
          probe[d] += sign * step;
          const double value = evaluate(probe);
          if (value < current) {
            params = std::move(probe);
            current = value;
            improved = true;
            break;
          }
        }
      }
      // Axis-aligned probes stall inside diagonal valleys; before shrinking
      // the step, try a batch of random directions of the same length.
      for (std::size_t attempt = 0;
           attempt < 2 * dims && !improved && budget_left(); ++attempt) {
        std::vector<double> direction(dims);
        double norm = 0.0;
        for (double& v : direction) {
          v = normal(probe_rng);
          norm += v * v;
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        std::vector<double> probe = params;
        for (std::size_t d = 0; d < dims; ++d) {
          probe[d] += step * direction[d] / norm;
        }
        const double value = evaluate(probe);
        if (value < current) {
          params = std::move(probe);
          current = value;
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
    // A hop only resets the kick length when it cut the objective by a real
    // margin; marginal improvements (e.g. crawling along the barrier sphere)
    // keep growing the kick so the search still escapes.
    const bool substantial = current < 0.9 * best;
    if (current < best) {
      best = current;
      best_params = params;
    }
    kick_growth =
        substantial ? 1.0 : std::min(2.0 * kick_growth, kKickGrowthCap);
    if (best <= settings.objective_tolerance || !budget_left()) break;
    // Kick the best point along a random direction and descend again.  A
    // kick that lands inside the barrier just evaluates as infinite and the
    // next compass round walks straight back out.
    std::vector<double> direction(dims);
    double norm = 0.0;
    for (double& v : direction) {
      v = normal(probe_rng);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double kick = kick_scale(probe_rng) * settings.initial_step * kick_growth;
    params = best_params;
    for (std::size_t d = 0; d < dims; ++d) {
      params[d] += kick * direction[d] / norm;
    }
    current = evaluate(params);
  }

  result.w = column_from_params(best_params, target.k);
  result.objective = best;
  result.converged = best <= settings.objective_tolerance;
  if (result.converged) result.classified = classify_solution(target, result.w);
  return result;
}

std::optional<FamilyMatch> classify_solution(const TargetGate& target,
                                             const ComplexMatrix& w) {
  if (w.rows() != target.k || w.cols() != 1) {
    throw DimensionError("classify_solution: coupling must be a k x 1 column");
  }
  const double radius = frobenius_norm(w);
  if (radius <= 0.0) return std::nullopt;
  ComplexMatrix direction = w;
  for (std::size_t i = 0; i < target.k; ++i) direction(i, 0) /= radius;

  std::optional<FamilyMatch> best;
  for (std::size_t mu = 1; mu <= target.family_count(); ++mu) {
    const ComplexMatrix projected = target.cluster_projector(mu) * direction;
    const double residual = frobenius_distance(projected, direction);
    if (residual > tol::kClassifyDirection) continue;
    const double omega = target.cluster_phases[mu - 1];
    for (int n = 1;; ++n) {
      const double a = family_norm(omega, n);
      if (a > radius + 1.0) break;
      const double norm_error = std::abs(radius - a);
      if (norm_error <= tol::kClassifyNorm) {
        if (!best || norm_error < best->norm_error) {
          best = FamilyMatch{mu, n, norm_error, residual};
        }
        break;
      }
    }
  }
  return best;
}

std::vector<std::pair<double, double>> scan_penalty_ray(
    const TargetGate& target, const ComplexMatrix& direction, double r_max,
    std::size_t samples) {
  if (direction.rows() != target.k || direction.cols() != 1) {
    throw DimensionError("scan_penalty_ray: direction must be a k x 1 column");
  }
  if (std::abs(frobenius_norm(direction) - 1.0) > tol::kDirectionResidual) {
    throw InvalidDirectionError("scan_penalty_ray: direction must be a unit column");
  }
  if (!(r_max > 0.0)) {
    throw DimensionError("scan_penalty_ray: r_max must be positive");
  }
  if (samples < 2) {
    throw DimensionError("scan_penalty_ray: need at least two samples");
  }

  std::vector<std::pair<double, double>> profile;
  profile.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = r_max * double(i) / double(samples - 1);
    ComplexMatrix w(target.k, 1);
    for (std::size_t j = 0; j < target.k; ++j) w(j, 0) = r * direction(j, 0);
    profile.emplace_back(r, penalty_objective(target, w));
  }
  return profile;
}

}  // namespace holoq
