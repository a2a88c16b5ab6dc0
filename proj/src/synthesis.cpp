#include "holoq/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "holoq/errors.hpp"
#include "holoq/holonomy.hpp"
#include "holoq/linalg.hpp"
#include "holoq/tolerances.hpp"

namespace holoq {

namespace {

constexpr double kPi = std::numbers::pi;

void require_family_index(const TargetGate& target, std::size_t mu, const char* who) {
  if (mu < 1 || mu > target.family_count()) {
    throw InvalidDirectionError(std::string(who) + ": family index " +
                                std::to_string(mu) + " out of range 1..," +
                                std::to_string(target.family_count()));
  }
}

}  // namespace

ComplexMatrix TargetGate::cluster_basis(std::size_t mu) const {
  require_family_index(*this, mu, "cluster_basis");
  const auto& indices = clusters[mu - 1];
  ComplexMatrix basis(k, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      basis(i, j) = eigenvectors(i, indices[j]);
    }
  }
  return basis;
}

ComplexMatrix TargetGate::canonical_direction(std::size_t mu) const {
  require_family_index(*this, mu, "canonical_direction");
  return cluster_basis(mu).block(0, 0, k, 1);
}

ComplexMatrix TargetGate::cluster_projector(std::size_t mu) const {
  const ComplexMatrix basis = cluster_basis(mu);
  return basis * basis.adjoint();
}

TargetGate analyze_gate(const ComplexMatrix& u) {
  UnitarySpectrum spec = unitary_eig(u);  // validates unitarity
  const std::size_t k = u.rows();

  TargetGate target;
  target.k = k;
  target.unitary = u;
  target.phases = spec.phases;
  target.eigenvectors = std::move(spec.eigenvectors);

  // Group eigenphases into degeneracy clusters (chained gaps <= 1e-8).
  std::vector<std::vector<std::size_t>> runs;
  std::size_t start = 0;
  while (start < k) {
    std::size_t stop = start + 1;
    while (stop < k &&
           target.phases[stop] - target.phases[stop - 1] <= tol::kPhaseCluster) {
      ++stop;
    }
    std::vector<std::size_t> run(stop - start);
    std::iota(run.begin(), run.end(), start);
    runs.push_back(std::move(run));
    start = stop;
  }

  // Re-orthonormalise inside each cluster so degenerate columns form a
  // clean basis regardless of eigensolver roundoff.
  for (const auto& run : runs) {
    for (std::size_t a = 0; a < run.size(); ++a) {
      const std::size_t col = run[a];
      for (std::size_t b = 0; b < a; ++b) {
        const std::size_t prev = run[b];
        Complex overlap(0.0, 0.0);
        for (std::size_t i = 0; i < k; ++i) {
          overlap += std::conj(target.eigenvectors(i, prev)) *
                     target.eigenvectors(i, col);
        }
        for (std::size_t i = 0; i < k; ++i) {
          target.eigenvectors(i, col) -= overlap * target.eigenvectors(i, prev);
        }
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        norm += std::norm(target.eigenvectors(i, col));
      }
      norm = std::sqrt(norm);
      for (std::size_t i = 0; i < k; ++i) target.eigenvectors(i, col) /= norm;
    }
  }

  // Family order: ascending |omega|, ties by ascending omega. This puts the
  // trivial cluster (omega = 0) first and the branch-cut cluster last.
  std::vector<double> reps(runs.size());
  for (std::size_t c = 0; c < runs.size(); ++c) {
    double sum = 0.0;
    for (std::size_t idx : runs[c]) sum += target.phases[idx];
    reps[c] = sum / double(runs[c].size());
  }
  std::vector<std::size_t> order(runs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double fa = std::abs(reps[a]), fb = std::abs(reps[b]);
    if (fa != fb) return fa < fb;
    return reps[a] < reps[b];
  });
  for (std::size_t c : order) {
    target.clusters.push_back(runs[c]);
    target.cluster_phases.push_back(reps[c]);
  }

  // Principal logarithm from the per-column phases.
  target.log_generator = ComplexMatrix(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    ComplexMatrix col = target.eigenvectors.block(0, j, k, 1);
    target.log_generator += Complex(0.0, target.phases[j]) * outer_product(col);
  }
  target.log_generator =
      0.5 * (target.log_generator - target.log_generator.adjoint());
  return target;
}

double family_norm(double omega, int winding) {
  if (winding == 0) {
    throw ZeroWindingError("family_norm: winding n = 0 names the constant curve");
  }
  const double radicand = (2.0 * kPi * winding + omega) * (2.0 * kPi * winding - omega);
  return 0.5 * std::sqrt(radicand);
}

ControlMatrix build_solution(const TargetGate& target, std::size_t mu,
                             const ComplexMatrix& direction, int winding,
                             double theta) {
  require_family_index(target, mu, "build_solution");
  if (winding == 0) {
    throw ZeroWindingError("build_solution: winding n = 0 names the constant curve");
  }
  if (direction.rows() != target.k || direction.cols() != 1) {
    throw InvalidDirectionError("build_solution: direction must be a k x 1 column");
  }
  const double norm = frobenius_norm(direction);
  if (std::abs(norm - 1.0) > tol::kDirectionResidual) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", norm);
    throw InvalidDirectionError(std::string("build_solution: |d| = ") + buf +
                                " is not 1");
  }
  const ComplexMatrix projected = target.cluster_projector(mu) * direction;
  const double residual = frobenius_distance(projected, direction);
  if (residual > tol::kDirectionResidual) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", residual);
    throw InvalidDirectionError(
        std::string("build_solution: direction leaves the family eigenspace by ") +
        buf);
  }

  const double amplitude = family_norm(target.cluster_phases[mu - 1], winding);
  const Complex phase = std::polar(1.0, theta);
  ComplexMatrix w(target.k, 1);
  for (std::size_t i = 0; i < target.k; ++i) {
    w(i, 0) = amplitude * phase * direction(i, 0);
  }
  ControlMatrix x = ControlMatrix::from_blocks(target.log_generator, std::move(w),
                                               ComplexMatrix(1, 1));
  x.family_mu = int(mu);
  x.winding = winding;

  // Construction guarantees: the loop closes exactly and carries the gate.
  const double p = penalty(x);
  if (p > tol::kConstructionPenalty) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", p);
    throw Error(std::string("build_solution: constructed loop fails to close, "
                            "penalty = ") +
                buf);
  }
  const double gate_error =
      frobenius_distance(holonomy_exact(x).unitary, target.unitary);
  if (gate_error > tol::kHolonomyMatch) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", gate_error);
    throw Error(std::string("build_solution: holonomy misses the target by ") + buf);
  }
  return x;
}

double SolutionFamily::norm_of(int winding) const {
  const auto it = members.find(winding);
  if (it == members.end()) {
    throw EmptyInputError("SolutionFamily: no member with winding " +
                          std::to_string(winding));
  }
  return loop_speed(it->second);
}

std::vector<SolutionFamily> enumerate_families(const TargetGate& target, int n_max) {
  if (n_max < 1) {
    throw DimensionError("enumerate_families: n_max must be at least 1");
  }
  std::vector<SolutionFamily> families;
  families.reserve(target.family_count());
  for (std::size_t mu = 1; mu <= target.family_count(); ++mu) {
    SolutionFamily family;
    family.mu = mu;
    family.omega = target.cluster_phases[mu - 1];
    family.direction = target.canonical_direction(mu);
    for (int n = -n_max; n <= n_max; ++n) {
      if (n == 0) continue;
      family.members.emplace(n, build_solution(target, mu, family.direction, n));
    }
    families.push_back(std::move(family));
  }
  return families;
}

ControlMatrix optimal_solution(const std::vector<SolutionFamily>& families) {
  constexpr double kNormTie = 1e-9;
  const ControlMatrix* best = nullptr;
  double best_norm = 0.0, best_abs_omega = 0.0;
  int best_n = 0;
  for (const SolutionFamily& family : families) {
    for (const auto& [n, member] : family.members) {
      const double norm = loop_speed(member);
      bool take = false;
      if (best == nullptr || norm < best_norm - kNormTie) {
        take = true;
      } else if (norm <= best_norm + kNormTie) {
        // Equal length: prefer the larger-|omega| family, then positive n.
        const double abs_omega = std::abs(family.omega);
        if (abs_omega > best_abs_omega + kNormTie) {
          take = true;
        } else if (std::abs(abs_omega - best_abs_omega) <= kNormTie && n > best_n) {
          take = true;
        }
      }
      if (take) {
        best = &member;
        best_norm = norm;
        best_abs_omega = std::abs(family.omega);
        best_n = n;
      }
    }
  }
  if (best == nullptr) {
    throw EmptyInputError("optimal_solution: no members to select from");
  }
  return *best;
}

}  // namespace holoq
