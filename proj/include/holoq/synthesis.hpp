#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "holoq/manifold.hpp"
#include "holoq/matrix.hpp"

namespace holoq {

// A target unitary together with its spectral analysis in the e^{-i omega}
// convention. Families of exact control loops are indexed by the distinct
// eigenphase clusters, ordered by ascending |omega| (ties by ascending
// omega) and labelled 1-based by mu.
struct TargetGate {
  std::size_t k = 0;
  ComplexMatrix unitary;
  std::vector<double> phases;        // ascending, one per eigenvector column
  ComplexMatrix eigenvectors;        // orthonormal columns
  std::vector<std::vector<std::size_t>> clusters;  // column indices per family
  std::vector<double> cluster_phases;              // representative omega per family
  ComplexMatrix log_generator;       // principal Omega with e^{-Omega} = U

  std::size_t family_count() const { return clusters.size(); }
  // Orthonormal basis (k x m) of the eigenspace of family mu (1-based).
  ComplexMatrix cluster_basis(std::size_t mu) const;
  // First basis vector of the family eigenspace: the canonical direction.
  ComplexMatrix canonical_direction(std::size_t mu) const;
  // Orthogonal projector onto the family eigenspace.
  ComplexMatrix cluster_projector(std::size_t mu) const;
};

// Spectral analysis of a unitary gate, including degeneracy clustering
// (eigenphases within 1e-8 share a family) and the principal logarithm.
TargetGate analyze_gate(const ComplexMatrix& u);

// Coupling amplitude of the exact-closure construction:
//   a(omega, n) = (1/2) sqrt((2 pi n + omega)(2 pi n - omega)).
double family_norm(double omega, int winding);

// Build the exact loop generator for family mu (1-based), direction d (a
// unit vector in the family eigenspace), winding n != 0 and phase theta:
//   X = [ Omega            a e^{i theta} d ]
//       [ -a e^{-i theta} d†      0        ]
// The result is verified (closure penalty and holonomy) before returning.
ControlMatrix build_solution(const TargetGate& target, std::size_t mu,
                             const ComplexMatrix& direction, int winding,
                             double theta = 0.0);

// One family of exact solutions: the loops over a fixed eigenphase cluster.
struct SolutionFamily {
  std::size_t mu = 0;          // 1-based family label
  double omega = 0.0;          // representative eigenphase
  ComplexMatrix direction;     // canonical unit direction used for members
  std::map<int, ControlMatrix> members;  // winding n -> generator

  double norm_of(int winding) const;  // measured |W|_F of a member
};

// All families with members n in {±1, ..., ±n_max}, canonical directions,
// theta = 0. Every member is verified on construction.
std::vector<SolutionFamily> enumerate_families(const TargetGate& target,
                                               int n_max = 3);

// The member with minimal |W|_F. Ties are broken toward the larger
// |omega| cluster, then toward positive winding.
ControlMatrix optimal_solution(const std::vector<SolutionFamily>& families);

}  // namespace holoq
