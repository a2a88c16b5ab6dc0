#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "holoq/manifold.hpp"
#include "holoq/matrix.hpp"

namespace holoq {

// Free parameters of a reference solution. Families over a degenerate
// eigenspace take a real coefficient vector (unit sum of squares) with one
// phase per coefficient; single-direction families use the overall theta.
struct SolutionParams {
  int winding = 1;
  double theta = 0.0;
  std::vector<double> coefficients;  // empty -> family default
  std::vector<double> phases;        // empty -> all zeros
};

// One hand-coded closed-form solution family for a catalog gate. These are
// kept literal, independently of the synthesis path, so the two can be
// cross-checked against each other.
struct ReferenceSolution {
  std::string label;
  std::size_t family_mu = 0;         // matching 1-based synthesis family
  std::size_t coefficient_count = 0; // 0 for single-direction families
  std::function<ControlMatrix(const SolutionParams&)> build;
  std::function<double(int)> expected_norm;  // loop length law |W|(n)
  // The same free parameters expressed as a unit direction for build_solution.
  std::function<ComplexMatrix(const SolutionParams&)> direction;
};

struct GateFixture {
  std::string name;
  ComplexMatrix unitary;
  std::vector<ReferenceSolution> solutions;  // may be empty (synthesised only)
};

// Built-in gates: hadamard, cnot, dft2, identity2, pauliz.
const std::vector<GateFixture>& catalog();
const GateFixture* find_gate(const std::string& name);

struct CrosscheckReport {
  std::size_t checks_run = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Re-derives every reference solution at n in {1, 2} with default
// parameters, verifies anti-Hermiticity, Z = 0, closure, holonomy and the
// loop-length law, and matches the synthesis output against the hand-coded
// matrices up to the documented free parameters: an overall coupling phase
// offset of pi/2, and the logarithm branch (+pi vs -pi) of the generator
// block on the eigenvalue -1 subspace.
CrosscheckReport fixture_crosscheck(const GateFixture& fixture);

// Throws FixtureMismatchError carrying the first failing assertion.
void ensure_crosscheck(const GateFixture& fixture);

}  // namespace holoq
