#include <cmath>
#include <numbers>

#include "doctest.h"

#include "holoq/errors.hpp"
#include "holoq/gates.hpp"
#include "holoq/holonomy.hpp"
#include "holoq/linalg.hpp"
#include "holoq/manifold.hpp"
#include "holoq/matrix.hpp"

using namespace holoq;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Complex quarter_power(std::size_t m) {  // i^m
  switch (m % 4) {
    case 0: return Complex(1.0, 0.0);
    case 1: return Complex(0.0, 1.0);
    case 2: return Complex(-1.0, 0.0);
    default: return Complex(0.0, -1.0);
  }
}

ControlMatrix build_default(const ReferenceSolution& sol, int n = 1) {
  SolutionParams params;
  params.winding = n;
  return sol.build(params);
}

}  // namespace

TEST_CASE("catalog lists the built-in gates") {
  const auto& gates = catalog();
  REQUIRE(gates.size() == 5);
  CHECK(gates[0].name == "hadamard");
  CHECK(gates[1].name == "cnot");
  CHECK(gates[2].name == "dft2");
  CHECK(gates[3].name == "identity2");
  CHECK(gates[4].name == "pauliz");
  CHECK(gates[0].solutions.size() == 2);
  CHECK(gates[1].solutions.size() == 2);
  CHECK(gates[2].solutions.size() == 3);
  CHECK(gates[3].solutions.empty());
  CHECK(gates[4].solutions.empty());
  for (const GateFixture& gate : gates) {
    CHECK(unitarity_defect(gate.unitary) <= 1e-15);
  }
  CHECK(find_gate("dft2") == &gates[2]);
  CHECK(find_gate("DFT2") == nullptr);
  CHECK(find_gate("") == nullptr);
}

TEST_CASE("order-4 transform matches its defining table") {
  const ComplexMatrix u = find_gate("dft2")->unitary;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(std::abs(u(j, k) - 0.5 * quarter_power(j * k)) <= 1e-16);
    }
  }
  CHECK(std::abs(u.trace() - Complex(1.0, 1.0)) <= 1e-15);

  // Squaring it gives the index-reversal permutation, of trace 2.
  const ComplexMatrix parity = ComplexMatrix::from_rows(
      {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}});
  CHECK(frobenius_distance(u * u, parity) <= 1e-15);
  CHECK(std::abs((u * u).trace() - Complex(2.0, 0.0)) <= 1e-15);
}

TEST_CASE("order-4 transform generator is the quarter-integer projector sum") {
  const ControlMatrix x = build_default(find_gate("dft2")->solutions[0]);
  CHECK(anti_hermiticity_defect(x.omega()) == 0.0);
  CHECK(frobenius_distance(expm_antihermitian(-x.omega()),
                           find_gate("dft2")->unitary) <= 1e-12);

  const double r = 1.0 / std::numbers::sqrt2;
  const ComplexMatrix v_half =
      ComplexMatrix::column_vector({-0.5, 0.5, 0.5, 0.5});
  const ComplexMatrix v_quarter = ComplexMatrix::column_vector({0, -r, 0, r});
  const ComplexMatrix expected = (Complex(0.0, -kPi) * outer_product(v_half)) +
                                 (Complex(0.0, -kPi / 2.0) * outer_product(v_quarter));
  CHECK(frobenius_distance(x.omega(), expected) <= 1e-15);
}

TEST_CASE("reflection gate loop generators have the pinned spectra") {
  const GateFixture* hadamard = find_gate("hadamard");
  REQUIRE(hadamard != nullptr);

  {  // Fixed-axis family: -iX has eigenvalues {-pi, pi, pi}.
    const ControlMatrix x = build_default(hadamard->solutions[0]);
    const auto eig = hermitian_eig(Complex(0.0, -1.0) * x.assemble());
    REQUIRE(eig.eigenvalues.size() == 3);
    CHECK(std::abs(eig.eigenvalues[0] + kPi) <= 1e-12);
    CHECK(std::abs(eig.eigenvalues[1] - kPi) <= 1e-12);
    CHECK(std::abs(eig.eigenvalues[2] - kPi) <= 1e-12);
  }

  {  // Reflected-axis family: -iX has eigenvalues {-pi/2, 0, 3pi/2}.
    const ControlMatrix x = build_default(hadamard->solutions[1]);
    const auto eig = hermitian_eig(Complex(0.0, -1.0) * x.assemble());
    REQUIRE(eig.eigenvalues.size() == 3);
    CHECK(std::abs(eig.eigenvalues[0] + kPi / 2.0) <= 1e-12);
    CHECK(std::abs(eig.eigenvalues[1]) <= 1e-12);
    CHECK(std::abs(eig.eigenvalues[2] - 1.5 * kPi) <= 1e-12);

    // Both closing eigenphases land on -i, so e^X acts as the identity on
    // the fixed axis and as -i elsewhere.
    const ComplexMatrix e = expm_antihermitian(x.assemble());
    const ComplexMatrix plus = ComplexMatrix::column_vector(
        {std::cos(kPi / 8.0), std::sin(kPi / 8.0)});
    const ComplexMatrix minus = ComplexMatrix::column_vector(
        {-std::sin(kPi / 8.0), std::cos(kPi / 8.0)});
    const ComplexMatrix top_left =
        outer_product(plus) + (-kI) * outer_product(minus);
    CHECK(frobenius_distance(e.block(0, 0, 2, 2), top_left) <= 1e-13);
    CHECK(std::abs(e(2, 2) - (-kI)) <= 1e-13);
    CHECK(frobenius_norm(e.block(0, 2, 2, 1)) <= 1e-13);
    CHECK(frobenius_norm(e.block(2, 0, 1, 2)) <= 1e-13);
  }
}

TEST_CASE("reference loop lengths at n = 1") {
  const double root3 = std::sqrt(3.0);
  const double root15 = std::sqrt(15.0);
  CHECK(find_gate("hadamard")->solutions[0].expected_norm(1) ==
        doctest::Approx(kPi).epsilon(1e-15));
  CHECK(find_gate("hadamard")->solutions[1].expected_norm(1) ==
        doctest::Approx(kPi * root3 / 2.0).epsilon(1e-15));
  CHECK(find_gate("hadamard")->solutions[1].expected_norm(1) ==
        doctest::Approx(2.7206990463513265).epsilon(1e-15));
  CHECK(find_gate("cnot")->solutions[1].expected_norm(1) ==
        doctest::Approx(kPi * root3 / 2.0).epsilon(1e-15));
  CHECK(find_gate("dft2")->solutions[1].expected_norm(1) ==
        doctest::Approx(kPi * root15 / 4.0).epsilon(1e-15));
  CHECK(find_gate("dft2")->solutions[2].expected_norm(1) ==
        doctest::Approx(kPi * root3 / 2.0).epsilon(1e-15));
}

TEST_CASE("every catalog fixture passes its crosscheck") {
  for (const GateFixture& gate : catalog()) {
    const CrosscheckReport report = fixture_crosscheck(gate);
    INFO(gate.name, ": ",
         report.ok() ? std::string("ok") : report.failures.front());
    CHECK(report.checks_run > 0);
    CHECK(report.ok());
  }
  CHECK_NOTHROW(ensure_crosscheck(*find_gate("cnot")));
}

TEST_CASE("reference builders validate their parameters") {
  const ReferenceSolution& cnot_deg = find_gate("cnot")->solutions[0];
  const ReferenceSolution& cnot_simple = find_gate("cnot")->solutions[1];
  const ReferenceSolution& dft2_deg = find_gate("dft2")->solutions[0];

  SolutionParams params;
  params.winding = 0;
  CHECK_THROWS_AS(cnot_deg.build(params), ZeroWindingError);

  params.winding = 1;
  params.coefficients = {1.0, 0.0};  // needs three entries
  CHECK_THROWS_AS(cnot_deg.build(params), InvalidDirectionError);

  params.coefficients = {1.0, 1.0, 1.0};  // square sum 3
  CHECK_THROWS_AS(cnot_deg.build(params), InvalidDirectionError);

  params.coefficients = {0.6, 0.8};
  params.phases = {0.1};  // one phase per coefficient
  CHECK_THROWS_AS(dft2_deg.build(params), InvalidDirectionError);

  params.phases.clear();
  CHECK_THROWS_AS(cnot_simple.build(params), InvalidDirectionError);

  // A valid degenerate-family request carries the chosen mixture.
  params.coefficients = {0.6, 0.8};
  params.phases = {0.0, 0.25};
  const ControlMatrix x = dft2_deg.build(params);
  CHECK(loop_speed(x) == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(penalty(x) <= 1e-15);
  CHECK(frobenius_distance(holonomy_exact(x).unitary,
                           find_gate("dft2")->unitary) <= 1e-10);
}

TEST_CASE("partial-loop penalty follows the member profile law") {
  // p(t) = (1 - omega^2 / (2 pi n)^2) sin^2(n pi t) for the family with
  // eigenphase omega at winding n.
  struct Case {
    const char* gate;
    std::size_t solution;
    double omega;
  };
  const Case cases[] = {
      {"hadamard", 0, 0.0},
      {"hadamard", 1, kPi},
      {"dft2", 1, kPi / 2.0},
      {"dft2", 2, kPi},
  };
  for (const Case& c : cases) {
    for (int n : {1, 2}) {
      const ControlMatrix x =
          build_default(find_gate(c.gate)->solutions[c.solution], n);
      const double prefactor =
          1.0 - (c.omega * c.omega) / (4.0 * kPi * kPi * n * n);
      for (const auto& [t, p] : winding_profile(x, 101)) {
        const double s = std::sin(n * kPi * t);
        CHECK(std::abs(p - prefactor * s * s) <= 1e-12);
      }
    }
  }
}
