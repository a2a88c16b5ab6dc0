#include "holoq/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "holoq/errors.hpp"
#include "holoq/holonomy.hpp"
#include "holoq/linalg.hpp"
#include "holoq/synthesis.hpp"
#include "holoq/tolerances.hpp"

namespace holoq {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kIPi(0.0, kPi);

// Agreement tolerances for crosschecks between the hand-coded matrices and
// the synthesis path. Transcriptions are exact; only roundoff separates them.
constexpr double kMatchTol = 1e-10;
constexpr double kExactZero = 1e-15;

std::vector<double> checked_coefficients(const SolutionParams& p,
                                         std::size_t count,
                                         const std::string& label) {
  std::vector<double> coeffs = p.coefficients;
  if (coeffs.empty()) {
    coeffs.assign(count, 0.0);
    coeffs[0] = 1.0;
  }
  if (coeffs.size() != count) {
    throw InvalidDirectionError(label + ": expected " + std::to_string(count) +
                                " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  double sum = 0.0;
  for (double c : coeffs) sum += c * c;
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidDirectionError(label +
                                ": coefficients must have unit square sum");
  }
  return coeffs;
}

std::vector<double> checked_phases(const SolutionParams& p, std::size_t count,
                                   const std::string& label) {
  std::vector<double> phases = p.phases;
  if (phases.empty()) phases.assign(count, 0.0);
  if (phases.size() != count) {
    throw InvalidDirectionError(label + ": expected " + std::to_string(count) +
                                " phases, got " + std::to_string(phases.size()));
  }
  return phases;
}

void require_winding(const SolutionParams& p, const std::string& label) {
  if (p.winding == 0) {
    throw ZeroWindingError(label + ": winding n = 0 names the constant curve");
  }
}

void require_simple(const SolutionParams& p, const std::string& label) {
  require_winding(p, label);
  if (!p.coefficients.empty() || !p.phases.empty()) {
    throw InvalidDirectionError(label + ": family has no coefficient freedom");
  }
}

ControlMatrix make_member(ComplexMatrix omega, ComplexMatrix w, int family,
                          int winding) {
  ControlMatrix x = ControlMatrix::from_blocks(std::move(omega), std::move(w),
                                               ComplexMatrix(1, 1));
  x.family_mu = family;
  x.winding = winding;
  return x;
}

ComplexMatrix scaled_column(const Complex& amp, const ComplexMatrix& dir) {
  ComplexMatrix w(dir.rows(), 1);
  for (std::size_t i = 0; i < dir.rows(); ++i) w(i, 0) = amp * dir(i, 0);
  return w;
}

// Loop-length coefficients of the non-degenerate families:
// half_odd(n) = sqrt(4n^2 - 1)/2 pairs with |omega| = pi,
// quarter_odd(n) = sqrt(16n^2 - 1)/4 pairs with |omega| = pi/2.
double half_odd(int n) { return 0.5 * std::sqrt(4.0 * n * n - 1.0); }
double quarter_odd(int n) { return 0.25 * std::sqrt(16.0 * n * n - 1.0); }

// ---------------------------------------------------------------- hadamard

ComplexMatrix hadamard_unitary() {
  const double r = 1.0 / std::numbers::sqrt2;
  return ComplexMatrix::from_rows({{r, r}, {r, -r}});
}

// i pi times the projector onto the reflection axis (the -1 eigenvector).
ComplexMatrix hadamard_generator() {
  const double c = std::cos(kPi / 8.0);
  const double s = std::sin(kPi / 8.0);
  ComplexMatrix g(2, 2);
  g(0, 0) = kIPi * (s * s);
  g(0, 1) = kIPi * (-s * c);
  g(1, 0) = kIPi * (-s * c);
  g(1, 1) = kIPi * (c * c);
  return g;
}

ComplexMatrix hadamard_axis_plus() {  // +1 eigenvector (cos pi/8, sin pi/8)
  ComplexMatrix d(2, 1);
  d(0, 0) = std::cos(kPi / 8.0);
  d(1, 0) = std::sin(kPi / 8.0);
  return d;
}

ComplexMatrix hadamard_axis_minus() {  // -1 eigenvector (-sin pi/8, cos pi/8)
  ComplexMatrix d(2, 1);
  d(0, 0) = -std::sin(kPi / 8.0);
  d(1, 0) = std::cos(kPi / 8.0);
  return d;
}

ReferenceSolution hadamard_s1() {
  ReferenceSolution s;
  s.label = "hadamard.1";
  s.family_mu = 1;
  s.coefficient_count = 0;
  s.build = [](const SolutionParams& p) {
    require_simple(p, "hadamard.1");
    const Complex amp = kIPi * double(p.winding) * std::polar(1.0, p.theta);
    return make_member(hadamard_generator(),
                       scaled_column(amp, hadamard_axis_plus()), 1, p.winding);
  };
  s.expected_norm = [](int n) { return kPi * std::abs(n); };
  s.direction = [](const SolutionParams&) { return hadamard_axis_plus(); };
  return s;
}

ReferenceSolution hadamard_s2() {
  ReferenceSolution s;
  s.label = "hadamard.2";
  s.family_mu = 2;
  s.coefficient_count = 0;
  s.build = [](const SolutionParams& p) {
    require_simple(p, "hadamard.2");
    const Complex amp = kIPi * half_odd(p.winding) * std::polar(1.0, p.theta);
    return make_member(hadamard_generator(),
                       scaled_column(amp, hadamard_axis_minus()), 2, p.winding);
  };
  s.expected_norm = [](int n) { return kPi * half_odd(n); };
  s.direction = [](const SolutionParams&) { return hadamard_axis_minus(); };
  return s;
}

// -------------------------------------------------------------------- cnot

ComplexMatrix cnot_unitary() {
  return ComplexMatrix::from_rows(
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

// i pi/2 on the swap block; realises the -1 eigenspace on the -pi branch.
ComplexMatrix cnot_generator() {
  const Complex h = 0.5 * kIPi;
  ComplexMatrix g(4, 4);
  g(2, 2) = -h;
  g(2, 3) = h;
  g(3, 2) = h;
  g(3, 3) = -h;
  return g;
}

// Unit combination (d1 e^{i phi1}, d2 e^{i phi2}, d3 e^{i phi3}/sqrt2,
// d3 e^{i phi3}/sqrt2) spanning the fixed (+1) eigenspace.
ComplexMatrix cnot_fixed_direction(const std::vector<double>& d,
                                   const std::vector<double>& ph) {
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexMatrix dir(4, 1);
  dir(0, 0) = d[0] * std::polar(1.0, ph[0]);
  dir(1, 0) = d[1] * std::polar(1.0, ph[1]);
  const Complex tail = d[2] * std::polar(1.0, ph[2]) * r;
  dir(2, 0) = tail;
  dir(3, 0) = tail;
  return dir;
}

ComplexMatrix cnot_swap_direction() {  // -1 eigenvector (0,0,-1,1)/sqrt2
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexMatrix d(4, 1);
  d(2, 0) = -r;
  d(3, 0) = r;
  return d;
}

ReferenceSolution cnot_s1() {
  ReferenceSolution s;
  s.label = "cnot.1";
  s.family_mu = 1;
  s.coefficient_count = 3;
  s.build = [](const SolutionParams& p) {
    require_winding(p, "cnot.1");
    const auto d = checked_coefficients(p, 3, "cnot.1");
    const auto ph = checked_phases(p, 3, "cnot.1");
    const Complex amp = kIPi * double(p.winding) * std::polar(1.0, p.theta);
    return make_member(cnot_generator(),
                       scaled_column(amp, cnot_fixed_direction(d, ph)), 1,
                       p.winding);
  };
  s.expected_norm = [](int n) { return kPi * std::abs(n); };
  s.direction = [](const SolutionParams& p) {
    return cnot_fixed_direction(checked_coefficients(p, 3, "cnot.1"),
                                checked_phases(p, 3, "cnot.1"));
  };
  return s;
}

ReferenceSolution cnot_s2() {
  ReferenceSolution s;
  s.label = "cnot.2";
  s.family_mu = 2;
  s.coefficient_count = 0;
  s.build = [](const SolutionParams& p) {
    require_simple(p, "cnot.2");
    const Complex amp = kIPi * half_odd(p.winding) * std::polar(1.0, p.theta);
    return make_member(cnot_generator(),
                       scaled_column(amp, cnot_swap_direction()), 2, p.winding);
  };
  s.expected_norm = [](int n) { return kPi * half_odd(n); };
  s.direction = [](const SolutionParams&) { return cnot_swap_direction(); };
  return s;
}

// -------------------------------------------------------------------- dft2

ComplexMatrix dft2_unitary() {
  const Complex i(0.0, 1.0);
  return 0.5 * ComplexMatrix::from_rows({{1, 1, 1, 1},
                                         {1, i, -1, -i},
                                         {1, -1, 1, -1},
                                         {1, -i, -1, i}});
}

// Quarter-integer real symmetric table times i pi; the -1 eigenspace sits
// on the -pi branch and the e^{i pi/2} eigenspace on -pi/2.
ComplexMatrix dft2_generator() {
  const double q[4][4] = {
      {-0.25, 0.25, 0.25, 0.25},
      {0.25, -0.5, -0.25, 0.0},
      {0.25, -0.25, -0.25, -0.25},
      {0.25, 0.0, -0.25, -0.5},
  };
  ComplexMatrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = kIPi * q[i][j];
  }
  return g;
}

// Unit combination f1 e^{i phi1} (1,1,-1,1)/2 + f2 e^{i phi2} (1,0,1,0)/sqrt2
// of the two orthonormal fixed (+1) eigenvectors.
ComplexMatrix dft2_fixed_direction(const std::vector<double>& f,
                                   const std::vector<double>& ph) {
  const double r = 1.0 / std::numbers::sqrt2;
  const Complex a = f[0] * std::polar(1.0, ph[0]);
  const Complex b = f[1] * std::polar(1.0, ph[1]);
  ComplexMatrix dir(4, 1);
  dir(0, 0) = 0.5 * a + r * b;
  dir(1, 0) = 0.5 * a;
  dir(2, 0) = -0.5 * a + r * b;
  dir(3, 0) = 0.5 * a;
  return dir;
}

ComplexMatrix dft2_quarter_direction() {  // e^{i pi/2} eigenvector (0,-1,0,1)/sqrt2
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexMatrix d(4, 1);
  d(1, 0) = -r;
  d(3, 0) = r;
  return d;
}

ComplexMatrix dft2_half_direction() {  // -1 eigenvector (-1,1,1,1)/2
  ComplexMatrix d(4, 1);
  d(0, 0) = -0.5;
  d(1, 0) = 0.5;
  d(2, 0) = 0.5;
  d(3, 0) = 0.5;
  return d;
}

ReferenceSolution dft2_s1() {
  ReferenceSolution s;
  s.label = "dft2.1";
  s.family_mu = 1;
  s.coefficient_count = 2;
  s.build = [](const SolutionParams& p) {
    require_winding(p, "dft2.1");
    const auto f = checked_coefficients(p, 2, "dft2.1");
    const auto ph = checked_phases(p, 2, "dft2.1");
    const Complex amp = kIPi * double(p.winding) * std::polar(1.0, p.theta);
    return make_member(dft2_generator(),
                       scaled_column(amp, dft2_fixed_direction(f, ph)), 1,
                       p.winding);
  };
  s.expected_norm = [](int n) { return kPi * std::abs(n); };
  s.direction = [](const SolutionParams& p) {
    return dft2_fixed_direction(checked_coefficients(p, 2, "dft2.1"),
                                checked_phases(p, 2, "dft2.1"));
  };
  return s;
}

ReferenceSolution dft2_s2() {
  ReferenceSolution s;
  s.label = "dft2.2";
  s.family_mu = 2;
  s.coefficient_count = 0;
  s.build = [](const SolutionParams& p) {
    require_simple(p, "dft2.2");
    const Complex amp = kIPi * quarter_odd(p.winding) * std::polar(1.0, p.theta);
    return make_member(dft2_generator(),
                       scaled_column(amp, dft2_quarter_direction()), 2,
                       p.winding);
  };
  s.expected_norm = [](int n) { return kPi * quarter_odd(n); };
  s.direction = [](const SolutionParams&) { return dft2_quarter_direction(); };
  return s;
}

ReferenceSolution dft2_s3() {
  ReferenceSolution s;
  s.label = "dft2.3";
  s.family_mu = 3;
  s.coefficient_count = 0;
  s.build = [](const SolutionParams& p) {
    require_simple(p, "dft2.3");
    const Complex amp = kIPi * half_odd(p.winding) * std::polar(1.0, p.theta);
    return make_member(dft2_generator(),
                       scaled_column(amp, dft2_half_direction()), 3, p.winding);
  };
  s.expected_norm = [](int n) { return kPi * half_odd(n); };
  s.direction = [](const SolutionParams&) { return dft2_half_direction(); };
  return s;
}

std::vector<GateFixture> build_catalog() {
  std::vector<GateFixture> gates;

  GateFixture hadamard;
  hadamard.name = "hadamard";
  hadamard.unitary = hadamard_unitary();
  hadamard.solutions = {hadamard_s1(), hadamard_s2()};
  gates.push_back(std::move(hadamard));

  GateFixture cnot;
  cnot.name = "cnot";
  cnot.unitary = cnot_unitary();
  cnot.solutions = {cnot_s1(), cnot_s2()};
  gates.push_back(std::move(cnot));

  GateFixture dft2;
  dft2.name = "dft2";
  dft2.unitary = dft2_unitary();
  dft2.solutions = {dft2_s1(), dft2_s2(), dft2_s3()};
  gates.push_back(std::move(dft2));

  GateFixture identity2;
  identity2.name = "identity2";
  identity2.unitary = ComplexMatrix::identity(2);
  gates.push_back(std::move(identity2));

  GateFixture pauliz;
  pauliz.name = "pauliz";
  pauliz.unitary = ComplexMatrix::from_rows({{1, 0}, {0, -1}});
  gates.push_back(std::move(pauliz));

  return gates;
}

}  // namespace

const std::vector<GateFixture>& catalog() {
  static const std::vector<GateFixture> gates = build_catalog();
  return gates;
}

const GateFixture* find_gate(const std::string& name) {
  for (const GateFixture& gate : catalog()) {
    if (gate.name == name) return &gate;
  }
  return nullptr;
}

CrosscheckReport fixture_crosscheck(const GateFixture& fixture) {
  CrosscheckReport report;
  const auto note = [&](bool ok, const std::string& what) {
    ++report.checks_run;
    if (!ok) report.failures.push_back(fixture.name + ": " + what);
  };

  TargetGate target = analyze_gate(fixture.unitary);

  // Projector onto the branch-cut (omega = pi) eigenspace. Reference
  // generators are allowed to realise that subspace on the -pi branch; the
  // two differ by 2 pi i times this projector and exponentiate identically.
  ComplexMatrix cut_projector(target.k, target.k);
  bool has_cut = false;
  for (std::size_t mu = 1; mu <= target.family_count(); ++mu) {
    if (std::abs(target.cluster_phases[mu - 1] - kPi) <= 1e-6) {
      cut_projector += target.cluster_projector(mu);
      has_cut = true;
    }
  }

  ComplexMatrix shared_generator;
  bool have_generator = false;

  for (const ReferenceSolution& sol : fixture.solutions) {
    for (int n : {1, 2}) {
      SolutionParams params;
      params.winding = n;
      const std::string tag = sol.label + " (n = " + std::to_string(n) + ")";
      try {
        const ControlMatrix x = sol.build(params);
        const ComplexMatrix full = x.assemble();
        note(anti_hermiticity_defect(full) <=
                 tol::kAntiHermitian * std::max(1.0, frobenius_norm(full)),
             tag + ": generator is not anti-Hermitian");
        note(frobenius_norm(x.z()) <= kExactZero,
             tag + ": residual block Z is not zero");
        note(penalty(x) <= kExactZero, tag + ": loop fails to close");
        note(frobenius_distance(holonomy_exact(x).unitary, fixture.unitary) <=
                 kMatchTol,
             tag + ": holonomy misses the gate");
        note(std::abs(loop_speed(x) - sol.expected_norm(n)) <= kMatchTol,
             tag + ": loop length violates the closed-form law");
        note(frobenius_distance(expm_antihermitian(-x.omega()),
                                fixture.unitary) <= kMatchTol,
             tag + ": generator block does not exponentiate to the gate");

        if (!have_generator) {
          shared_generator = x.omega();
          have_generator = true;
        } else {
          note(frobenius_distance(shared_generator, x.omega()) <= kMatchTol,
               tag + ": generator block differs between families");
        }

        // Same loop out of the synthesis path: identical direction, coupling
        // phase advanced by pi/2 (the hand-coded columns carry a factor i).
        const ControlMatrix built =
            build_solution(target, sol.family_mu, sol.direction(params), n,
                           params.theta + kPi / 2.0);
        note(frobenius_distance(built.w(), x.w()) <= kMatchTol,
             tag + ": coupling column disagrees with the synthesis path");
        const double direct = frobenius_distance(built.omega(), x.omega());
        double branched = direct;
        if (has_cut) {
          const ComplexMatrix corrected =
              built.omega() - Complex(0.0, 2.0 * kPi) * cut_projector;
          branched = frobenius_distance(corrected, x.omega());
        }
        note(std::min(direct, branched) <= kMatchTol,
             tag + ": generator block disagrees with the synthesis path");
      } catch (const Error& e) {
        ++report.checks_run;
        report.failures.push_back(fixture.name + ": " + tag + ": " + e.what());
      }
    }
  }

  // Synthesised members obey the loop-length law for every fixture,
  // including the ones without hand-coded solutions.
  try {
    for (const SolutionFamily& family : enumerate_families(target, 2)) {
      for (const auto& [n, member] : family.members) {
        note(std::abs(loop_speed(member) - family_norm(family.omega, n)) <=
                 kMatchTol,
             "family " + std::to_string(family.mu) + ", n = " +
                 std::to_string(n) +
                 ": member length violates the closed-form law");
      }
    }
  } catch (const Error& e) {
    ++report.checks_run;
    report.failures.push_back(fixture.name + ": enumerate: " + e.what());
  }

  return report;
}

void ensure_crosscheck(const GateFixture& fixture) {
  const CrosscheckReport report = fixture_crosscheck(fixture);
  if (!report.ok()) throw FixtureMismatchError(report.failures.front());
}

}  // namespace holoq
