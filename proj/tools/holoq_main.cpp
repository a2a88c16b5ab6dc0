#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "holoq/errors.hpp"
#include "holoq/gates.hpp"
#include "holoq/holonomy.hpp"
#include "holoq/io.hpp"
#include "holoq/manifold.hpp"
#include "holoq/report.hpp"
#include "holoq/search.hpp"
#include "holoq/synthesis.hpp"
#include "holoq/tolerances.hpp"

namespace {

using namespace holoq;

// A gate argument is either a catalog name or a path to a matrix document.
std::pair<std::string, ComplexMatrix> resolve_gate(const std::string& spec) {
  if (const GateFixture* gate = find_gate(spec)) {
    return {gate->name, gate->unitary};
  }
  MatrixDocument doc = load_matrix_document(spec);
  std::string name = doc.metadata.gate.value_or(
      std::filesystem::path(spec).stem().string());
  return {name, std::move(doc.matrix)};
}

int run_synth(const std::string& gate_spec, int n_max,
              const std::string& format) {
  const auto [name, unitary] = resolve_gate(gate_spec);
  const SynthesisReport report = synthesize_report(name, unitary, n_max);
  std::cout << (format == "json" ? render_json(report) : render_table(report));
  return 0;
}

int run_verify(const std::string& path, int k, int steps) {
  const MatrixDocument doc = load_matrix_document(path);
  const ControlMatrix x = ControlMatrix::from_matrix(doc.matrix, std::size_t(k));
  std::cout << "ambient: " << x.ambient_dim() << ", gate block: " << x.gate_dim()
            << "\n";

  const double p = penalty(x);
  std::cout << "penalty: " << format_number(p) << "\n";
  const WindingCount zeros = winding_zero_count(x);
  if (zeros.degenerate) {
    std::cout << "interior_zeros: 0 (degenerate constant curve)\n";
  } else {
    std::cout << "interior_zeros: " << zeros.interior_zeros << "\n";
  }
  if (p > tol::kClosedLoop) {
    std::cerr << "loop does not close (penalty " << format_number(p) << " > "
              << format_number(tol::kClosedLoop) << ")\n";
    return 1;
  }

  const HolonomyResult exact = holonomy_exact(x);
  const HolonomyResult ordered = holonomy_path_ordered(x, std::size_t(steps));
  std::cout << "holonomy (exact):\n" << exact.unitary.to_string() << "\n";
  std::cout << "holonomy (path-ordered, " << steps << " steps):\n"
            << ordered.unitary.to_string() << "\n";
  std::cout << "methods_distance: "
            << format_number(frobenius_distance(exact.unitary, ordered.unitary))
            << "\n";
  std::cout << "path_ordered_residual: " << format_number(ordered.residual)
            << "\n";
  return 0;
}

int run_scan(const std::string& gate_spec, int cluster, double r_max,
             int samples, const std::string& out_path) {
  const auto [name, unitary] = resolve_gate(gate_spec);
  const TargetGate target = analyze_gate(unitary);
  const ComplexMatrix direction =
      target.canonical_direction(std::size_t(cluster));
  const auto profile =
      scan_penalty_ray(target, direction, r_max, std::size_t(samples));

  std::string csv = "r,penalty\n";
  for (const auto& [r, p] : profile) {
    csv += format_number(r) + "," + format_number(p) + "\n";
  }
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + out_path);
    out << csv;
    if (!out) throw Error("write failed: " + out_path);
    std::cout << "wrote " << profile.size() << " samples for " << name
              << " cluster " << cluster << " to " << out_path << "\n";
  }
  return 0;
}

int run_export(const std::string& gate_name, int family, int winding,
               double theta, const std::vector<double>& coeffs,
               const std::vector<double>& phases, bool use_reference,
               const std::string& out_path) {
  const GateFixture* gate = find_gate(gate_name);
  if (gate == nullptr) {
    std::string names;
    for (const GateFixture& g : catalog()) {
      if (!names.empty()) names += ", ";
      names += g.name;
    }
    throw ParseError("unknown gate \"" + gate_name + "\" (catalog: " + names +
                     ")");
  }
  const TargetGate target = analyze_gate(gate->unitary);

  ControlMatrix x = [&]() -> ControlMatrix {
    if (use_reference) {
      const ReferenceSolution* sol = nullptr;
      for (const ReferenceSolution& s : gate->solutions) {
        if (s.family_mu == std::size_t(family)) {
          sol = &s;
          break;
        }
      }
      if (sol == nullptr) {
        throw InvalidDirectionError("gate \"" + gate_name +
                                    "\" has no hand-coded solution for family " +
                                    std::to_string(family));
      }
      SolutionParams params;
      params.winding = winding;
      params.theta = theta;
      params.coefficients = coeffs;
      params.phases = phases;
      return sol->build(params);
    }
    ComplexMatrix direction;
    if (coeffs.empty()) {
      if (!phases.empty()) {
        throw InvalidDirectionError("--phases requires --coeffs");
      }
      direction = target.canonical_direction(std::size_t(family));
    } else {
      const ComplexMatrix basis = target.cluster_basis(std::size_t(family));
      if (coeffs.size() != basis.cols()) {
        throw InvalidDirectionError(
            "family " + std::to_string(family) + " needs " +
            std::to_string(basis.cols()) + " coefficients, got " +
            std::to_string(coeffs.size()));
      }
      if (!phases.empty() && phases.size() != coeffs.size()) {
        throw InvalidDirectionError("--phases must match --coeffs in length");
      }
      direction = ComplexMatrix(target.k, 1);
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const Complex weight =
            coeffs[j] * std::polar(1.0, phases.empty() ? 0.0 : phases[j]);
        for (std::size_t i = 0; i < target.k; ++i) {
          direction(i, 0) += weight * basis(i, j);
        }
      }
    }
    return build_solution(target, std::size_t(family), direction, winding,
                          theta);
  }();

  MatrixDocument doc;
  doc.matrix = x.assemble();
  doc.metadata.gate = gate->name;
  doc.metadata.family = family;
  doc.metadata.winding = winding;
  doc.metadata.theta = theta;
  if (!coeffs.empty()) doc.metadata.coefficients = coeffs;
  if (!phases.empty()) doc.metadata.phases = phases;
  save_matrix_document(doc, out_path);
  std::cout << "wrote " << out_path << " (|W| = " << format_number(loop_speed(x))
            << ", penalty = " << format_number(penalty(x)) << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Synthesis and verification of exact-closure control loops whose "
      "holonomy realises a chosen unitary gate.",
      "holoq"};
  app.require_subcommand(1);

  std::string synth_gate;
  int synth_n_max = 3;
  std::string synth_format = "table";
  CLI::App* synth = app.add_subcommand(
      "synth", "Enumerate all solution families and pick the shortest loop");
  synth->add_option("--gate", synth_gate,
                    "Catalog gate name or path to a matrix document")
      ->required();
  synth->add_option("--n-max", synth_n_max, "Largest |winding| to enumerate")
      ->check(CLI::Range(1, 12));
  synth->add_option("--format", synth_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  std::string verify_file;
  int verify_k = 0;
  int verify_steps = 10000;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check closure and holonomy of a stored loop generator");
  verify->add_option("--x-file", verify_file, "Matrix document with the generator")
      ->required();
  verify->add_option("--k", verify_k, "Dimension of the gate block")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--steps", verify_steps,
                     "Steps for the path-ordered product")
      ->check(CLI::Range(10, 100000000));

  std::string scan_gate;
  int scan_cluster = 1;
  double scan_r_max = 7.0;
  int scan_samples = 1401;
  std::string scan_out;
  CLI::App* scan = app.add_subcommand(
      "scan", "Sample the closure penalty along a family eigenspace ray");
  scan->add_option("--gate", scan_gate,
                   "Catalog gate name or path to a matrix document")
      ->required();
  scan->add_option("--cluster", scan_cluster, "1-based family index")
      ->check(CLI::PositiveNumber);
  scan->add_option("--r-max", scan_r_max, "Largest coupling radius")
      ->check(CLI::PositiveNumber);
  scan->add_option("--samples", scan_samples, "Number of samples")
      ->check(CLI::Range(2, 10000000));
  scan->add_option("--out", scan_out, "CSV output path (default: stdout)");

  std::string export_gate;
  int export_family = 1;
  int export_n = 1;
  double export_theta = 0.0;
  std::vector<double> export_coeffs;
  std::vector<double> export_phases;
  bool export_reference = false;
  std::string export_out;
  CLI::App* exporter = app.add_subcommand(
      "export", "Build one solution and write its generator to a file");
  exporter->add_option("--gate", export_gate, "Catalog gate name")->required();
  exporter->add_option("--family", export_family, "1-based family index")
      ->check(CLI::PositiveNumber);
  exporter->add_option("--n", export_n, "Winding number (nonzero)");
  exporter->add_option("--theta", export_theta, "Overall coupling phase");
  exporter
      ->add_option("--coeffs", export_coeffs,
                   "Real coefficients over the family eigenspace basis")
      ->delimiter(',');
  exporter
      ->add_option("--phases", export_phases,
                   "Per-coefficient phases (with --coeffs)")
      ->delimiter(',');
  exporter->add_flag("--reference", export_reference,
                     "Use the hand-coded reference construction");
  exporter->add_option("--out", export_out, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(synth)) {
      return run_synth(synth_gate, synth_n_max, synth_format);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(verify_file, verify_k, verify_steps);
    }
    if (app.got_subcommand(scan)) {
      return run_scan(scan_gate, scan_cluster, scan_r_max, scan_samples,
                      scan_out);
    }
    if (app.got_subcommand(exporter)) {
      return run_export(export_gate, export_family, export_n, export_theta,
                        export_coeffs, export_phases, export_reference,
                        export_out);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotUnitaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotAntiHermitianError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotHermitianError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const OpenLoopError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
