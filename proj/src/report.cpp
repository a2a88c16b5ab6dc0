#include "holoq/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "holoq/errors.hpp"
#include "holoq/holonomy.hpp"
#include "holoq/io.hpp"
#include "holoq/manifold.hpp"
#include "holoq/synthesis.hpp"

namespace holoq {

namespace {

constexpr double kPi = std::numbers::pi;

std::string short_number(double v, const char* fmt = "%.6g") {
  char buf[48];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

SynthesisReport synthesize_report(const std::string& gate_name,
                                  const ComplexMatrix& unitary, int n_max) {
  const TargetGate target = analyze_gate(unitary);
  const auto families = enumerate_families(target, n_max);
  const ControlMatrix best = optimal_solution(families);

  SynthesisReport report;
  report.gate_name = gate_name;
  report.unitary = unitary;
  report.n_max = n_max;
  report.optimal_mu = std::size_t(best.family_mu.value());
  report.optimal_winding = best.winding.value();
  report.optimal_norm = loop_speed(best);

  for (const SolutionFamily& family : families) {
    FamilyReport fr;
    fr.mu = family.mu;
    fr.omega = family.omega;
    for (const auto& [n, member] : family.members) {
      MemberReport mr;
      mr.winding = n;
      mr.norm = loop_speed(member);
      mr.penalty = penalty(member);
      mr.holonomy_error =
          frobenius_distance(holonomy_exact(member).unitary, unitary);
      mr.interior_zeros = winding_zero_count(member).interior_zeros;
      mr.optimal =
          (family.mu == report.optimal_mu && n == report.optimal_winding);
      fr.members.push_back(mr);
    }
    report.families.push_back(std::move(fr));
  }
  return report;
}

std::string render_json(const SynthesisReport& report) {
  std::string out;
  out += "{\n";
  out += "  \"schema_version\": \"1\",\n";
  out += "  \"gate\": {\n";
  out += "    \"name\": \"" + report.gate_name + "\",\n";
  out += "    \"rows\": " + std::to_string(report.unitary.rows()) + ",\n";
  out += "    \"cols\": " + std::to_string(report.unitary.cols()) + ",\n";
  out += "    \"entries\": [";
  const std::size_t total = report.unitary.rows() * report.unitary.cols();
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Complex& z = report.unitary.entries()[idx];
    if (idx) out += ", ";
    out += "[" + format_number(z.real()) + ", " + format_number(z.imag()) + "]";
  }
  out += "]\n  },\n";
  out += "  \"n_max\": " + std::to_string(report.n_max) + ",\n";
  out += "  \"families\": [\n";
  for (std::size_t f = 0; f < report.families.size(); ++f) {
    const FamilyReport& fr = report.families[f];
    out += "    {\n";
    out += "      \"mu\": " + std::to_string(fr.mu) + ",\n";
    out += "      \"omega\": " + format_number(fr.omega) + ",\n";
    out += "      \"members\": [\n";
    for (std::size_t m = 0; m < fr.members.size(); ++m) {
      const MemberReport& mr = fr.members[m];
      out += "        {\"n\": " + std::to_string(mr.winding) +
             ", \"norm\": " + format_number(mr.norm) +
             ", \"norm_over_pi\": " + format_number(mr.norm / kPi) +
             ", \"penalty\": " + format_number(mr.penalty) +
             ", \"holonomy_error\": " + format_number(mr.holonomy_error) +
             ", \"interior_zeros\": " + std::to_string(mr.interior_zeros) +
             ", \"optimal\": " + (mr.optimal ? "true" : "false") + "}" +
             (m + 1 < fr.members.size() ? ",\n" : "\n");
    }
    out += "      ]\n";
    out += std::string("    }") + (f + 1 < report.families.size() ? ",\n" : "\n");
  }
  out += "  ],\n";
  out += "  \"optimal\": {\"mu\": " + std::to_string(report.optimal_mu) +
         ", \"n\": " + std::to_string(report.optimal_winding) +
         ", \"norm\": " + format_number(report.optimal_norm) +
         ", \"norm_over_pi\": " + format_number(report.optimal_norm / kPi) +
         "}\n";
  out += "}\n";
  return out;
}

std::string render_table(const SynthesisReport& report) {
  std::string out;
  out += "gate: " + report.gate_name +
         " (k = " + std::to_string(report.unitary.rows()) +
         ", families = " + std::to_string(report.families.size()) +
         ", n_max = " + std::to_string(report.n_max) + ")\n";
  out += "  mu   omega/pi      n     norm/pi       penalty  holonomy_err  zeros\n";
  for (const FamilyReport& fr : report.families) {
    for (const MemberReport& mr : fr.members) {
      char row[160];
      std::snprintf(row, sizeof(row),
                    " %3zu %10s %6d %11s %13.3g %13.3g %6zu%s\n", fr.mu,
                    short_number(fr.omega / kPi).c_str(), mr.winding,
                    short_number(mr.norm / kPi).c_str(), mr.penalty,
                    mr.holonomy_error, mr.interior_zeros,
                    mr.optimal ? "  <- optimal" : "");
      out += row;
    }
  }
  out += "optimal: family " + std::to_string(report.optimal_mu) +
         ", n = " + std::to_string(report.optimal_winding) +
         ", |W| = " + short_number(report.optimal_norm / kPi) + " pi\n";
  return out;
}

}  // namespace holoq
