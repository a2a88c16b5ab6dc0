#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "holoq/matrix.hpp"

namespace holoq {

struct MemberReport {
  int winding = 0;
  double norm = 0.0;            // loop length |W|_F
  double penalty = 0.0;         // closure penalty of the built generator
  double holonomy_error = 0.0;  // |holonomy - gate|_F
  std::size_t interior_zeros = 0;
  bool optimal = false;
};

struct FamilyReport {
  std::size_t mu = 0;
  double omega = 0.0;
  std::vector<MemberReport> members;  // ascending winding
};

struct SynthesisReport {
  std::string gate_name;
  ComplexMatrix unitary;
  int n_max = 0;
  std::vector<FamilyReport> families;
  std::size_t optimal_mu = 0;
  int optimal_winding = 0;
  double optimal_norm = 0.0;
};

// Full synthesis of a gate: every family, members n in {±1..±n_max}, each
// member re-verified (closure penalty, holonomy, interior zero count), and
// the minimum-length member marked.
SynthesisReport synthesize_report(const std::string& gate_name,
                                  const ComplexMatrix& unitary, int n_max);

std::string render_json(const SynthesisReport& report);
std::string render_table(const SynthesisReport& report);

}  // namespace holoq
