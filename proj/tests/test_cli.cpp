#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "holoq/io.hpp"
#include "holoq/matrix.hpp"

using namespace holoq;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int status = -1;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path capture =
      fs::temp_directory_path() /
      ("holoq_cli_capture_" + std::to_string(++counter) + ".txt");
  const std::string command = std::string(HOLOQ_CLI_PATH) + " " + args + " > " +
                              capture.string() + " 2>&1";
  const int raw = std::system(command.c_str());

  CliResult result;
  std::ifstream in(capture, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  fs::remove(capture);
  if (raw != -1 && WIFEXITED(raw)) result.status = WEXITSTATUS(raw);
  return result;
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / name;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("synth prints the family table with the optimum marked") {
  const CliResult r = run_cli("synth --gate hadamard");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "norm/pi"));
  CHECK(contains(r.output, "<- optimal"));
  CHECK(contains(r.output, "optimal: family 2, n = 1, |W| = 0.866025 pi"));
}

TEST_CASE("synth emits machine-readable JSON") {
  const CliResult r = run_cli("synth --gate hadamard --format json");
  REQUIRE(r.status == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.at("gate").at("name") == "hadamard");
  CHECK(j.at("families").size() == 2);
  CHECK(j.at("optimal").at("mu") == 2);
  CHECK(j.at("optimal").at("n") == 1);
  CHECK(std::abs(j.at("optimal").at("norm_over_pi").get<double>() -
                 0.8660254037844386) <= 1e-12);
  for (const auto& family : j.at("families")) {
    for (const auto& member : family.at("members")) {
      CHECK(member.at("penalty").get<double>() <= 1e-15);
      CHECK(member.at("holonomy_error").get<double>() <= 1e-9);
    }
  }
}

TEST_CASE("synth accepts a matrix document in place of a catalog name") {
  const fs::path path = temp_file("holoq_cli_custom_gate.json");
  MatrixDocument doc;
  doc.matrix = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
  doc.metadata.gate = "bitflip";
  save_matrix_document(doc, path);

  const CliResult r = run_cli("synth --gate " + path.string());
  CHECK(r.status == 0);
  CHECK(contains(r.output, "gate: bitflip"));
  fs::remove(path);
}

TEST_CASE("synth rejects unknown gates and non-unitary input") {
  CHECK(run_cli("synth --gate nosuchgate").status == 2);

  const fs::path path = temp_file("holoq_cli_nonunitary.json");
  MatrixDocument doc;
  doc.matrix = ComplexMatrix::from_rows({{1, 1}, {0, 1}});
  save_matrix_document(doc, path);
  const CliResult r = run_cli("synth --gate " + path.string());
  CHECK(r.status == 3);
  fs::remove(path);
}

TEST_CASE("export writes a canonical, re-loadable document") {
  const fs::path path = temp_file("holoq_cli_member.json");
  const CliResult r = run_cli("export --gate hadamard --family 2 --n 1 --out " +
                              path.string());
  REQUIRE(r.status == 0);
  CHECK(contains(r.output, "wrote"));

  const std::string raw = read_file(path);
  const MatrixDocument doc = parse_matrix_document(raw);
  CHECK(serialize_matrix_document(doc) == raw);  // byte-identical round trip
  CHECK(doc.metadata.gate.value() == "hadamard");
  CHECK(doc.metadata.family.value() == 2);
  CHECK(doc.metadata.winding.value() == 1);
  CHECK(doc.matrix.rows() == 3);
  CHECK(anti_hermiticity_defect(doc.matrix) <= 1e-12);

  SUBCASE("verify accepts the exported generator") {
    const CliResult v =
        run_cli("verify --x-file " + path.string() + " --k 2 --steps 2000");
    CHECK(v.status == 0);
    CHECK(contains(v.output, "penalty:"));
    CHECK(contains(v.output, "interior_zeros: 0"));
    CHECK(contains(v.output, "holonomy (exact):"));
    CHECK(contains(v.output, "methods_distance:"));
  }

  SUBCASE("verify rejects an impossible split") {
    CHECK(run_cli("verify --x-file " + path.string() + " --k 4").status == 2);
  }

  fs::remove(path);
}

TEST_CASE("export supports reference constructions and coefficient mixtures") {
  const fs::path ref_path = temp_file("holoq_cli_reference.json");
  const CliResult ref = run_cli(
      "export --gate hadamard --family 2 --n 1 --reference --out " +
      ref_path.string());
  REQUIRE(ref.status == 0);
  CHECK(run_cli("verify --x-file " + ref_path.string() + " --k 2").status == 0);
  fs::remove(ref_path);

  const fs::path mix_path = temp_file("holoq_cli_mixture.json");
  const CliResult mix = run_cli(
      "export --gate cnot --family 1 --coeffs 0.6,0.0,0.8 --phases 0,0,0.5 "
      "--out " +
      mix_path.string());
  REQUIRE(mix.status == 0);
  CHECK(run_cli("verify --x-file " + mix_path.string() + " --k 4").status == 0);
  const MatrixDocument doc = load_matrix_document(mix_path);
  REQUIRE(doc.metadata.coefficients.has_value());
  CHECK(doc.metadata.coefficients->size() == 3);
  fs::remove(mix_path);

  // No hand-coded solution for this family; wrong coefficient counts fail.
  CHECK(run_cli("export --gate identity2 --family 1 --reference --out " +
                temp_file("holoq_cli_never.json").string())
            .status == 2);
  CHECK(run_cli("export --gate cnot --family 1 --coeffs 0.6,0.8 --out " +
                temp_file("holoq_cli_never.json").string())
            .status == 2);
}

TEST_CASE("verify flags broken generators") {
  {  // Not anti-Hermitian: exit 3.
    const fs::path path = temp_file("holoq_cli_hermitian.json");
    MatrixDocument doc;
    doc.matrix = ComplexMatrix::identity(2);
    save_matrix_document(doc, path);
    const CliResult r = run_cli("verify --x-file " + path.string() + " --k 1");
    CHECK(r.status == 3);
    fs::remove(path);
  }
  {  // Anti-Hermitian but open: exit 1.
    const fs::path path = temp_file("holoq_cli_open.json");
    MatrixDocument doc;
    doc.matrix = ComplexMatrix(2, 2);
    doc.matrix(0, 0) = Complex(0.0, 0.3);
    doc.matrix(0, 1) = Complex(1.0, 0.0);
    doc.matrix(1, 0) = Complex(-1.0, 0.0);
    save_matrix_document(doc, path);
    const CliResult r = run_cli("verify --x-file " + path.string() + " --k 1");
    CHECK(r.status == 1);
    CHECK(contains(r.output, "loop does not close"));
    fs::remove(path);
  }
}

TEST_CASE("scan emits the penalty profile as CSV") {
  const CliResult r =
      run_cli("scan --gate hadamard --cluster 2 --r-max 7 --samples 101");
  REQUIRE(r.status == 0);
  CHECK(r.output.rfind("r,penalty\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : r.output) lines += (c == '\n');
  CHECK(lines == 102);

  const fs::path path = temp_file("holoq_cli_scan.csv");
  const CliResult w = run_cli(
      "scan --gate hadamard --cluster 2 --samples 101 --out " + path.string());
  REQUIRE(w.status == 0);
  CHECK(contains(w.output, "wrote 101 samples"));
  CHECK(read_file(path).rfind("r,penalty\n", 0) == 0);
  fs::remove(path);

  CHECK(run_cli("scan --gate hadamard --cluster 5").status == 2);
}

TEST_CASE("argument errors exit with status 2") {
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("synth").status == 2);                    // missing --gate
  CHECK(run_cli("synth --gate hadamard --n-max 0").status == 2);
  CHECK(run_cli("synth --gate hadamard --format yaml").status == 2);
  CHECK(run_cli("verify --x-file nope.json").status == 2);  // missing --k
  CHECK(run_cli("export --gate hadamard").status == 2);     // missing --out

  const CliResult help = run_cli("--help");
  CHECK(help.status == 0);
  CHECK(contains(help.output, "Usage"));
}
