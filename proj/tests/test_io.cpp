#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <string>

#include "doctest.h"

#include "holoq/errors.hpp"
#include "holoq/io.hpp"
#include "holoq/matrix.hpp"

using namespace holoq;

namespace {

MatrixDocument sample_document() {
  MatrixDocument doc;
  doc.matrix = ComplexMatrix(2, 2);
  doc.matrix(0, 0) = Complex(0.5, -0.0);
  doc.matrix(0, 1) = Complex(1.0 / 3.0, std::numbers::pi);
  doc.matrix(1, 0) = Complex(-1e-15, 1e20);
  doc.matrix(1, 1) = Complex(-2.7206990463513265, 1.0);
  doc.metadata.gate = "dft2";
  doc.metadata.family = 1;
  doc.metadata.winding = -2;
  doc.metadata.theta = 0.7853981633974483;
  doc.metadata.coefficients = std::vector<double>{0.6, 0.8};
  doc.metadata.phases = std::vector<double>{0.0, -0.25};
  return doc;
}

}  // namespace

TEST_CASE("format_number is lossless and canonical") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-0.0) == "0");  // canonical: round trips through JSON
  CHECK(format_number(std::numbers::pi) == "3.1415926535897931");
  CHECK(format_number(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_number(1e20) == "1e+20");
}

TEST_CASE("serialize/parse round trip is byte identical") {
  const MatrixDocument doc = sample_document();
  const std::string text = serialize_matrix_document(doc);
  const MatrixDocument back = parse_matrix_document(text);
  CHECK(serialize_matrix_document(back) == text);

  CHECK(back.schema_version == "1");
  CHECK(frobenius_distance(back.matrix, doc.matrix) == 0.0);
  CHECK(back.metadata.gate.value() == "dft2");
  CHECK(back.metadata.family.value() == 1);
  CHECK(back.metadata.winding.value() == -2);
  CHECK(back.metadata.theta.value() == 0.7853981633974483);
  CHECK((back.metadata.coefficients.value() == std::vector<double>{0.6, 0.8}));
  CHECK((back.metadata.phases.value() == std::vector<double>{0.0, -0.25}));
}

TEST_CASE("metadata is omitted when absent") {
  MatrixDocument doc;
  doc.matrix = ComplexMatrix::identity(2);
  const std::string text = serialize_matrix_document(doc);
  CHECK(text.find("metadata") == std::string::npos);
  const MatrixDocument back = parse_matrix_document(text);
  CHECK(back.metadata.empty());
  CHECK(serialize_matrix_document(back) == text);
}

TEST_CASE("entries are parsed in row-major order") {
  const MatrixDocument doc = parse_matrix_document(
      R"({"schema_version": "1", "rows": 2, "cols": 1,
          "entries": [[1, 2], [3, 4]]})");
  REQUIRE(doc.matrix.rows() == 2);
  REQUIRE(doc.matrix.cols() == 1);
  CHECK(doc.matrix(0, 0) == Complex(1.0, 2.0));
  CHECK(doc.matrix(1, 0) == Complex(3.0, 4.0));
}

TEST_CASE("serializer rejects unusable matrices") {
  MatrixDocument doc;  // default: 0 x 0
  CHECK_THROWS_AS(serialize_matrix_document(doc), DimensionError);
  doc.matrix = ComplexMatrix::identity(2);
  doc.matrix(0, 0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(serialize_matrix_document(doc), Error);
}

TEST_CASE("parser rejects malformed documents") {
  const auto reject = [](const std::string& text) {
    CHECK_THROWS_AS(parse_matrix_document(text), ParseError);
  };
  reject("not json at all");
  reject("[]");
  reject("{}");
  reject(R"({"schema_version": 1, "rows": 1, "cols": 1, "entries": [[0, 0]]})");
  reject(R"({"schema_version": "2", "rows": 1, "cols": 1, "entries": [[0, 0]]})");
  reject(R"({"schema_version": "1", "cols": 1, "entries": [[0, 0]]})");
  reject(R"({"schema_version": "1", "rows": 0, "cols": 1, "entries": []})");
  reject(R"({"schema_version": "1", "rows": 1.5, "cols": 1, "entries": [[0, 0]]})");
  reject(R"({"schema_version": "1", "rows": 1, "cols": 1, "entries": 7})");
  reject(R"({"schema_version": "1", "rows": 2, "cols": 1, "entries": [[0, 0]]})");
  reject(R"({"schema_version": "1", "rows": 1, "cols": 1, "entries": [[0, 0, 0]]})");
  reject(R"({"schema_version": "1", "rows": 1, "cols": 1, "entries": [["a", 0]]})");
  reject(R"({"schema_version": "1", "rows": 1, "cols": 1, "entries": [[0, 0]],
             "metadata": 3})");
  reject(R"({"schema_version": "1", "rows": 1, "cols": 1, "entries": [[0, 0]],
             "metadata": {"family": 1.5}})");
  reject(R"({"schema_version": "1", "rows": 1, "cols": 1, "entries": [[0, 0]],
             "metadata": {"gate": 7}})");
  reject(R"({"schema_version": "1", "rows": 1, "cols": 1, "entries": [[0, 0]],
             "metadata": {"coefficients": [0.5, "x"]}})");
}

TEST_CASE("documents survive a file round trip") {
  namespace fs = std::filesystem;
  const fs::path path =
      fs::temp_directory_path() / "holoq_test_io_document.json";
  const MatrixDocument doc = sample_document();
  save_matrix_document(doc, path);
  const MatrixDocument back = load_matrix_document(path);
  CHECK(serialize_matrix_document(back) == serialize_matrix_document(doc));
  fs::remove(path);
  CHECK_THROWS_AS(load_matrix_document(path), ParseError);
}
