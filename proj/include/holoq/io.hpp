#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "holoq/matrix.hpp"

namespace holoq {

// Optional provenance carried alongside an exported generator so a verify
// run can be related back to the synthesis request that produced it.
struct DocumentMetadata {
  std::optional<std::string> gate;
  std::optional<int> family;
  std::optional<int> winding;
  std::optional<double> theta;
  std::optional<std::vector<double>> coefficients;
  std::optional<std::vector<double>> phases;

  bool empty() const {
    return !gate && !family && !winding && !theta && !coefficients && !phases;
  }
};

// Interchange document for one complex matrix. Entries are row-major
// [re, im] pairs; numbers are written with 17 significant digits, so a
// parse/serialize round trip reproduces the file byte for byte.
struct MatrixDocument {
  std::string schema_version = "1";
  ComplexMatrix matrix;
  DocumentMetadata metadata;
};

// Shortest-lossless rendering of a double (printf %.17g); both zeros are
// rendered as "0" so that rendering commutes with JSON number parsing.
std::string format_number(double value);

std::string serialize_matrix_document(const MatrixDocument& doc);
MatrixDocument parse_matrix_document(const std::string& text);

MatrixDocument load_matrix_document(const std::filesystem::path& path);
void save_matrix_document(const MatrixDocument& doc,
                          const std::filesystem::path& path);

}  // namespace holoq
