#include "holoq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "holoq/errors.hpp"

namespace holoq {

namespace {

using nlohmann::json;

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void append_number_array(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_number(values[i]);
  }
  out += ']';
}

const json& require_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("matrix document: missing field \"") + key +
                     "\"");
  }
  return *it;
}

double require_finite_number(const json& j, const char* where) {
  if (!j.is_number()) {
    throw ParseError(std::string("matrix document: ") + where +
                     " is not a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ParseError(std::string("matrix document: ") + where +
                     " is not finite");
  }
  return v;
}

int require_int(const json& j, const char* where) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string("matrix document: ") + where +
                     " is not an integer");
  }
  return j.get<int>();
}

std::vector<double> require_number_array(const json& j, const char* where) {
  if (!j.is_array()) {
    throw ParseError(std::string("matrix document: ") + where +
                     " is not an array");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& v : j) out.push_back(require_finite_number(v, where));
  return out;
}

}  // namespace

std::string format_number(double value) {
  // Canonicalise -0.0: JSON parsers may return it as the integer 0, which
  // would break the byte-identical parse/serialize round trip.
  if (value == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string serialize_matrix_document(const MatrixDocument& doc) {
  if (!doc.matrix.all_finite()) {
    throw Error("serialize_matrix_document: matrix has non-finite entries");
  }
  if (doc.matrix.rows() == 0 || doc.matrix.cols() == 0) {
    throw DimensionError("serialize_matrix_document: matrix is empty");
  }

  std::string out;
  out += "{\n";
  out += "  \"schema_version\": \"" + json_escape(doc.schema_version) + "\",\n";
  out += "  \"rows\": " + std::to_string(doc.matrix.rows()) + ",\n";
  out += "  \"cols\": " + std::to_string(doc.matrix.cols()) + ",\n";
  out += "  \"entries\": [\n";
  const std::size_t total = doc.matrix.rows() * doc.matrix.cols();
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Complex& z = doc.matrix.entries()[idx];
    out += "    [" + format_number(z.real()) + ", " + format_number(z.imag()) +
           (idx + 1 < total ? "],\n" : "]\n");
  }
  out += "  ]";

  const DocumentMetadata& m = doc.metadata;
  if (!m.empty()) {
    out += ",\n  \"metadata\": {";
    bool first = true;
    const auto sep = [&]() -> std::string {
      if (first) {
        first = false;
        return "\n    ";
      }
      return ",\n    ";
    };
    if (m.gate) out += sep() + "\"gate\": \"" + json_escape(*m.gate) + "\"";
    if (m.family) out += sep() + "\"family\": " + std::to_string(*m.family);
    if (m.winding) out += sep() + "\"winding\": " + std::to_string(*m.winding);
    if (m.theta) out += sep() + "\"theta\": " + format_number(*m.theta);
    if (m.coefficients) {
      out += sep() + "\"coefficients\": ";
      append_number_array(out, *m.coefficients);
    }
    if (m.phases) {
      out += sep() + "\"phases\": ";
      append_number_array(out, *m.phases);
    }
    out += "\n  }";
  }
  out += "\n}\n";
  return out;
}

MatrixDocument parse_matrix_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix document: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("matrix document: top level is not an object");
  }

  MatrixDocument doc;
  const json& version = require_field(j, "schema_version");
  if (!version.is_string()) {
    throw ParseError("matrix document: schema_version is not a string");
  }
  doc.schema_version = version.get<std::string>();
  if (doc.schema_version != "1") {
    throw ParseError("matrix document: unsupported schema_version \"" +
                     doc.schema_version + "\"");
  }

  const int rows = require_int(require_field(j, "rows"), "rows");
  const int cols = require_int(require_field(j, "cols"), "cols");
  if (rows < 1 || cols < 1) {
    throw ParseError("matrix document: rows and cols must be positive");
  }

  const json& entries = require_field(j, "entries");
  if (!entries.is_array()) {
    throw ParseError("matrix document: entries is not an array");
  }
  const std::size_t total = std::size_t(rows) * std::size_t(cols);
  if (entries.size() != total) {
    throw ParseError("matrix document: expected " + std::to_string(total) +
                     " entries, got " + std::to_string(entries.size()));
  }
  doc.matrix = ComplexMatrix(std::size_t(rows), std::size_t(cols));
  for (std::size_t idx = 0; idx < total; ++idx) {
    const json& pair = entries[idx];
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError("matrix document: entry " + std::to_string(idx) +
                       " is not a [re, im] pair");
    }
    const double re = require_finite_number(pair[0], "entry real part");
    const double im = require_finite_number(pair[1], "entry imaginary part");
    doc.matrix(idx / std::size_t(cols), idx % std::size_t(cols)) =
        Complex(re, im);
  }

  const auto meta_it = j.find("metadata");
  if (meta_it != j.end()) {
    const json& meta = *meta_it;
    if (!meta.is_object()) {
      throw ParseError("matrix document: metadata is not an object");
    }
    if (meta.contains("gate")) {
      if (!meta["gate"].is_string()) {
        throw ParseError("matrix document: metadata.gate is not a string");
      }
      doc.metadata.gate = meta["gate"].get<std::string>();
    }
    if (meta.contains("family")) {
      doc.metadata.family = require_int(meta["family"], "metadata.family");
    }
    if (meta.contains("winding")) {
      doc.metadata.winding = require_int(meta["winding"], "metadata.winding");
    }
    if (meta.contains("theta")) {
      doc.metadata.theta = require_finite_number(meta["theta"], "metadata.theta");
    }
    if (meta.contains("coefficients")) {
      doc.metadata.coefficients =
          require_number_array(meta["coefficients"], "metadata.coefficients");
    }
    if (meta.contains("phases")) {
      doc.metadata.phases =
          require_number_array(meta["phases"], "metadata.phases");
    }
  }
  return doc;
}

MatrixDocument load_matrix_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_document(buffer.str());
}

void save_matrix_document(const MatrixDocument& doc,
                          const std::filesystem::path& path) {
  const std::string text = serialize_matrix_document(doc);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write file: " + path.string());
  }
  out << text;
  if (!out) {
    throw Error("write failed: " + path.string());
  }
}

}  // namespace holoq
