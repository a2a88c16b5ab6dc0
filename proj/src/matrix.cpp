#include "holoq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "holoq/errors.hpp"

namespace holoq {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shapes " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + " differ");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw DimensionError("from_rows: ragged row lengths");
    }
    std::size_t j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::column_vector(const std::vector<Complex>& entries) {
  ComplexMatrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m(j, i) = std::conj((*this)(i, j));
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::block(std::size_t row0, std::size_t col0,
                                   std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw DimensionError("block: window exceeds matrix bounds");
  }
  ComplexMatrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      m(i, j) = (*this)(row0 + i, col0 + j);
    }
  }
  return m;
}

void ComplexMatrix::set_block(std::size_t row0, std::size_t col0,
                              const ComplexMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) {
    throw DimensionError("set_block: window exceeds matrix bounds");
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      (*this)(row0 + i, col0 + j) = b(i, j);
    }
  }
}

Complex ComplexMatrix::trace() const {
  if (rows_ != cols_) throw DimensionError("trace: matrix is not square");
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

std::string ComplexMatrix::to_string(int precision) const {
  std::ostringstream out;
  char buf[96];
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) {
      const Complex& v = (*this)(i, j);
      std::snprintf(buf, sizeof(buf), "(%.*g,%.*g)", precision, v.real(),
                    precision, v.imag());
      out << buf << (j + 1 < cols_ ? " " : "");
    }
    out << (i + 1 < rows_ ? "\n" : "]");
  }
  return out.str();
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a) {
  a *= Complex(-1.0, 0.0);
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("operator*: inner dimensions " +
                         std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        m(i, j) += aik * b(k, j);
      }
    }
  }
  return m;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) {
  m *= s;
  return m;
}

ComplexMatrix operator*(ComplexMatrix m, Complex s) {
  m *= s;
  return m;
}

ComplexMatrix operator*(double s, ComplexMatrix m) {
  m *= Complex(s, 0.0);
  return m;
}

ComplexMatrix operator*(ComplexMatrix m, double s) {
  m *= Complex(s, 0.0);
  return m;
}

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const Complex& v : m.entries()) sum += std::norm(v);
  return std::sqrt(sum);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(sum);
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (const Complex& v : m.entries()) best = std::max(best, std::abs(v));
  return best;
}

ComplexMatrix outer_product(const ComplexMatrix& column) {
  if (column.cols() != 1) {
    throw DimensionError("outer_product: expected a column vector");
  }
  const std::size_t n = column.rows();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = column(i, 0) * std::conj(column(j, 0));
    }
  }
  return m;
}

double hermiticity_defect(const ComplexMatrix& m) {
  return frobenius_distance(m, m.adjoint());
}

double anti_hermiticity_defect(const ComplexMatrix& m) {
  return frobenius_norm(m + m.adjoint());
}

double unitarity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("unitarity_defect: matrix is not square");
  }
  return frobenius_distance(m.adjoint() * m, ComplexMatrix::identity(m.cols()));
}

}  // namespace holoq
