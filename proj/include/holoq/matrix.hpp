#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace holoq {

using Complex = std::complex<double>;

// Dense row-major complex matrix. All dimensions in this library are tiny
// (at most a few dozen), so the implementation favours clarity and value
// semantics over asymptotics.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix column_vector(const std::vector<Complex>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Complex>& entries() const { return data_; }

  ComplexMatrix adjoint() const;  // conjugate transpose
  ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                      std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const ComplexMatrix& b);
  Complex trace() const;
  bool all_finite() const;
  std::string to_string(int precision = 6) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);
ComplexMatrix operator*(double s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, double s);

double frobenius_norm(const ComplexMatrix& m);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);

// column * column† for a k x 1 matrix.
ComplexMatrix outer_product(const ComplexMatrix& column);

double hermiticity_defect(const ComplexMatrix& m);       // |M - M†|_F
double anti_hermiticity_defect(const ComplexMatrix& m);  // |M + M†|_F
double unitarity_defect(const ComplexMatrix& m);         // |M†M - I|_F

}  // namespace holoq
