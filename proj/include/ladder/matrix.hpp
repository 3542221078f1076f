#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ladder {

// Dense row-major matrix of doubles. A batch is stored one sample per row.
// Dimensions are fixed at construction; an explicitly constructed matrix
// always has positive row and column counts. The default-constructed state
// is an empty placeholder (0x0) that every operation rejects.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);  // zero-filled
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }
  bool empty() const { return rows_ == 0; }

  double& at(std::size_t r, std::size_t c);
  double at(std::size_t r, std::size_t c) const;
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& values() { return data_; }
  const std::vector<double>& values() const { return data_; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// True when every entry is finite.
bool all_finite(const Matrix& m);

// Throws NumericError mentioning `where` if any entry is non-finite.
void require_finite(const Matrix& m, const char* where);

}  // namespace ladder
