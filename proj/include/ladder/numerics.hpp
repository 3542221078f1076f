#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ladder/matrix.hpp"
#include "ladder/rng.hpp"

namespace ladder {

// Probabilities are floored at this value inside log-likelihood terms.
inline constexpr double kLogProbFloor = 1e-15;

// Matrix-level operations. Shapes are validated and mismatches throw
// std::invalid_argument naming both shapes. Broadcasting is never implicit;
// the *_rowvec operations are the explicit row-broadcast forms and take a
// 1 x cols vector.

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);

Matrix relu(const Matrix& a);
Matrix sigmoid(const Matrix& a);
// Row-wise softmax, max-shifted for overflow safety. Rows sum to 1.
Matrix softmax_rows(const Matrix& a);

Matrix add_rowvec(const Matrix& a, const Matrix& v);
Matrix sub_rowvec(const Matrix& a, const Matrix& v);
Matrix mul_rowvec(const Matrix& a, const Matrix& v);
// v must have no zero entries.
Matrix div_rowvec(const Matrix& a, const Matrix& v);

// rows x cols of independent N(0, std^2) draws in row-major order. std >= 0;
// the draw count is the same for every std, so parallel configurations stay
// stream-aligned.
Matrix gaussian_sample(Rng& rng, std::size_t rows, std::size_t cols, double std);

double sum_squares(const Matrix& a);
// Index of the row maximum; ties resolve to the lowest index.
std::size_t argmax_row(const Matrix& a, std::size_t row);

// Mean over rows with target >= 0 of -log(max(probs[row, target], floor));
// exactly 0 when no row has a target. Rows with target < 0 are ignored.
double masked_nll(const Matrix& probs, const std::vector<int>& targets, double floor);

// Central finite differences: g_i = (f(theta + h e_i) - f(theta - h e_i)) / (2h).
// Throws NumericError naming the coordinate if f returns a non-finite value.
std::vector<double> finite_diff_gradient(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& theta, double h);

}  // namespace ladder
