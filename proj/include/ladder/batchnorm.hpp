#pragma once

#include <cstddef>

#include "ladder/matrix.hpp"

namespace ladder {

// Added to the biased column variance before the square root, everywhere a
// standard deviation is formed. Keeps the divisor positive for constant
// columns.
inline constexpr double kVarianceEpsilon = 1e-6;

// Per-column mean and standard deviation of a batch (rows are samples).
struct BatchStats {
  Matrix mean;  // 1 x cols
  Matrix std;   // 1 x cols, strictly positive
};

// 1 x cols column means.
Matrix column_mean(const Matrix& x);
// 1 x cols of sqrt(biased variance + eps); mean must be column_mean(x).
// Requires at least 2 rows.
Matrix column_std(const Matrix& x, double eps, const Matrix& mean);

// Biased (1/B) variance; requires at least 2 rows. std = sqrt(var + eps).
BatchStats batch_statistics(const Matrix& x, double eps = kVarianceEpsilon);

// (x - mean) / std, columnwise.
Matrix normalize(const Matrix& x, const BatchStats& stats);

// Exponential moving averages of training batch statistics, used in place of
// batch statistics at evaluation time. The placeholder state before any
// update is mean 0, std 1; consumers that need real estimates check
// update_count() >= 1. decay is in [0, 1].
class RunningStats {
 public:
  RunningStats(std::size_t cols, double decay);

  // First call copies the batch statistics; afterwards
  // mean <- decay * mean + (1 - decay) * batch.mean, same for std.
  void ema_update(const BatchStats& batch);

  const Matrix& mean() const { return mean_; }
  const Matrix& std() const { return std_; }
  double decay() const { return decay_; }
  std::size_t update_count() const { return update_count_; }
  std::size_t cols() const { return mean_.cols(); }

  // For checkpoint restore.
  void restore(Matrix mean, Matrix std, std::size_t update_count);

 private:
  Matrix mean_;
  Matrix std_;
  double decay_;
  std::size_t update_count_ = 0;
};

// Normalize x with running estimates instead of batch statistics.
Matrix normalize_running(const Matrix& x, const RunningStats& stats);

}  // namespace ladder
