#pragma once

#include <cstddef>
#include <vector>

#include "ladder/batchnorm.hpp"
#include "ladder/matrix.hpp"
#include "ladder/model.hpp"
#include "ladder/pass_core.hpp"
#include "ladder/rng.hpp"

namespace ladder {

using CleanTrace = CleanTraceT<Matrix>;
using CorruptedTrace = CorruptedTraceT<Matrix>;

// Forward pass with batch statistics; x is one batch, at least 2 rows.
CleanTrace clean_pass(const Architecture& arch, const EncoderParams& enc, const Matrix& x);

// One N(0, std_l^2) draw per layer 0..L; layer 0 corrupts the input, layer
// l >= 1 is added after that layer's normalization. Draws happen in layer
// order so a given rng stream yields the same corruption for any decoder.
std::vector<Matrix> draw_noise(const Architecture& arch, std::size_t batch_rows,
                               const std::vector<double>& noise_std, Rng& rng);

CorruptedTrace corrupted_pass(const Architecture& arch, const EncoderParams& enc,
                              const Matrix& x, const std::vector<double>& noise_std,
                              Rng& rng);
// Replays explicit noise matrices (gradient checks, variance-free tests).
CorruptedTrace corrupted_pass_frozen(const Architecture& arch, const EncoderParams& enc,
                                     const Matrix& x, std::vector<Matrix> noise);

// Clean forward using running statistics instead of batch statistics; works
// for any number of rows including 1. stats[l-1] belongs to layer l and each
// must have seen at least one update.
Matrix predict_probs(const Architecture& arch, const EncoderParams& enc, const Matrix& x,
                     const std::vector<RunningStats>& stats);

// Alternative evaluation mode: normalize with the evaluation batch's own
// statistics (needs at least 2 rows).
Matrix predict_probs_batchstats(const Architecture& arch, const EncoderParams& enc,
                                const Matrix& x);

// Row-wise argmax; ties resolve to the lowest class index.
std::vector<int> predict_labels(const Matrix& probs);

}  // namespace ladder
