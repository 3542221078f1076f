#pragma once

#include <vector>

#include "ladder/decoder.hpp"
#include "ladder/encoder.hpp"
#include "ladder/matrix.hpp"
#include "ladder/model.hpp"

namespace ladder {

struct CostBreakdown {
  double total = 0.0;
  double supervised = 0.0;
  std::vector<double> denoise;  // per layer 0..L
};

// Mean negative log probability of the targets under the corrupted-pass
// output, over labeled rows only (target < 0 marks unlabeled). Exactly 0
// when no row is labeled.
double supervised_cost(const Matrix& y_tilde, const std::vector<int>& targets);

// Per layer: lambda_l / (B * m_l) times the squared distance between the
// clean activations and the rescaled reconstructions. Layers a top-only
// decoder omits cost exactly 0.
std::vector<double> denoising_cost(const Architecture& arch,
                                   const std::vector<double>& lambda,
                                   const CleanTrace& clean, const DecoderTrace& dec);

CostBreakdown total_cost(const Architecture& arch, const std::vector<double>& lambda,
                         const Matrix& y_tilde, const std::vector<int>& targets,
                         const CleanTrace& clean, const DecoderTrace& dec);

}  // namespace ladder
