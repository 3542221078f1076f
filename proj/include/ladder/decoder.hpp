#pragma once

#include <span>
#include <vector>

#include "ladder/encoder.hpp"
#include "ladder/matrix.hpp"
#include "ladder/model.hpp"
#include "ladder/pass_core.hpp"

namespace ladder {

using DecoderTrace = DecoderTraceT<Matrix>;

// One denoiser unit evaluated on scalars; params are that unit's values in
// the documented order for the kind. Matches the layer-level composition
// operation for operation.
double g_apply(GKind kind, std::span<const double> params, double z_tilde, double u);

// Top-down reconstruction. Needs the corrupted trace (inputs to denoise) and
// the clean trace (per-layer statistics that scale zhat onto the clean
// targets). With dec.top_only only the top layer is produced.
DecoderTrace decoder_pass(const Architecture& arch, const DecoderParams& dec,
                          const CorruptedTrace& corrupted, const CleanTrace& clean,
                          UTopMode u_top = UTopMode::batchnorm);

}  // namespace ladder
