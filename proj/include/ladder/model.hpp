#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ladder/matrix.hpp"
#include "ladder/rng.hpp"

namespace ladder {

enum class ActivationKind { linear, relu, softmax };

const char* activation_name(ActivationKind a);
ActivationKind activation_from_name(std::string_view name);

// Per-layer scale (gamma) and shift (beta) are kept only where the
// activation does not make them redundant: relu absorbs a scale, linear
// absorbs both, softmax absorbs neither.
bool activation_uses_gamma(ActivationKind a);
bool activation_uses_beta(ActivationKind a);

// Layer widths m_0..m_L plus the activation of each computed layer 1..L.
// softmax is only permitted on the top layer.
struct Architecture {
  std::vector<std::size_t> widths;
  std::vector<ActivationKind> activations;

  std::size_t depth() const { return activations.size(); }
  std::size_t width(std::size_t l) const { return widths[l]; }
  ActivationKind activation(std::size_t l) const { return activations[l - 1]; }
  bool uses_gamma(std::size_t l) const { return activation_uses_gamma(activation(l)); }
  bool uses_beta(std::size_t l) const { return activation_uses_beta(activation(l)); }

  void validate() const;
  bool operator==(const Architecture&) const = default;
};

// relu hidden layers, softmax output.
Architecture mlp_architecture(std::vector<std::size_t> widths);

// Denoising function families. Parameters are per-unit; a layer of width m
// holds each parameter as a 1 x m row vector.
//
//   proposed:     zhat = (zt - mu(u)) * nu(u) + mu(u)
//                 mu(u) = a1 sigmoid(a2 u + a3) + a4 u + a5
//                 nu(u) = a6 sigmoid(a7 u + a8) + a9 u + a10
//   mini_mlp:     zhat = a.xi + b sigmoid(c.xi),   xi = (1, zt, u, zt u)
//   no_augmented: zhat = a.xi + b sigmoid(c.xi),   xi = (1, zt, u)
//   linear:       zhat = a.xi,                     xi = (1, zt, u, zt u)
//   additive_u:   zhat = a1 u + a2 sigmoid(a3 u + a4)
//                      + a5 zt + a6 sigmoid(a7 zt + a8) + a9
enum class GKind { proposed, mini_mlp, no_augmented, linear, additive_u };

const char* g_kind_name(GKind k);
GKind g_kind_from_name(std::string_view name);
std::size_t g_param_count(GKind k);
// Parameters that make the denoiser the identity in zt (pass-through init).
std::vector<Matrix> g_identity_params(GKind k, std::size_t width);

// Source of the top decoder input: batch-normalized top corrupted
// activation (default) or that activation unchanged.
enum class UTopMode { batchnorm, raw };

struct EncoderParams {
  std::vector<Matrix> W;                     // W[l-1]: m_{l-1} x m_l
  std::vector<std::optional<Matrix>> gamma;  // 1 x m_l where used
  std::vector<std::optional<Matrix>> beta;   // 1 x m_l where used
};

struct DecoderParams {
  GKind kind = GKind::proposed;
  // Top-only form: V and the g parameters below the top layer are absent.
  bool top_only = false;
  std::vector<Matrix> V;               // V[l-1]: m_l x m_{l-1} (projects layer l down)
  std::vector<std::vector<Matrix>> g;  // g[l]: per-unit params of layer l, each 1 x m_l
};

// Returns a copy keeping only the top-layer denoiser parameters.
DecoderParams gamma_subset(const DecoderParams& full);

struct LadderParams {
  Architecture arch;
  EncoderParams encoder;
  DecoderParams decoder;
};

// Weights ~ N(0, 1/fan_in), gamma = 1, beta = 0, denoisers at identity.
// Each tensor draws from its own named sub-stream of `base`, so the presence
// of one tensor never shifts another tensor's draws.
LadderParams init_params(const Architecture& arch, GKind kind, bool top_only,
                         const Rng& base);

// Stable flattening of every trainable tensor into one vector. Order:
// encoder layers ascending (W, gamma, beta as present), then V ascending,
// then denoiser parameters by layer then index.
struct FlatEntry {
  std::string name;
  std::size_t offset = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t count() const { return rows * cols; }
};

struct FlatLayout {
  std::vector<FlatEntry> entries;
  std::size_t total = 0;
  const FlatEntry* find(std::string_view name) const;
};

FlatLayout flat_layout(const Architecture& arch, GKind kind, bool top_only);
std::vector<double> flatten(const LadderParams& params);
LadderParams unflatten(const Architecture& arch, GKind kind, bool top_only,
                       const std::vector<double>& flat);

}  // namespace ladder
