#pragma once

#include <cstddef>
#include <vector>

#include "ladder/matrix.hpp"
#include "ladder/model.hpp"
#include "ladder/rng.hpp"

namespace ladder {

// One-dimensional latent prior: a Gaussian mixture (a single component is
// the plain Gaussian case). Weights are nonnegative and sum to 1 within
// 1e-12; component stds are nonnegative.
struct MixtureComponent {
  double weight = 1.0;
  double mean = 0.0;
  double std = 1.0;
};

struct Prior1D {
  std::vector<MixtureComponent> components;

  static Prior1D gaussian(double mean, double std);
  static Prior1D mixture(std::vector<MixtureComponent> components);

  void validate() const;

  struct Draw {
    double z = 0.0;
    std::size_t component = 0;
  };
  Draw draw(Rng& rng) const;
  double sample(Rng& rng) const { return draw(rng).z; }
};

// MSE-optimal reconstruction of z from z_tilde = z + noise for a Gaussian
// prior: (z_tilde - mean) * v + mean with v = prior_var / (prior_var +
// noise_var). prior_std and noise_std must not both be zero.
double posterior_mean_gaussian(double z_tilde, double prior_mean, double prior_std,
                               double noise_std);

// Exact posterior mean for a mixture prior under additive Gaussian noise
// (noise_std > 0): responsibilities under each component convolved with the
// noise, combining the component-wise posterior means.
double posterior_mean_mixture(double z_tilde, const Prior1D& prior, double noise_std);

// Trapezoid evaluation of E[z | z_tilde] on [lo, hi]; the brute-force
// reference the closed form is tested against.
double posterior_mean_quadrature(double z_tilde, const Prior1D& prior, double noise_std,
                                 double lo, double hi, std::size_t points);

// Best affine denoiser fitted to sampled (z, z_tilde) pairs by least
// squares, reported as zhat = (z_tilde - center) * slope + center. Needs at
// least 10^4 samples.
struct LinearDenoiser {
  double slope = 0.0;
  double center = 0.0;
};
LinearDenoiser empirical_best_linear(const Prior1D& prior, double noise_std,
                                     std::size_t samples, Rng& rng);

// What the denoiser unit is told about the latent value, besides z_tilde
// itself: a fixed constant, or the mean of the mixture component the sample
// was actually drawn from (stand-in for an informative layer above).
enum class USource { constant, component_mean };

struct GFitResult {
  std::vector<Matrix> params;  // per-unit parameters, each 1 x 1
  double achieved_mse = 0.0;   // fitted unit on a fresh evaluation sample
  double oracle_mse = 0.0;     // posterior mean (given z_tilde) on the same sample
};

// Fits one denoiser unit to minimize reconstruction MSE by full-batch Adam
// from the pass-through initialization.
GFitResult fit_g_to_oracle(GKind kind, const Prior1D& prior, double noise_std,
                           USource u_source, double u_constant, std::size_t steps,
                           Rng& rng);

}  // namespace ladder
