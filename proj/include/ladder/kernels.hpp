#pragma once

#include <cstddef>

// Dense numeric kernels. Every kernel has a scalar reference implementation
// and, on x86-64 hosts with AVX2, a vectorized variant selected at runtime.
// The variants are bit-identical: the vector kernels keep each output
// element's accumulation order equal to the scalar reference and use
// separate multiply and add (no FMA), and the build disables FP contraction.
// Equivalence is enforced by tests, so either backend may serve any run.

namespace ladder::kernels {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
// Forces a backend (tests, benchmarking). Throws ConfigError if unsupported.
void set_backend(Backend b);
// Re-detects the best supported backend.
void reset_backend();

// c = a (m x k) times b (k x n); c is overwritten. Row-major, no aliasing.
void matmul(double* c, const double* a, const double* b,
            std::size_t m, std::size_t k, std::size_t n);

// Elementwise; out may alias inputs.
void add(double* out, const double* a, const double* b, std::size_t n);
void sub(double* out, const double* a, const double* b, std::size_t n);
void mul(double* out, const double* a, const double* b, std::size_t n);
void scale(double* out, const double* a, double s, std::size_t n);
void relu(double* out, const double* a, std::size_t n);
// out[i] = x[i] > 0 ? grad[i] : 0
void relu_mask_mul(double* out, const double* grad, const double* x, std::size_t n);

// out[j] = sum over rows of a[i,j]; a is rows x cols row-major.
void colwise_sum(double* out, const double* a, std::size_t rows, std::size_t cols);
// out[j] = sum over rows of (a[i,j] - mean[j])^2
void colwise_sq_dev_sum(double* out, const double* a, const double* mean,
                        std::size_t rows, std::size_t cols);

// Direct entry points for the equivalence tests.
namespace scalar_impl {
void matmul(double* c, const double* a, const double* b,
            std::size_t m, std::size_t k, std::size_t n);
void add(double* out, const double* a, const double* b, std::size_t n);
void sub(double* out, const double* a, const double* b, std::size_t n);
void mul(double* out, const double* a, const double* b, std::size_t n);
void scale(double* out, const double* a, double s, std::size_t n);
void relu(double* out, const double* a, std::size_t n);
void relu_mask_mul(double* out, const double* grad, const double* x, std::size_t n);
void colwise_sum(double* out, const double* a, std::size_t rows, std::size_t cols);
void colwise_sq_dev_sum(double* out, const double* a, const double* mean,
                        std::size_t rows, std::size_t cols);
}  // namespace scalar_impl

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2_impl {
void matmul(double* c, const double* a, const double* b,
            std::size_t m, std::size_t k, std::size_t n);
void add(double* out, const double* a, const double* b, std::size_t n);
void sub(double* out, const double* a, const double* b, std::size_t n);
void mul(double* out, const double* a, const double* b, std::size_t n);
void scale(double* out, const double* a, double s, std::size_t n);
void relu(double* out, const double* a, std::size_t n);
void relu_mask_mul(double* out, const double* grad, const double* x, std::size_t n);
void colwise_sum(double* out, const double* a, std::size_t rows, std::size_t cols);
void colwise_sq_dev_sum(double* out, const double* a, const double* mean,
                        std::size_t rows, std::size_t cols);
}  // namespace avx2_impl
#endif

}  // namespace ladder::kernels
