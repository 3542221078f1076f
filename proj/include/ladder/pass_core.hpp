#pragma once

// Shared construction of the clean pass, corrupted pass, and denoising
// decoder, templated over an operation provider. MatrixOps evaluates
// directly; TapeOps records the same structure on a Tape for the reverse
// pass. Both providers call the same underlying routines, so their forward
// values are bit-identical.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ladder/batchnorm.hpp"
#include "ladder/matrix.hpp"
#include "ladder/model.hpp"
#include "ladder/numerics.hpp"
#include "ladder/tape.hpp"

namespace ladder {

struct MatrixOps {
  using Ref = Matrix;
  const Matrix& val(const Ref& r) const { return r; }
  Ref constant(Matrix m) const { return m; }
  Ref matmul(const Ref& a, const Ref& b) const { return ladder::matmul(a, b); }
  Ref add(const Ref& a, const Ref& b) const { return ladder::add(a, b); }
  Ref sub(const Ref& a, const Ref& b) const { return ladder::sub(a, b); }
  Ref hadamard(const Ref& a, const Ref& b) const { return ladder::hadamard(a, b); }
  Ref relu(const Ref& a) const { return ladder::relu(a); }
  Ref sigmoid(const Ref& a) const { return ladder::sigmoid(a); }
  Ref softmax_rows(const Ref& a) const { return ladder::softmax_rows(a); }
  Ref add_rowvec(const Ref& a, const Ref& v) const { return ladder::add_rowvec(a, v); }
  Ref sub_rowvec(const Ref& a, const Ref& v) const { return ladder::sub_rowvec(a, v); }
  Ref mul_rowvec(const Ref& a, const Ref& v) const { return ladder::mul_rowvec(a, v); }
  Ref div_rowvec(const Ref& a, const Ref& v) const { return ladder::div_rowvec(a, v); }
  Ref col_mean(const Ref& a) const { return ladder::column_mean(a); }
  Ref col_std(const Ref& a, double eps) const {
    return ladder::column_std(a, eps, ladder::column_mean(a));
  }
};

struct TapeOps {
  using Ref = Tape::NodeId;
  Tape* tape;
  const Matrix& val(Ref r) const { return tape->value(r); }
  Ref constant(Matrix m) const { return tape->input(std::move(m), false); }
  Ref matmul(Ref a, Ref b) const { return tape->matmul(a, b); }
  Ref add(Ref a, Ref b) const { return tape->add(a, b); }
  Ref sub(Ref a, Ref b) const { return tape->sub(a, b); }
  Ref hadamard(Ref a, Ref b) const { return tape->hadamard(a, b); }
  Ref relu(Ref a) const { return tape->relu(a); }
  Ref sigmoid(Ref a) const { return tape->sigmoid(a); }
  Ref softmax_rows(Ref a) const { return tape->softmax_rows(a); }
  Ref add_rowvec(Ref a, Ref v) const { return tape->add_rowvec(a, v); }
  Ref sub_rowvec(Ref a, Ref v) const { return tape->sub_rowvec(a, v); }
  Ref mul_rowvec(Ref a, Ref v) const { return tape->mul_rowvec(a, v); }
  Ref div_rowvec(Ref a, Ref v) const { return tape->div_rowvec(a, v); }
  Ref col_mean(Ref a) const { return tape->col_mean(a); }
  Ref col_std(Ref a, double eps) const { return tape->col_std(a, eps); }
};

template <typename Ref>
struct EncoderRefsT {
  std::vector<Ref> W;
  std::vector<std::optional<Ref>> gamma;
  std::vector<std::optional<Ref>> beta;
};

template <typename Ref>
struct DecoderRefsT {
  GKind kind = GKind::proposed;
  bool top_only = false;
  std::vector<Ref> V;
  std::vector<std::vector<Ref>> g;
};

// Index l runs 0..L. For z_pre/mean/std the slot at l = 0 aliases the input
// and carries no meaning; z[0] and h[0] are the input itself.
template <typename Ref>
struct CleanTraceT {
  std::vector<Ref> z_pre;
  std::vector<Ref> mean;
  std::vector<Ref> std;
  std::vector<Ref> z;
  std::vector<Ref> h;
};

template <typename Ref>
struct CorruptedTraceT {
  std::vector<Ref> z_tilde;   // [0] is the corrupted input
  std::vector<Ref> h_tilde;
  Ref y_tilde;                // h_tilde[L]
  std::vector<Matrix> noise;  // the draws actually added, layer 0..L
};

// Valid entries run lowest_layer..L; below that (top-only decoder) the slots
// hold default-constructed refs.
template <typename Ref>
struct DecoderTraceT {
  std::vector<Ref> u;
  std::vector<Ref> z_hat;
  std::vector<Ref> z_hat_bn;
  std::size_t lowest_layer = 0;
};

namespace pass_detail {

template <typename Ops>
typename Ops::Ref activation_output(Ops& ops, const Architecture& arch, std::size_t l,
                                    const EncoderRefsT<typename Ops::Ref>& enc,
                                    typename Ops::Ref z) {
  typename Ops::Ref pre = z;
  if (arch.uses_beta(l)) pre = ops.add_rowvec(pre, *enc.beta[l - 1]);
  if (arch.uses_gamma(l)) pre = ops.mul_rowvec(pre, *enc.gamma[l - 1]);
  switch (arch.activation(l)) {
    case ActivationKind::linear: return pre;
    case ActivationKind::relu: return ops.relu(pre);
    case ActivationKind::softmax: return ops.softmax_rows(pre);
  }
  throw std::logic_error("activation_output: unknown activation");
}

template <typename Ops>
typename Ops::Ref batchnorm_ref(Ops& ops, typename Ops::Ref a) {
  const typename Ops::Ref mean = ops.col_mean(a);
  const typename Ops::Ref sd = ops.col_std(a, kVarianceEpsilon);
  return ops.div_rowvec(ops.sub_rowvec(a, mean), sd);
}

}  // namespace pass_detail

template <typename Ops>
CleanTraceT<typename Ops::Ref> build_clean_pass(Ops& ops, const Architecture& arch,
                                                const EncoderRefsT<typename Ops::Ref>& enc,
                                                typename Ops::Ref x) {
  using Ref = typename Ops::Ref;
  const std::size_t depth = arch.depth();
  CleanTraceT<Ref> t;
  t.z_pre.assign(depth + 1, x);
  t.mean.assign(depth + 1, x);
  t.std.assign(depth + 1, x);
  t.z.assign(depth + 1, x);
  t.h.assign(depth + 1, x);
  for (std::size_t l = 1; l <= depth; ++l) {
    t.z_pre[l] = ops.matmul(t.h[l - 1], enc.W[l - 1]);
    t.mean[l] = ops.col_mean(t.z_pre[l]);
    t.std[l] = ops.col_std(t.z_pre[l], kVarianceEpsilon);
    t.z[l] = ops.div_rowvec(ops.sub_rowvec(t.z_pre[l], t.mean[l]), t.std[l]);
    t.h[l] = pass_detail::activation_output(ops, arch, l, enc, t.z[l]);
  }
  return t;
}

// `noise` holds the pre-drawn additive draws for layers 0..L (already scaled
// by the layer's noise std).
template <typename Ops>
CorruptedTraceT<typename Ops::Ref> build_corrupted_pass(
    Ops& ops, const Architecture& arch, const EncoderRefsT<typename Ops::Ref>& enc,
    typename Ops::Ref x, std::vector<Matrix> noise) {
  using Ref = typename Ops::Ref;
  const std::size_t depth = arch.depth();
  if (noise.size() != depth + 1) {
    throw std::invalid_argument("build_corrupted_pass: need one noise matrix per layer 0..L");
  }
  CorruptedTraceT<Ref> t;
  const Ref corrupted_input = ops.add(x, ops.constant(noise[0]));
  t.z_tilde.assign(depth + 1, corrupted_input);
  t.h_tilde.assign(depth + 1, corrupted_input);
  for (std::size_t l = 1; l <= depth; ++l) {
    const Ref z_pre = ops.matmul(t.h_tilde[l - 1], enc.W[l - 1]);
    const Ref bn = pass_detail::batchnorm_ref(ops, z_pre);
    t.z_tilde[l] = ops.add(bn, ops.constant(noise[l]));
    t.h_tilde[l] = pass_detail::activation_output(ops, arch, l, enc, t.z_tilde[l]);
  }
  t.y_tilde = t.h_tilde[depth];
  t.noise = std::move(noise);
  return t;
}

// One denoiser unit family applied to a whole layer; p holds the per-unit
// parameter row vectors in the order documented next to GKind.
template <typename Ops>
typename Ops::Ref build_g(Ops& ops, GKind kind, const std::vector<typename Ops::Ref>& p,
                          typename Ops::Ref zt, typename Ops::Ref u) {
  using Ref = typename Ops::Ref;
  if (p.size() != g_param_count(kind)) {
    throw std::invalid_argument("build_g: wrong parameter count for this kind");
  }
  switch (kind) {
    case GKind::proposed: {
      const Ref mu_sig = ops.sigmoid(ops.add_rowvec(ops.mul_rowvec(u, p[1]), p[2]));
      const Ref mu = ops.add_rowvec(
          ops.add(ops.mul_rowvec(mu_sig, p[0]), ops.mul_rowvec(u, p[3])), p[4]);
      const Ref nu_sig = ops.sigmoid(ops.add_rowvec(ops.mul_rowvec(u, p[6]), p[7]));
      const Ref nu = ops.add_rowvec(
          ops.add(ops.mul_rowvec(nu_sig, p[5]), ops.mul_rowvec(u, p[8])), p[9]);
      return ops.add(ops.hadamard(ops.sub(zt, mu), nu), mu);
    }
    case GKind::mini_mlp: {
      const Ref ztu = ops.hadamard(zt, u);
      const Ref lin = ops.add_rowvec(
          ops.add(ops.add(ops.mul_rowvec(zt, p[1]), ops.mul_rowvec(u, p[2])),
                  ops.mul_rowvec(ztu, p[3])),
          p[0]);
      const Ref arg = ops.add_rowvec(
          ops.add(ops.add(ops.mul_rowvec(zt, p[6]), ops.mul_rowvec(u, p[7])),
                  ops.mul_rowvec(ztu, p[8])),
          p[5]);
      return ops.add(lin, ops.mul_rowvec(ops.sigmoid(arg), p[4]));
    }
    case GKind::no_augmented: {
      const Ref lin = ops.add_rowvec(
          ops.add(ops.mul_rowvec(zt, p[1]), ops.mul_rowvec(u, p[2])), p[0]);
      const Ref arg = ops.add_rowvec(
          ops.add(ops.mul_rowvec(zt, p[5]), ops.mul_rowvec(u, p[6])), p[4]);
      return ops.add(lin, ops.mul_rowvec(ops.sigmoid(arg), p[3]));
    }
    case GKind::linear: {
      const Ref ztu = ops.hadamard(zt, u);
      return ops.add_rowvec(
          ops.add(ops.add(ops.mul_rowvec(zt, p[1]), ops.mul_rowvec(u, p[2])),
                  ops.mul_rowvec(ztu, p[3])),
          p[0]);
    }
    case GKind::additive_u: {
      const Ref su = ops.sigmoid(ops.add_rowvec(ops.mul_rowvec(u, p[2]), p[3]));
      const Ref sz = ops.sigmoid(ops.add_rowvec(ops.mul_rowvec(zt, p[6]), p[7]));
      return ops.add_rowvec(
          ops.add(ops.add(ops.add(ops.mul_rowvec(u, p[0]), ops.mul_rowvec(su, p[1])),
                          ops.mul_rowvec(zt, p[4])),
                  ops.mul_rowvec(sz, p[5])),
          p[8]);
    }
  }
  throw std::logic_error("build_g: unknown kind");
}

template <typename Ops>
DecoderTraceT<typename Ops::Ref> build_decoder_pass(
    Ops& ops, const Architecture& arch, const DecoderRefsT<typename Ops::Ref>& dec,
    const CorruptedTraceT<typename Ops::Ref>& corrupted,
    const CleanTraceT<typename Ops::Ref>& clean, UTopMode u_top) {
  using Ref = typename Ops::Ref;
  const std::size_t depth = arch.depth();
  DecoderTraceT<Ref> t;
  t.u.resize(depth + 1);
  t.z_hat.resize(depth + 1);
  t.z_hat_bn.resize(depth + 1);
  t.lowest_layer = dec.top_only ? depth : 0;
  for (std::size_t l = depth + 1; l-- > t.lowest_layer;) {
    if (l == depth) {
      t.u[l] = u_top == UTopMode::batchnorm
                   ? pass_detail::batchnorm_ref(ops, corrupted.h_tilde[depth])
                   : corrupted.h_tilde[depth];
    } else {
      t.u[l] = pass_detail::batchnorm_ref(ops, ops.matmul(t.z_hat[l + 1], dec.V[l]));
    }
    t.z_hat[l] = build_g(ops, dec.kind, dec.g[l], corrupted.z_tilde[l], t.u[l]);
    t.z_hat_bn[l] = l >= 1 ? ops.div_rowvec(ops.sub_rowvec(t.z_hat[l], clean.mean[l]),
                                            clean.std[l])
                           : t.z_hat[l];
  }
  return t;
}

}  // namespace ladder
