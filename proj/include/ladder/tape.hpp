#pragma once

#include <cstddef>
#include <vector>

#include "ladder/matrix.hpp"
#include "ladder/numerics.hpp"

namespace ladder {

// Recorded-operation reverse pass over Matrix values. A forward computation
// is built op by op; backward() then accumulates adjoints from a scalar root
// in reverse recording order. Sub-graphs that do not influence the root (and
// operands flagged as not requiring gradients) are skipped, so their
// adjoints stay exactly absent rather than numerically zero.
//
// Every op's forward arithmetic matches the plain Matrix routines in
// numerics.hpp / batchnorm.hpp operation for operation, so a tape forward is
// bit-identical to the plain composition.
class Tape {
 public:
  using NodeId = std::size_t;

  // Leaf holding a value. requires_grad marks parameters; constants (data,
  // noise) never accumulate adjoints.
  NodeId input(Matrix value, bool requires_grad);

  NodeId matmul(NodeId a, NodeId b);
  NodeId add(NodeId a, NodeId b);
  NodeId sub(NodeId a, NodeId b);
  NodeId hadamard(NodeId a, NodeId b);
  NodeId scale(NodeId a, double s);
  NodeId relu(NodeId a);
  NodeId sigmoid(NodeId a);
  NodeId softmax_rows(NodeId a);
  NodeId add_rowvec(NodeId a, NodeId v);
  NodeId sub_rowvec(NodeId a, NodeId v);
  NodeId mul_rowvec(NodeId a, NodeId v);
  NodeId div_rowvec(NodeId a, NodeId v);
  // Per-column mean over rows; result 1 x cols.
  NodeId col_mean(NodeId a);
  // Per-column sqrt(biased variance + eps); result 1 x cols.
  NodeId col_std(NodeId a, double eps);
  // 1x1 sum of squared entries.
  NodeId sum_squares(NodeId a);
  // 1x1 mean negative log picked probability over rows with target >= 0,
  // probabilities floored at 1e-15; exactly 0 when no row is labeled.
  NodeId nll_masked(NodeId probs, std::vector<int> targets);

  const Matrix& value(NodeId id) const;
  std::size_t node_count() const { return nodes_.size(); }

  // Reverse pass from a 1x1 root. May be called once per tape.
  void backward(NodeId root);

  bool has_adjoint(NodeId id) const;
  // Adjoint, or zeros of the node's shape if the node was never reached.
  Matrix adjoint_or_zero(NodeId id) const;

  static constexpr double kLogFloor = kLogProbFloor;

 private:
  enum class Op {
    input,
    matmul,
    add,
    sub,
    hadamard,
    scale,
    relu,
    sigmoid,
    softmax_rows,
    add_rowvec,
    sub_rowvec,
    mul_rowvec,
    div_rowvec,
    col_mean,
    col_std,
    sum_squares,
    nll_masked,
  };

  struct Node {
    Op op;
    NodeId x = 0;
    NodeId y = 0;
    double scalar = 0.0;       // scale factor or eps
    Matrix value;
    Matrix aux;                // col_std: the column means
    std::vector<int> targets;  // nll_masked only
    bool needs_grad = false;
  };

  NodeId push(Node node);
  void accumulate(NodeId id, Matrix delta);
  void check(NodeId id, const char* op) const;
  void backward_node(NodeId id);

  std::vector<Node> nodes_;
  std::vector<Matrix> adjoints_;
  bool backward_done_ = false;
};

}  // namespace ladder
