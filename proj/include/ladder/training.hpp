#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ladder/batchnorm.hpp"
#include "ladder/data.hpp"
#include "ladder/matrix.hpp"
#include "ladder/model.hpp"
#include "ladder/objective.hpp"
#include "ladder/pass_core.hpp"
#include "ladder/rng.hpp"
#include "ladder/tape.hpp"

namespace ladder {

// How evaluation normalizes layer inputs: running averages collected during
// training (works for any batch size) or the evaluation batch's own
// statistics (needs at least 2 rows).
enum class EvalStatsMode { running, batch };
const char* eval_stats_mode_name(EvalStatsMode m);

struct ForwardOptions {
  std::vector<double> lambda;     // per-layer reconstruction weight, 0..L
  std::vector<double> noise_std;  // per-layer corruption std, 0..L
  UTopMode u_top = UTopMode::batchnorm;
};

// One training step's recorded computation. `leaves` aligns with
// layout.entries, so leaf adjoints assemble directly into a flat gradient.
struct ForwardResult {
  Tape tape;
  FlatLayout layout;
  std::vector<Tape::NodeId> leaves;
  CleanTraceT<Tape::NodeId> clean;
  CorruptedTraceT<Tape::NodeId> corrupted;
  DecoderTraceT<Tape::NodeId> decoder;
  Tape::NodeId cost_id = 0;
  CostBreakdown cost;

  const Matrix& value(Tape::NodeId id) const { return tape.value(id); }
};

ForwardResult forward_cost(const LadderParams& params, const Matrix& x,
                           const std::vector<int>& targets, const ForwardOptions& opts,
                           Rng& noise_rng);
// Replays explicit noise (gradient checks, step replays).
ForwardResult forward_cost_frozen(const LadderParams& params, const Matrix& x,
                                  const std::vector<int>& targets,
                                  const ForwardOptions& opts, std::vector<Matrix> noise);

// Runs the reverse pass (once per result) and returns d cost / d params in
// flat layout order.
std::vector<double> cost_gradient(ForwardResult& fr);

inline constexpr double kAdamBeta1 = 0.9;
inline constexpr double kAdamBeta2 = 0.999;
inline constexpr double kAdamEpsilon = 1e-8;

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::uint64_t t = 0;
};

void adam_step(std::vector<double>& params, AdamState& state,
               const std::vector<double>& grad, double lr);

// Constant at base_lr for main_epochs, then decaying linearly so the rate
// would reach zero one epoch past the end.
double lr_schedule(std::size_t epoch, double base_lr, std::size_t main_epochs,
                   std::size_t anneal_epochs);

struct MetricsRecord {
  std::size_t epoch = 0;
  double lr = 0.0;
  double cost_supervised = 0.0;       // epoch mean over steps
  std::vector<double> cost_denoise;   // epoch means, layer 0..L
  double train_err = 0.0;             // on the labeled rows; nan when none
  double val_err = 0.0;               // on the validation rows; nan when none
};

// Shortest decimal form that round-trips a double exactly.
std::string format_g17(double v);
std::string format_metrics_line(const MetricsRecord& rec);

struct TrainSetup {
  Architecture arch;
  GKind g_kind = GKind::proposed;
  // Keep only the top-layer denoiser (no V projections, no lower g). The
  // reconstruction weights below the top must then be zero.
  bool gamma_model = false;
  std::vector<double> lambda;
  std::vector<double> noise_std;
  UTopMode u_top_mode = UTopMode::batchnorm;
  double learning_rate = 0.002;
  std::size_t main_epochs = 100;
  std::size_t anneal_epochs = 50;
  std::size_t batch_labeled = 100;
  std::size_t batch_unlabeled = 100;
  double eval_stats_decay = 0.99;
  EvalStatsMode eval_stats_mode = EvalStatsMode::running;
  std::uint64_t seed = 1;
};

// Live view handed to the per-epoch hook, for checkpointing and logging.
struct TrainState {
  const std::vector<double>& flat;
  const FlatLayout& layout;
  const std::vector<RunningStats>& eval_stats;
  const AdamState& adam;
  std::size_t completed_epochs;
};
using EpochHook = std::function<void(const MetricsRecord&, const TrainState&)>;

struct TrainResult {
  LadderParams params;
  std::vector<double> flat;
  FlatLayout layout;
  std::vector<RunningStats> eval_stats;  // layer 1..L
  AdamState adam;
  std::vector<MetricsRecord> metrics;
};

TrainResult train(const TrainSetup& setup, const Dataset& data, const SplitIndices& split,
                  const EpochHook& hook = {});

// Predicted class per row, evaluating in bounded chunks (batch mode never
// normalizes a single-row remainder on its own).
std::vector<int> predict_dataset(const Architecture& arch, const EncoderParams& enc,
                                 const Matrix& x, EvalStatsMode mode,
                                 const std::vector<RunningStats>& stats);

// Fraction of rows whose predicted class differs from the label; labels must
// sit in [0, output width).
double error_rate(const Architecture& arch, const EncoderParams& enc, const Matrix& x,
                  const std::vector<int>& labels, EvalStatsMode mode,
                  const std::vector<RunningStats>& stats);

}  // namespace ladder
