#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ladder/data.hpp"
#include "ladder/model.hpp"
#include "ladder/rng.hpp"
#include "ladder/training.hpp"

namespace ladder {

// Flat key=value run description. parse/serialize round-trip exactly;
// unknown and duplicate keys are rejected with their line number.
struct RunConfig {
  // model
  std::vector<std::size_t> layers;
  GKind g_kind = GKind::proposed;
  bool gamma_model = false;
  std::vector<double> lambda;
  std::vector<double> noise_std;  // single value broadcasts to every layer
  UTopMode u_top_mode = UTopMode::batchnorm;
  // protocol
  double learning_rate = 0.002;
  std::size_t main_epochs = 100;
  std::size_t anneal_epochs = 50;
  std::size_t batch_labeled = 100;
  std::size_t batch_unlabeled = 100;
  std::uint64_t seed = 1;
  std::size_t repeats = 1;
  double eval_stats_decay = 0.99;
  EvalStatsMode eval_stats_mode = EvalStatsMode::running;
  // data
  std::string dataset;  // "mnist" or "synth"
  std::string mnist_images;
  std::string mnist_labels;
  std::string mnist_test_images;
  std::string mnist_test_labels;
  std::size_t val_size = 10000;
  std::size_t n_labels = 100;          // 0 = keep every training row labeled
  std::size_t unlabeled_subset = 0;    // 0 = use the whole unlabeled pool
  std::size_t synth_per_class = 500;
  std::size_t synth_test_per_class = 500;
  double synth_std = 1.0;
  std::vector<std::vector<double>> synth_means;  // one vector per component
  std::vector<int> synth_classes;  // component -> class; empty means one class per component
  std::vector<double> synth_stds;  // per-component std; empty means synth_std everywhere
  // output
  std::string out_dir = "runs/out";

  bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Canonical form: every key once, fixed order, full-precision numbers.
std::string serialize_config(const RunConfig& config);

// Structural checks beyond parsing (layer count vs lambda length, dataset
// choice, ranges). parse_config_* call this before returning.
void validate_config(const RunConfig& config);

// The training-facing slice of the config, with noise_std broadcast.
TrainSetup to_train_setup(const RunConfig& config, std::uint64_t seed);

struct PreparedData {
  Dataset train;
  SplitIndices split;
  Dataset test;  // empty when the config names none
  bool has_test = false;
};

// Loads or synthesizes the dataset and draws the split, using streams of
// `base` so repeats with different seeds get independent splits.
PreparedData prepare_data(const RunConfig& config, const Rng& base);

}  // namespace ladder
