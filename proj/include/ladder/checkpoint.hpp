#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ladder/batchnorm.hpp"
#include "ladder/matrix.hpp"
#include "ladder/model.hpp"
#include "ladder/training.hpp"

namespace ladder {

// Everything a run needs to report or evaluate later: model shape, the flat
// parameter vector, optimizer state, evaluation statistics, and the exact
// configuration text the run was started with. Stored as a versioned text
// file with values printed in full precision, so load(save(x)) == x.
struct Checkpoint {
  std::size_t epoch = 0;  // completed epochs
  Architecture arch;
  GKind kind = GKind::proposed;
  bool top_only = false;
  std::vector<std::string> config_lines;
  std::vector<double> flat;
  AdamState adam;
  struct StatsEntry {
    Matrix mean;
    Matrix std;
    std::size_t count = 0;
  };
  std::vector<StatsEntry> stats;  // layer 1..L
};

// Writes to a temporary file in the same directory, then renames over the
// target, so an interrupted save never corrupts the previous checkpoint.
void save_checkpoint(const std::string& path, const Checkpoint& cp);
Checkpoint load_checkpoint(const std::string& path);

LadderParams checkpoint_params(const Checkpoint& cp);
std::vector<RunningStats> checkpoint_running_stats(const Checkpoint& cp, double decay);

}  // namespace ladder
