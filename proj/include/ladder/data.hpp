#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ladder/matrix.hpp"
#include "ladder/rng.hpp"

namespace ladder {

struct Dataset {
  Matrix x;                 // one sample per row
  std::vector<int> labels;  // per row; >= 0
  std::size_t num_classes = 0;

  std::size_t size() const { return x.rows(); }
};

// Labeled/unlabeled/validation row indices; pairwise disjoint. Labeled rows
// still feed the unsupervised term, because every training batch is the
// concatenation of a labeled and an unlabeled part.
struct SplitIndices {
  std::vector<std::size_t> labeled;
  std::vector<std::size_t> unlabeled;
  std::vector<std::size_t> validation;
};

// IDX container: 0x00 0x00, type byte 0x08 (unsigned byte), dimension
// count, big-endian u32 dimension sizes, then the payload.
struct IdxData {
  std::vector<std::size_t> dims;
  std::vector<std::uint8_t> payload;
};

IdxData parse_idx(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> serialize_idx(const IdxData& data);
std::vector<std::uint8_t> read_file_bytes(const std::string& path);

// Images (n x h x w) joined with labels (n); pixels scaled to [0, 1].
Dataset load_mnist(const std::string& images_path, const std::string& labels_path);

// `count` rows drawn from `pool` without replacement, the same number from
// every class; count must divide evenly by num_classes and every class must
// have enough rows in the pool.
std::vector<std::size_t> balanced_subset(const std::vector<int>& labels,
                                         const std::vector<std::size_t>& pool,
                                         std::size_t count, std::size_t num_classes,
                                         Rng& rng);

// Shuffles all rows, takes `validation_size` for validation, draws a
// balanced labeled subset of the rest (labeled_count = 0 keeps every
// remaining row labeled), and leaves the remainder unlabeled.
// validation_size + labeled_count must not exceed the dataset.
SplitIndices make_split(const Dataset& data, std::size_t validation_size,
                        std::size_t labeled_count, Rng& rng);

struct Batch {
  std::vector<std::size_t> rows;  // labeled rows first
  std::vector<int> targets;       // -1 on the unlabeled tail
  std::size_t labeled_count = 0;
};

// Deterministic batch sequence. Each epoch partitions the unlabeled pool in
// fresh shuffled order (every index exactly once, final batch possibly
// short); the labeled part cycles through reshuffled labeled indices across
// batches and epochs. batch_labeled must not exceed the labeled count. With
// batch_unlabeled = 0 the labeled set is partitioned instead and any
// unlabeled rows are ignored (supervised runs and baselines).
class BatchPlan {
 public:
  BatchPlan(const Dataset& data, const SplitIndices& split, std::size_t batch_labeled,
            std::size_t batch_unlabeled, Rng shuffle_rng);

  std::vector<Batch> next_epoch();
  std::size_t batches_per_epoch() const;

 private:
  std::size_t next_labeled();

  const std::vector<int>* labels_;
  std::vector<std::size_t> labeled_;
  std::vector<std::size_t> unlabeled_;
  std::size_t batch_labeled_;
  std::size_t batch_unlabeled_;
  Rng rng_;
  std::size_t labeled_cursor_ = 0;
};

Matrix gather_rows(const Matrix& x, const std::vector<std::size_t>& rows);
std::vector<int> gather_labels(const std::vector<int>& labels,
                               const std::vector<std::size_t>& rows);

// Gaussian blobs: per_class draws around each mean with isotropic
// within-class std. Rows are ordered mean 0 first; splitting shuffles.
// By default each mean is its own class. A nonempty class_of maps mean
// index -> class label so one class can own several mixture components
// (curved or multi-modal class shapes); every class in 0..max must own
// at least one mean. A nonempty per_component_std overrides within_std
// with one isotropic std per mean (heterogeneous component scales).
Dataset synth_mixture(std::size_t per_class, const std::vector<std::vector<double>>& means,
                      double within_std, Rng& rng, const std::vector<int>& class_of = {},
                      const std::vector<double>& per_component_std = {});

}  // namespace ladder
