#pragma once

#include <opinex/common.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace opinex {

inline constexpr std::size_t kClassCount = 3;

/// One-vs-rest linear heads, one per polarity class. Row k of `values` is
/// [w_k0 .. w_k(d-1), b_k].
struct LinearWeights {
  std::size_t dim = 0;
  std::vector<double> values;

  LinearWeights() = default;
  explicit LinearWeights(std::size_t d) : dim(d), values(kClassCount * (d + 1), 0.0) {}

  std::size_t stride() const { return dim + 1; }
  double& weight(std::size_t k, std::size_t j) { return values[k * stride() + j]; }
  double weight(std::size_t k, std::size_t j) const { return values[k * stride() + j]; }
  double& bias(std::size_t k) { return values[k * stride() + dim]; }
  double bias(std::size_t k) const { return values[k * stride() + dim]; }

  /// w_k . x + b_k
  double margin(std::size_t k, std::span<const double> x) const;
};

/// Rows of (already standardized) features with their labels.
struct Batch {
  std::span<const std::vector<double>> features;
  std::span<const Polarity> labels;
};

/// Mean over rows of the summed per-head binary cross-entropy, plus
/// (l2 / 2) * ||w||^2 over weights (biases unregularized).
double loss(const LinearWeights& weights, const Batch& batch, double l2);

/// Exact gradient of loss(); same layout as LinearWeights::values.
std::vector<double> gradient(const LinearWeights& weights, const Batch& batch, double l2);

/// Per-component z-scoring fitted on the training set; constant components map to 0.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale; // 0 marks a constant component

  static Standardizer fit(std::span<const std::vector<double>> rows);
  std::vector<double> apply(std::span<const double> x) const;
};

struct TrainOptions {
  double learning_rate = 0.1;
  double l2 = 1e-4;
  int epochs = 500;
  std::uint64_t seed = 42;
};

struct Model {
  LinearWeights weights;
  Standardizer standardizer;
  std::array<bool, kClassCount> active{}; // classes present in training labels
  TrainOptions options;

  /// Per-head sigmoid probabilities on raw (unstandardized) features.
  std::array<double, kClassCount> scores(std::span<const double> x) const;
  /// Arg-max over active classes; ties go to the lower class index.
  Polarity predict(std::span<const double> x) const;

  std::string to_json() const;
  static Model from_json(std::string_view text);
};

/// Full-batch gradient descent from zero weights. Throws std::invalid_argument
/// on fewer than two distinct labels, ragged rows or non-finite values.
/// `loss_trace`, when given, receives the loss before each epoch and after the last.
Model train(std::span<const std::vector<double>> features, std::span<const Polarity> labels,
            const TrainOptions& options, std::vector<double>* loss_trace = nullptr);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t support = 0;
};

struct Metrics {
  std::int64_t items = 0;
  double accuracy = 0.0;
  std::array<ClassMetrics, kClassCount> per_class{};
  std::array<std::array<std::int64_t, kClassCount>, kClassCount> confusion{}; // [gold][predicted]
};

Metrics score_predictions(std::span<const Polarity> gold, std::span<const Polarity> predicted);

} // namespace opinex
