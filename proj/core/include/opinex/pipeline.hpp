#pragma once

#include <opinex/classifier.hpp>
#include <opinex/corpus.hpp>
#include <opinex/emotion.hpp>
#include <opinex/features.hpp>
#include <opinex/lexdomain.hpp>
#include <opinex/transition.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace opinex {

enum class ClassMode { ThreeClass, Binary };
enum class DecodeMode { GoldPrevious, GreedyPrevious };

std::string_view to_string(ClassMode mode);
std::optional<ClassMode> parse_class_mode(std::string_view text); // "3class" | "binary"
std::string_view to_string(DecodeMode mode);
std::optional<DecodeMode> parse_decode_mode(std::string_view text); // "gold-prev" | "greedy-prev"

/// Binary mode drops NEU items.
bool is_scored(Polarity gold, ClassMode mode);

struct ExampleSet {
  std::vector<std::string> ids; // document id, or "<doc>#<index>"
  std::vector<std::vector<double>> rows;
  std::vector<Polarity> labels;
};

/// Training examples; sentence level uses gold previous labels.
ExampleSet build_examples(const FeatureResources& res, const Corpus& corpus, AnalysisLevel level,
                          ClassMode mode, int jobs = 1);

Model train_model(const FeatureResources& res, const Corpus& corpus, AnalysisLevel level,
                  ClassMode mode, const TrainOptions& options, int jobs = 1);

struct Evaluation {
  AnalysisLevel level = AnalysisLevel::Sentence;
  ClassMode mode = ClassMode::ThreeClass;
  DecodeMode decode = DecodeMode::GreedyPrevious;
  std::vector<std::string> ids;
  std::vector<Polarity> gold;
  std::vector<Polarity> predicted;
  Metrics metrics;
};

/// Greedy decoding runs sentence by sentence inside each document, feeding the
/// prediction for i into the previous-polarity feature of i+1. In binary mode
/// every sentence is decoded but only non-NEU gold items are scored.
Evaluation evaluate(const Model& model, const FeatureResources& res, const Corpus& corpus,
                    AnalysisLevel level, ClassMode mode, DecodeMode decode, int jobs = 1);

std::string metrics_json(const Evaluation& evaluation);

struct Split {
  Corpus train;
  Corpus test;
};

/// Per-label document split; each label contributes round(test_fraction * n)
/// documents to the test side. Both sides keep corpus order.
Split stratified_split(const Corpus& corpus, double test_fraction = 0.2, std::uint64_t seed = 42);

/// Feature matrix CSV: id,label,<64 feature names>[,seed.<extra name>...]
void write_feature_csv(std::ostream& out, const FeatureResources& res, const Corpus& corpus,
                       AnalysisLevel level, int jobs = 1);

struct ReportSelection {
  bool stats = true;
  bool transitions = true;
  bool emotions = true;
  bool domains = true;
  bool metrics = true;

  /// Comma list drawn from stats, transitions, emotions, domains, metrics.
  static ReportSelection parse(std::string_view list);
};

struct ReportOptions {
  ReportSelection only;
  TransitionMode transition_mode = TransitionMode::Joint;
  double alpha = 0.0;
  AnalysisLevel level = AnalysisLevel::Sentence;
  ClassMode mode = ClassMode::ThreeClass;
  DecodeMode decode = DecodeMode::GreedyPrevious;
  DomainGrouping grouping = DomainGrouping::Domain;
  TrainOptions train;
  double test_fraction = 0.2;
  int jobs = 1;
};

/// Writes the selected files into `out_dir` (created when missing). The corpus
/// must already carry WSD annotations. Throws DataError when a file cannot be written.
std::vector<std::filesystem::path> emit_report(const std::filesystem::path& out_dir,
                                               const FeatureResources& res, const Corpus& corpus,
                                               const ReportOptions& options);

/// Writes `text` to `path`, throwing DataError on failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace opinex
