#pragma once

#include <opinex/corpus.hpp>
#include <opinex/stopwords.hpp>
#include <opinex/wordnet.hpp>

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace opinex {

enum class Emotion : std::uint8_t { Anger, Disgust, Fear, Joy, Sadness, Surprise };

inline constexpr std::size_t kEmotionCount = 6;

/// Lowercase names in vector order: anger, disgust, fear, joy, sadness, surprise.
const std::array<std::string_view, kEmotionCount>& emotion_names();

struct EmotionVector {
  std::array<double, kEmotionCount> scores{};

  double operator[](Emotion e) const { return scores[static_cast<std::size_t>(e)]; }
};

struct Seed {
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::Noun;
};

/// Named seed words resolved against a WordNet.
struct SeedSet {
  std::string name;
  std::vector<Seed> seeds;
  std::vector<SynsetId> synsets; // every sense of every seed

  /// Throws DataError when a seed has no synset or the list is empty.
  static SeedSet resolve(const WordNetDb& db, std::string name, std::vector<Seed> seeds);
};

/// The six emotion seed sets in vector order, plus any extra named sets
/// (e.g. "good") that enter reports as auxiliary seed scores.
struct SeedConfig {
  std::vector<SeedSet> emotions;
  std::vector<SeedSet> extra;
};

/// Single-noun seeds {anger, ..., surprise} and the "good" noun seed.
SeedConfig default_seed_config(const WordNetDb& db);

/// Parses {"seedsets": [{"name": ..., "seeds": [{"lemma": ..., "pos": ...}]}]}.
/// All six emotion names must be present (case-insensitive); others are extras.
SeedConfig load_seed_config(const std::filesystem::path& path, const WordNetDb& db);
SeedConfig parse_seed_config(std::string_view json_text, const WordNetDb& db);

struct EmotionOptions {
  SimilarityMeasure measure = SimilarityMeasure::WuPalmer;
  bool use_wsd_sense = false; // restrict to the token's chosen sense when one is set
};

/// True for non-stopword tokens holding at least one noun or verb sense.
bool is_emotion_content_token(const WordNetDb& db, const Token& token, const Stopwords& stopwords);

/// Max same-pos similarity over (token senses x seed synsets); 0 without noun/verb senses.
double seed_similarity(const WordNetDb& db, const Token& token, const SeedSet& seeds,
                       const EmotionOptions& options = {});

/// Mean seed similarity over content tokens.
double sentence_seed_score(const WordNetDb& db, const Sentence& sentence, const SeedSet& seeds,
                           const Stopwords& stopwords, const EmotionOptions& options = {});

EmotionVector sentence_emotions(const WordNetDb& db, const Sentence& sentence,
                                std::span<const SeedSet> emotions, const Stopwords& stopwords,
                                const EmotionOptions& options = {});

/// Mean of the sentence vectors.
EmotionVector document_emotions(const WordNetDb& db, const Document& document,
                                std::span<const SeedSet> emotions, const Stopwords& stopwords,
                                const EmotionOptions& options = {});

enum class AnalysisLevel { Sentence, Document };

std::string_view to_string(AnalysisLevel level);
std::optional<AnalysisLevel> parse_analysis_level(std::string_view text);

struct EmotionRow {
  std::string id; // document id, or "<doc>#<index>" at sentence level
  Polarity label = Polarity::Neu;
  EmotionVector vector;
};

struct EmotionReport {
  AnalysisLevel level = AnalysisLevel::Document;
  std::vector<EmotionRow> rows; // corpus order
};

EmotionReport emotion_distribution_report(const WordNetDb& db, const Corpus& corpus,
                                          std::span<const SeedSet> emotions,
                                          const Stopwords& stopwords, AnalysisLevel level,
                                          const EmotionOptions& options = {}, int jobs = 1);

/// counts[emotion][polarity][bin] over [0, 1]; a score of 1 lands in the last bin.
struct EmotionHistogram {
  std::size_t bins = 20;
  std::array<std::array<std::vector<std::int64_t>, 3>, kEmotionCount> counts;
};

EmotionHistogram emotion_histogram(const EmotionReport& report, std::size_t bins = 20);

/// Header: level,id,class,anger,disgust,fear,joy,sadness,surprise
void write_emotion_csv(std::ostream& out, const EmotionReport& report);
/// Header: emotion,class,bin,lower,upper,count
void write_emotion_histogram_csv(std::ostream& out, const EmotionHistogram& histogram);

} // namespace opinex
