#pragma once

#include <opinex/corpus.hpp>
#include <opinex/emotion.hpp>
#include <opinex/lexicons.hpp>
#include <opinex/metachar.hpp>
#include <opinex/stopwords.hpp>
#include <opinex/transition.hpp>
#include <opinex/wordnet.hpp>

#include <array>
#include <string>
#include <vector>

namespace opinex {

inline constexpr std::size_t kFeatureCount = 64;
/// Layout version; bump whenever offsets or group widths change.
inline constexpr int kFeatureLayoutVersion = 1;

/// Offsets of each feature group inside a FeatureVector.
namespace feature_layout {
inline constexpr std::size_t kEmotion = 0;      // 6: anger .. surprise
inline constexpr std::size_t kLexDomain = 6;    // 45: normalized lexicographer files
inline constexpr std::size_t kLexicon = 51;     // 4: sum_pos, sum_neg, net, hit_count
inline constexpr std::size_t kPrevious = 55;    // 4: prev POS/NEG/NEU, no-previous
inline constexpr std::size_t kMetachar = 59;    // 3: rating, segment prior, emoticon score
inline constexpr std::size_t kPunctuation = 62; // 2: log1p('?'), log1p('!')
} // namespace feature_layout

using FeatureVector = std::array<double, kFeatureCount>;

struct FeatureGroups {
  bool emotion = true;
  bool lexdomain = true;
  bool lexicon = true;
  bool previous = true;
  bool metachar = true;
  bool punctuation = true;

  static FeatureGroups none() { return {false, false, false, false, false, false}; }
  /// Comma list of group names ("emotion,lexicon"), or "all" / "none".
  static FeatureGroups parse(std::string_view list);
  std::string to_string() const;
};

/// Feature column names, in layout order.
const std::vector<std::string>& feature_names();

/// Everything feature extraction reads. Borrowed resources must outlive it.
struct FeatureResources {
  const WordNetDb* db = nullptr;
  const Stopwords* stopwords = &Stopwords::english();
  std::vector<SeedSet> emotions;    // six sets in emotion order
  std::vector<SeedSet> extra_seeds; // auxiliary seed scores (e.g. "good")
  EmotionOptions emotion_options;
  const LexiconSet* lexicons = nullptr;
  EnsemblePolicy policy;
  int allow_gap = 0;
  CueTable cues = CueTable::defaults();
  EmoticonTable emoticons = EmoticonTable::defaults();
  RatingOptions rating;
  FeatureGroups groups;
};

/// Disabled groups (and groups whose resources are missing) stay zero.
FeatureVector sentence_features(const FeatureResources& res, const Sentence& sentence,
                                const PreviousPolarity& previous);

/// Mean of sentence vectors for emotion, lexdomain and lexicon groups; sums
/// for metachar scores; log1p of summed punctuation counts; previous zeroed.
FeatureVector document_features(const FeatureResources& res, const Document& document);

/// Mean auxiliary seed score per extra seed set (sentence: over content tokens,
/// document: over sentences).
std::vector<double> sentence_seed_scores(const FeatureResources& res, const Sentence& sentence);
std::vector<double> document_seed_scores(const FeatureResources& res, const Document& document);

} // namespace opinex
