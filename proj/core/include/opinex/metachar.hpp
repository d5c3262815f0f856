#pragma once

#include <opinex/common.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opinex {

struct RatingThresholds {
  double negative_max = 0.4; // r <= this is NEG
  double positive_min = 0.7; // r >= this is POS
};

struct RatingOptions {
  RatingThresholds thresholds;
  std::vector<double> denominators{5.0, 10.0, 100.0};
};

struct RatioRating {
  double numerator = 0.0;
  double denominator = 1.0;
  std::size_t begin = 0; // byte span [begin, end)
  std::size_t end = 0;
  Polarity polarity = Polarity::Neu;
};

/// Class of the rating x/y. Throws std::invalid_argument unless 0 <= x <= y and y > 0.
Polarity rating_polarity(double x, double y, const RatingThresholds& thresholds = {});

/// Stand-alone "x/y" ratings. Slash chains such as dates (3/4/2020) are not ratings.
std::vector<RatioRating> extract_ratings(std::string_view text, const RatingOptions& options = {});

/// Cue phrases that label the text after a colon ("Pros:", "The Good:").
struct CueTable {
  std::vector<std::pair<std::string, Polarity>> cues; // lowercase cue text

  static CueTable defaults();
  /// {"pos": [...], "neg": [...]}
  static CueTable parse(std::string_view json_text);
  static CueTable load(const std::filesystem::path& path);
};

struct LabeledSegment {
  std::string cue; // as written in the text
  Polarity prior = Polarity::Neu;
  std::string body;
  std::size_t body_begin = 0;
  std::size_t body_end = 0;
};

/// Flat segmentation: a cue counts at the start of the text or after
/// sentence-final punctuation; each body runs to the next cue or the end.
std::vector<LabeledSegment> extract_labeled_segments(std::string_view text,
                                                     const CueTable& cues = CueTable::defaults());

struct EmoticonTable {
  std::vector<std::pair<std::string, int>> emoticons; // signed contribution

  static EmoticonTable defaults();
  /// {":D": 1, ":(": -1, ...}
  static EmoticonTable parse(std::string_view json_text);
  static EmoticonTable load(const std::filesystem::path& path);
};

struct PunctuationProfile {
  int question = 0;
  int exclamation = 0;
  int colon = 0;
  int slash = 0;
  int emoticon = 0;
  int emoticon_score = 0;

  friend bool operator==(const PunctuationProfile&, const PunctuationProfile&) = default;
};

/// Characters that belong to a recognized emoticon are not counted again as
/// ':' or '/'.
PunctuationProfile punctuation_profile(std::string_view text,
                                       const EmoticonTable& emoticons = EmoticonTable::defaults());

} // namespace opinex
