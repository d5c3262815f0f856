#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace opinex {

/// Closed set of English function words ignored by WSD context bags, emotion
/// aggregation and gap-tolerant lexicon matching.
class Stopwords {
public:
  Stopwords() = default;
  explicit Stopwords(std::vector<std::string> words);

  /// The bundled list (see data/stopwords.txt for the same contents).
  static const Stopwords& english();

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

private:
  std::unordered_set<std::string> words_;
};

} // namespace opinex
