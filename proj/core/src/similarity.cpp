#include <opinex/wordnet.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace opinex {

namespace {

void require_same_pos(const Synset& a, const Synset& b) {
  if (a.pos() != b.pos())
    throw std::invalid_argument("similarity requires synsets of the same part of speech");
}

} // namespace

std::string_view to_string(SimilarityMeasure m) {
  switch (m) {
  case SimilarityMeasure::Path:
    return "path";
  case SimilarityMeasure::WuPalmer:
    return "wup";
  case SimilarityMeasure::LeacockChodorow:
    return "lch";
  }
  return "wup";
}

std::optional<SimilarityMeasure> parse_similarity_measure(std::string_view text) {
  if (text == "path")
    return SimilarityMeasure::Path;
  if (text == "wup")
    return SimilarityMeasure::WuPalmer;
  if (text == "lch")
    return SimilarityMeasure::LeacockChodorow;
  return std::nullopt;
}

LcsResult lcs_depth(const WordNetDb& db, const Synset& a, const Synset& b) {
  require_same_pos(a, b);
  LcsResult result;
  result.depth_a = db.depth(a.id);
  result.depth_b = db.depth(b.id);

  const auto up_a = db.ancestor_distances(a.id);
  const auto up_b = db.ancestor_distances(b.id);
  for (const auto& [id, _] : up_a) {
    if (!up_b.contains(id))
      continue;
    const int d = db.depth(id);
    const Synset& candidate = db.at(id);
    // Ties on depth resolve to the lowest id.
    if (result.lcs == nullptr || d > result.depth_lcs ||
        (d == result.depth_lcs && candidate.id < result.lcs->id)) {
      result.lcs = &candidate;
      result.depth_lcs = d;
    }
  }
  return result;
}

std::optional<int> shortest_path_length(const WordNetDb& db, const Synset& a, const Synset& b) {
  require_same_pos(a, b);
  const auto up_a = db.ancestor_distances(a.id);
  const auto up_b = db.ancestor_distances(b.id);
  std::optional<int> best;
  for (const auto& [id, da] : up_a) {
    const auto it = up_b.find(id);
    if (it == up_b.end())
      continue;
    const int len = da + it->second;
    if (!best || len < *best)
      best = len;
  }
  return best;
}

double similarity(const WordNetDb& db, const Synset& a, const Synset& b,
                  SimilarityMeasure measure) {
  require_same_pos(a, b);
  switch (measure) {
  case SimilarityMeasure::Path: {
    const auto len = shortest_path_length(db, a, b);
    return len ? 1.0 / (1.0 + *len) : 0.0;
  }
  case SimilarityMeasure::WuPalmer: {
    const auto lcs = lcs_depth(db, a, b);
    if (lcs.lcs == nullptr)
      return 0.0;
    return 2.0 * lcs.depth_lcs / static_cast<double>(lcs.depth_a + lcs.depth_b);
  }
  case SimilarityMeasure::LeacockChodorow: {
    const auto len = shortest_path_length(db, a, b);
    if (!len)
      return 0.0;
    const double span = 2.0 * std::max(1, db.max_depth(a.pos()));
    const double clipped = std::max(1, *len);
    const double raw = -std::log(clipped / span);
    const double top = -std::log(1.0 / span);
    return std::clamp(raw / top, 0.0, 1.0);
  }
  }
  return 0.0;
}

} // namespace opinex
