#include <opinex/features.hpp>
#include <opinex/lexdomain.hpp>

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace opinex {

namespace {

namespace L = feature_layout;

double polarity_value(Polarity p) {
  switch (p) {
  case Polarity::Pos:
    return 1.0;
  case Polarity::Neg:
    return -1.0;
  case Polarity::Neu:
    return 0.0;
  }
  return 0.0;
}

struct MetacharScores {
  double rating = 0.0;
  double segment_prior = 0.0;
  double emoticon = 0.0;
  PunctuationProfile profile;
};

MetacharScores metachar_scores(const FeatureResources& res, std::string_view text) {
  MetacharScores m;
  const auto ratings = extract_ratings(text, res.rating);
  if (!ratings.empty()) {
    double sum = 0.0;
    for (const auto& r : ratings)
      sum += polarity_value(r.polarity);
    m.rating = sum / static_cast<double>(ratings.size());
  }
  for (const auto& seg : extract_labeled_segments(text, res.cues))
    m.segment_prior += polarity_value(seg.prior);
  m.profile = punctuation_profile(text, res.emoticons);
  m.emoticon = m.profile.emoticon_score;
  return m;
}

} // namespace

FeatureGroups FeatureGroups::parse(std::string_view list) {
  const auto trimmed = trim(list);
  if (trimmed == "all")
    return FeatureGroups{};
  FeatureGroups g = none();
  if (trimmed == "none" || trimmed.empty())
    return g;
  std::size_t start = 0;
  while (start <= trimmed.size()) {
    const auto comma = trimmed.find(',', start);
    const auto name = trim(trimmed.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (name == "emotion")
      g.emotion = true;
    else if (name == "lexdomain")
      g.lexdomain = true;
    else if (name == "lexicon")
      g.lexicon = true;
    else if (name == "previous")
      g.previous = true;
    else if (name == "metachar")
      g.metachar = true;
    else if (name == "punctuation")
      g.punctuation = true;
    else
      throw std::invalid_argument(fmt::format("unknown feature group '{}'", name));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return g;
}

std::string FeatureGroups::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on)
      return;
    if (!out.empty())
      out += ',';
    out += name;
  };
  add(emotion, "emotion");
  add(lexdomain, "lexdomain");
  add(lexicon, "lexicon");
  add(previous, "previous");
  add(metachar, "metachar");
  add(punctuation, "punctuation");
  return out.empty() ? "none" : out;
}

const std::vector<std::string>& feature_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto e : emotion_names())
      n.push_back(fmt::format("emotion.{}", e));
    for (const auto& d : lex_domains())
      n.push_back(fmt::format("lexdomain.{}", d.name));
    for (const auto* s : {"lexicon.sum_pos", "lexicon.sum_neg", "lexicon.net", "lexicon.hit_count"})
      n.emplace_back(s);
    for (const auto* s : {"previous.pos", "previous.neg", "previous.neu", "previous.none"})
      n.emplace_back(s);
    for (const auto* s : {"metachar.rating", "metachar.segment_prior", "metachar.emoticon"})
      n.emplace_back(s);
    for (const auto* s : {"punctuation.question", "punctuation.exclamation"})
      n.emplace_back(s);
    return n;
  }();
  return names;
}

FeatureVector sentence_features(const FeatureResources& res, const Sentence& sentence,
                                const PreviousPolarity& previous) {
  FeatureVector v{};
  if (res.groups.emotion && res.db != nullptr && res.emotions.size() == kEmotionCount) {
    const auto e = sentence_emotions(*res.db, sentence, res.emotions, *res.stopwords, res.emotion_options);
    std::copy(e.scores.begin(), e.scores.end(), v.begin() + L::kEmotion);
  }
  if (res.groups.lexdomain) {
    const auto dist = sentence_domains(sentence).normalized();
    std::copy(dist.begin(), dist.end(), v.begin() + L::kLexDomain);
  }
  if (res.groups.lexicon && res.lexicons != nullptr && !res.policy.order.empty()) {
    const auto s = sentence_lexicon_score(sentence, *res.lexicons, res.policy, *res.stopwords, res.allow_gap);
    v[L::kLexicon + 0] = s.sum_pos;
    v[L::kLexicon + 1] = s.sum_neg;
    v[L::kLexicon + 2] = s.net;
    v[L::kLexicon + 3] = s.hit_count;
  }
  if (res.groups.previous)
    std::copy(previous.begin(), previous.end(), v.begin() + L::kPrevious);
  if (res.groups.metachar || res.groups.punctuation) {
    const auto m = metachar_scores(res, sentence.text);
    if (res.groups.metachar) {
      v[L::kMetachar + 0] = m.rating;
      v[L::kMetachar + 1] = m.segment_prior;
      v[L::kMetachar + 2] = m.emoticon;
    }
    if (res.groups.punctuation) {
      v[L::kPunctuation + 0] = std::log1p(m.profile.question);
      v[L::kPunctuation + 1] = std::log1p(m.profile.exclamation);
    }
  }
  return v;
}

FeatureVector document_features(const FeatureResources& res, const Document& document) {
  FeatureVector v{};
  if (document.sentences.empty())
    return v;
  FeatureResources inner = res;
  inner.groups.previous = false;
  inner.groups.punctuation = false;
  double questions = 0.0;
  double exclamations = 0.0;
  const double n = static_cast<double>(document.sentences.size());
  for (const auto& s : document.sentences) {
    const auto sv = sentence_features(inner, s, previous_polarity_one_hot(std::nullopt));
    for (std::size_t j = L::kEmotion; j < L::kPrevious; ++j)
      v[j] += sv[j] / n;
    for (std::size_t j = L::kMetachar; j < L::kPunctuation; ++j)
      v[j] += sv[j];
    if (res.groups.punctuation) {
      const auto p = punctuation_profile(s.text, res.emoticons);
      questions += p.question;
      exclamations += p.exclamation;
    }
  }
  if (res.groups.punctuation) {
    v[L::kPunctuation + 0] = std::log1p(questions);
    v[L::kPunctuation + 1] = std::log1p(exclamations);
  }
  return v;
}

std::vector<double> sentence_seed_scores(const FeatureResources& res, const Sentence& sentence) {
  std::vector<double> out;
  if (res.db == nullptr)
    return std::vector<double>(res.extra_seeds.size(), 0.0);
  for (const auto& seeds : res.extra_seeds)
    out.push_back(sentence_seed_score(*res.db, sentence, seeds, *res.stopwords, res.emotion_options));
  return out;
}

std::vector<double> document_seed_scores(const FeatureResources& res, const Document& document) {
  std::vector<double> out(res.extra_seeds.size(), 0.0);
  if (document.sentences.empty())
    return out;
  for (const auto& s : document.sentences) {
    const auto scores = sentence_seed_scores(res, s);
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] += scores[k];
  }
  for (auto& v : out)
    v /= static_cast<double>(document.sentences.size());
  return out;
}

} // namespace opinex
