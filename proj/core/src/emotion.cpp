#include <opinex/emotion.hpp>
#include <opinex/parallel.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

namespace opinex {

namespace {

constexpr std::array<std::string_view, kEmotionCount> kEmotionNames{
    "anger", "disgust", "fear", "joy", "sadness", "surprise"};

bool has_taxonomy(PartOfSpeech pos) { return pos == PartOfSpeech::Noun || pos == PartOfSpeech::Verb; }

} // namespace

const std::array<std::string_view, kEmotionCount>& emotion_names() { return kEmotionNames; }

SeedSet SeedSet::resolve(const WordNetDb& db, std::string name, std::vector<Seed> seeds) {
  if (seeds.empty())
    throw DataError(fmt::format("seed set '{}' has no seeds", name));
  SeedSet set;
  set.name = std::move(name);
  for (auto& seed : seeds) {
    seed.lemma = to_lower_ascii(seed.lemma);
    const auto senses = db.senses(seed.lemma, seed.pos);
    if (senses.empty())
      throw DataError(fmt::format("seed '{}' ({}) of set '{}' is not in the WordNet", seed.lemma,
                                  to_string(seed.pos), set.name));
    set.synsets.insert(set.synsets.end(), senses.begin(), senses.end());
  }
  set.seeds = std::move(seeds);
  return set;
}

SeedConfig default_seed_config(const WordNetDb& db) {
  SeedConfig config;
  for (const auto name : kEmotionNames) {
    std::string display(name);
    display.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(display.front())));
    config.emotions.push_back(
        SeedSet::resolve(db, display, {Seed{std::string(name), PartOfSpeech::Noun}}));
  }
  config.extra.push_back(SeedSet::resolve(db, "good", {Seed{"good", PartOfSpeech::Noun}}));
  return config;
}

SeedConfig parse_seed_config(std::string_view json_text, const WordNetDb& db) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(fmt::format("seed config: malformed JSON: {}", e.what()));
  }
  const auto sets = doc.find("seedsets");
  if (sets == doc.end() || !sets->is_array())
    throw DataError("seed config: field 'seedsets' missing or not an array");

  std::array<std::optional<SeedSet>, kEmotionCount> emotions;
  SeedConfig config;
  for (const auto& entry : *sets) {
    if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string())
      throw DataError("seed config: seed set without a string 'name'");
    const auto name = entry["name"].get<std::string>();
    if (!entry.contains("seeds") || !entry["seeds"].is_array())
      throw DataError(fmt::format("seed config: set '{}' has no 'seeds' array", name));
    std::vector<Seed> seeds;
    for (const auto& s : entry["seeds"]) {
      if (!s.is_object() || !s.contains("lemma") || !s["lemma"].is_string())
        throw DataError(fmt::format("seed config: set '{}' has a seed without 'lemma'", name));
      Seed seed{s["lemma"].get<std::string>(), PartOfSpeech::Noun};
      if (s.contains("pos")) {
        const auto pos = parse_part_of_speech(s["pos"].get<std::string>());
        if (!pos || *pos == PartOfSpeech::Other)
          throw DataError(fmt::format("seed config: bad pos for seed '{}'", seed.lemma));
        seed.pos = *pos;
      }
      seeds.push_back(std::move(seed));
    }
    auto resolved = SeedSet::resolve(db, name, std::move(seeds));
    const auto lower = to_lower_ascii(name);
    const auto it = std::find(kEmotionNames.begin(), kEmotionNames.end(), lower);
    if (it != kEmotionNames.end())
      emotions[static_cast<std::size_t>(it - kEmotionNames.begin())] = std::move(resolved);
    else
      config.extra.push_back(std::move(resolved));
  }
  for (std::size_t e = 0; e < kEmotionCount; ++e) {
    if (!emotions[e])
      throw DataError(fmt::format("seed config: missing seed set for emotion '{}'", kEmotionNames[e]));
    config.emotions.push_back(std::move(*emotions[e]));
  }
  return config;
}

SeedConfig load_seed_config(const std::filesystem::path& path, const WordNetDb& db) {
  std::ifstream in(path);
  if (!in)
    throw DataError(fmt::format("cannot open seed config '{}'", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_seed_config(buffer.str(), db);
}

bool is_emotion_content_token(const WordNetDb& db, const Token& token, const Stopwords& stopwords) {
  if (!has_taxonomy(token.pos) || db.senses(token.lemma, token.pos).empty())
    return false;
  return !stopwords.contains(token.lemma) && !stopwords.contains(to_lower_ascii(token.surface));
}

double seed_similarity(const WordNetDb& db, const Token& token, const SeedSet& seeds,
                       const EmotionOptions& options) {
  if (!has_taxonomy(token.pos))
    return 0.0;
  std::vector<SynsetId> senses;
  if (options.use_wsd_sense && token.sense)
    senses.push_back(*token.sense);
  else {
    const auto all = db.senses(token.lemma, token.pos);
    senses.assign(all.begin(), all.end());
  }
  double best = 0.0;
  for (const auto& sense : senses) {
    const Synset& a = db.at(sense);
    for (const auto& seed : seeds.synsets) {
      const Synset& b = db.at(seed);
      if (a.pos() != b.pos())
        continue;
      best = std::max(best, similarity(db, a, b, options.measure));
    }
  }
  return best;
}

double sentence_seed_score(const WordNetDb& db, const Sentence& sentence, const SeedSet& seeds,
                           const Stopwords& stopwords, const EmotionOptions& options) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& token : sentence.tokens) {
    if (!is_emotion_content_token(db, token, stopwords))
      continue;
    sum += seed_similarity(db, token, seeds, options);
    ++count;
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

EmotionVector sentence_emotions(const WordNetDb& db, const Sentence& sentence,
                                std::span<const SeedSet> emotions, const Stopwords& stopwords,
                                const EmotionOptions& options) {
  if (emotions.size() != kEmotionCount)
    throw std::invalid_argument("sentence_emotions needs exactly six seed sets");
  EmotionVector v;
  for (std::size_t e = 0; e < kEmotionCount; ++e)
    v.scores[e] = sentence_seed_score(db, sentence, emotions[e], stopwords, options);
  return v;
}

EmotionVector document_emotions(const WordNetDb& db, const Document& document,
                                std::span<const SeedSet> emotions, const Stopwords& stopwords,
                                const EmotionOptions& options) {
  EmotionVector mean;
  if (document.sentences.empty())
    return mean;
  for (const auto& sentence : document.sentences) {
    const auto v = sentence_emotions(db, sentence, emotions, stopwords, options);
    for (std::size_t e = 0; e < kEmotionCount; ++e)
      mean.scores[e] += v.scores[e];
  }
  for (auto& s : mean.scores)
    s /= static_cast<double>(document.sentences.size());
  return mean;
}

std::string_view to_string(AnalysisLevel level) {
  return level == AnalysisLevel::Sentence ? "sentence" : "document";
}

std::optional<AnalysisLevel> parse_analysis_level(std::string_view text) {
  if (text == "sentence")
    return AnalysisLevel::Sentence;
  if (text == "document")
    return AnalysisLevel::Document;
  return std::nullopt;
}

EmotionReport emotion_distribution_report(const WordNetDb& db, const Corpus& corpus,
                                          std::span<const SeedSet> emotions,
                                          const Stopwords& stopwords, AnalysisLevel level,
                                          const EmotionOptions& options, int jobs) {
  std::vector<std::vector<EmotionRow>> per_doc(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t d) {
    const Document& doc = corpus[d];
    if (level == AnalysisLevel::Document) {
      per_doc[d].push_back({doc.id, doc.label, document_emotions(db, doc, emotions, stopwords, options)});
      return;
    }
    for (const auto& s : doc.sentences)
      per_doc[d].push_back({fmt::format("{}#{}", doc.id, s.index), s.label,
                            sentence_emotions(db, s, emotions, stopwords, options)});
  });
  EmotionReport report;
  report.level = level;
  for (auto& rows : per_doc)
    for (auto& row : rows)
      report.rows.push_back(std::move(row));
  return report;
}

EmotionHistogram emotion_histogram(const EmotionReport& report, std::size_t bins) {
  if (bins == 0)
    throw std::invalid_argument("histogram needs at least one bin");
  EmotionHistogram h;
  h.bins = bins;
  for (auto& per_class : h.counts)
    for (auto& v : per_class)
      v.assign(bins, 0);
  for (const auto& row : report.rows) {
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
      const double s = std::clamp(row.vector.scores[e], 0.0, 1.0);
      const auto bin = std::min(bins - 1, static_cast<std::size_t>(s * static_cast<double>(bins)));
      ++h.counts[e][index_of(row.label)][bin];
    }
  }
  return h;
}

void write_emotion_csv(std::ostream& out, const EmotionReport& report) {
  out << "level,id,class,anger,disgust,fear,joy,sadness,surprise\n";
  for (const auto& row : report.rows) {
    out << fmt::format("{},{},{}", to_string(report.level), row.id, to_string(row.label));
    for (const double s : row.vector.scores)
      out << fmt::format(",{}", s);
    out << '\n';
  }
}

void write_emotion_histogram_csv(std::ostream& out, const EmotionHistogram& histogram) {
  out << "emotion,class,bin,lower,upper,count\n";
  const double width = 1.0 / static_cast<double>(histogram.bins);
  for (std::size_t e = 0; e < kEmotionCount; ++e)
    for (const Polarity p : kPolarities)
      for (std::size_t b = 0; b < histogram.bins; ++b)
        out << fmt::format("{},{},{},{},{},{}\n", kEmotionNames[e], to_string(p), b,
                           static_cast<double>(b) * width, static_cast<double>(b + 1) * width,
                           histogram.counts[e][index_of(p)][b]);
}

} // namespace opinex
