#pragma once

#include <opinex/corpus.hpp>
#include <opinex/emotion.hpp>
#include <opinex/features.hpp>
#include <opinex/lexicons.hpp>
#include <opinex/wordnet.hpp>
#include <opinex/wsd.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace opinex::test {

inline std::filesystem::path fixture_dir() { return OPINEX_FIXTURE_DIR; }
inline std::filesystem::path data_dir() { return fixture_dir().parent_path(); }

inline const WordNetDb& fixture_db() {
  static const WordNetDb db = WordNetDb::load(fixture_dir() / "wordnet");
  return db;
}

inline const Corpus& fixture_corpus() {
  static const Corpus corpus = load_corpus(fixture_dir() / "corpus.jsonl", &fixture_db());
  return corpus;
}

inline const Corpus& annotated_fixture_corpus() {
  static const Corpus corpus = annotate_corpus(fixture_db(), fixture_corpus(), Stopwords::english());
  return corpus;
}

inline LexiconSet fixture_lexicons() {
  const auto dir = fixture_dir() / "lexicons";
  LexiconSet set;
  set.add(load_lexicon(dir / "swn.txt", LexiconFormat::SentiWordNet, Polarity::Pos, "sentiwordnet"));
  set.add(load_wordlist({{dir / "liu-positive.txt", Polarity::Pos}, {dir / "liu-negative.txt", Polarity::Neg}},
                        "wordlist"));
  set.add(load_lexicon(dir / "mpqa.tff", LexiconFormat::Mpqa, Polarity::Pos, "mpqa"));
  set.add(load_lexicon(dir / "extra.tsv", LexiconFormat::Tsv, Polarity::Pos, "tsv"));
  return set;
}

inline const LexiconSet& fixture_lexicon_set() {
  static const LexiconSet set = fixture_lexicons();
  return set;
}

/// Every feature resource backed by the fixture data.
inline FeatureResources fixture_resources() {
  static const SeedConfig seeds = default_seed_config(fixture_db());
  FeatureResources res;
  res.db = &fixture_db();
  res.emotions = seeds.emotions;
  res.extra_seeds = seeds.extra;
  res.lexicons = &fixture_lexicon_set();
  res.policy.order = fixture_lexicon_set().default_order();
  res.allow_gap = 1;
  return res;
}

inline Sentence make_sentence(std::string text, Polarity label = Polarity::Neu,
                              const WordNetDb* db = &fixture_db()) {
  Sentence s;
  s.tokens = tokenize(text, db);
  s.text = std::move(text);
  s.label = label;
  return s;
}

inline Document make_document(std::string id, std::vector<Polarity> labels,
                              Domain domain = Domain::Books) {
  Document d;
  d.id = std::move(id);
  d.domain = domain;
  d.label = labels.empty() ? Polarity::Neu : labels.front();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Sentence s;
    s.text = "x";
    s.label = labels[i];
    s.index = i;
    d.sentences.push_back(std::move(s));
  }
  return d;
}

/// Up to `max_docs` documents with 1..max_sentences random sentence labels.
inline Corpus random_label_corpus(std::mt19937_64& rng, int max_docs = 20, int max_sentences = 15) {
  std::uniform_int_distribution<int> docs(0, max_docs);
  std::uniform_int_distribution<int> sentences(1, max_sentences);
  std::uniform_int_distribution<int> label(0, 2);
  Corpus corpus;
  const int n = docs(rng);
  for (int d = 0; d < n; ++d) {
    std::vector<Polarity> labels;
    const int m = sentences(rng);
    for (int s = 0; s < m; ++s)
      labels.push_back(kPolarities[label(rng)]);
    corpus.push_back(make_document("r" + std::to_string(d), labels));
  }
  return corpus;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("opinex-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace opinex::test
