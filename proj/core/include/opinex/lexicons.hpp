#pragma once

#include <opinex/corpus.hpp>
#include <opinex/stopwords.hpp>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace opinex {

enum class LexiconFormat { SentiWordNet, WordList, Mpqa, Tsv };

std::string_view to_string(LexiconFormat f);
std::optional<LexiconFormat> parse_lexicon_format(std::string_view text);

enum class LexPos { Noun, Verb, Adj, Adv, Any };

std::string_view to_string(LexPos p);
std::optional<LexPos> parse_lex_pos(std::string_view text);
LexPos lex_pos_for(PartOfSpeech pos);

/// Lowercase with spaces and hyphens mapped to '_' ("one-dimensional" ->
/// "one_dimensional").
std::string lexicon_key(std::string_view term);

struct LexiconEntry {
  std::string lemma;
  LexPos pos = LexPos::Any;
  double score = 0.0; // [-1, 1]
};

class Lexicon {
public:
  Lexicon() = default;
  /// Duplicate (lemma, pos) keys are averaged. Scores outside [-1, 1] are
  /// clamped and tallied in clamped_count().
  Lexicon(std::string name, LexiconFormat format, const std::vector<LexiconEntry>& entries);

  const std::string& name() const { return name_; }
  LexiconFormat format() const { return format_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t clamped_count() const { return clamped_; }

  /// Exact (lemma, pos) entry, else (lemma, any). An `any` query falls back to
  /// the first of noun, verb, adj, adv holding the lemma.
  std::optional<double> lookup(std::string_view lemma, LexPos pos) const;
  bool contains_lemma(std::string_view lemma) const;

  /// Sorted (lemma, pos, score) triples.
  std::vector<LexiconEntry> entries() const;

private:
  std::string name_;
  LexiconFormat format_ = LexiconFormat::Tsv;
  std::map<std::pair<std::string, LexPos>, double> entries_;
  std::size_t clamped_ = 0;
};

/// SentiWordNet 3.0: senses folded by sense-rank weights 1/k.
Lexicon parse_sentiwordnet(std::istream& in, std::string name = "sentiwordnet");
/// One term per line, ';' comments. `role` is POS (+1) or NEG (-1).
Lexicon parse_wordlist(std::istream& in, Polarity role, std::string name = "wordlist");
/// Several word-list files merged into one lexicon (e.g. positive + negative).
Lexicon load_wordlist(const std::vector<std::pair<std::filesystem::path, Polarity>>& files,
                      std::string name = "wordlist");
/// MPQA subjectivity clues; weaksubj entries are halved.
Lexicon parse_mpqa(std::istream& in, std::string name = "mpqa");
/// lemma<TAB>pos<TAB>score
Lexicon parse_tsv(std::istream& in, std::string name = "tsv");

/// `role` applies to the word-list format only.
Lexicon load_lexicon(const std::filesystem::path& path, LexiconFormat format,
                     Polarity role = Polarity::Pos, std::string name = {});

std::optional<double> word_polarity(const Lexicon& lexicon, std::string_view lemma, LexPos pos);

enum class EnsembleStrategy { FirstNonNeutral, Majority };

std::string_view to_string(EnsembleStrategy s);
std::optional<EnsembleStrategy> parse_ensemble_strategy(std::string_view text);

struct EnsemblePolicy {
  std::vector<std::string> order;
  double neutral_band = 0.05;
  EnsembleStrategy strategy = EnsembleStrategy::FirstNonNeutral;
};

/// Lexicons addressable by name.
class LexiconSet {
public:
  void add(Lexicon lexicon);
  const Lexicon* find(std::string_view name) const;
  bool empty() const { return lexicons_.empty(); }
  const std::vector<Lexicon>& all() const { return lexicons_; }
  /// Names in the default ensemble order: sentiwordnet, wordlist, mpqa, tsv,
  /// then anything else in insertion order.
  std::vector<std::string> default_order() const;

private:
  std::vector<Lexicon> lexicons_;
};

/// POS above tau, NEG below -tau, NEU inside the band.
Polarity banded_verdict(double score, double neutral_band);

struct EnsembleVerdict {
  Polarity polarity = Polarity::Neu;
  double score = 0.0;
  std::string provenance; // lexicon name, "vote", or "none"
  bool found = false;     // some lexicon in the policy holds the term
};

/// Throws std::invalid_argument for an empty policy or one naming an unknown lexicon.
EnsembleVerdict ensemble_polarity(std::string_view lemma, LexPos pos, const LexiconSet& lexicons,
                                  const EnsemblePolicy& policy);

struct LexiconScore {
  double sum_pos = 0.0;
  double sum_neg = 0.0;
  double net = 0.0;
  int hit_count = 0; // matched units with a non-neutral verdict

  friend bool operator==(const LexiconScore&, const LexiconScore&) = default;
};

struct LexiconMatch {
  std::string key;
  std::size_t first_token = 0;
  std::size_t last_token = 0; // inclusive
  EnsembleVerdict verdict;
};

/// Greedy left-to-right longest match of up to four contiguous lemmas
/// (underscore-joined). `allow_gap` lets that many stopword tokens inside a
/// phrase be skipped.
std::vector<LexiconMatch> match_lexicon_units(const Sentence& sentence, const LexiconSet& lexicons,
                                              const EnsemblePolicy& policy,
                                              const Stopwords& stopwords, int allow_gap = 0);

LexiconScore sentence_lexicon_score(const Sentence& sentence, const LexiconSet& lexicons,
                                    const EnsemblePolicy& policy, const Stopwords& stopwords,
                                    int allow_gap = 0);

} // namespace opinex
