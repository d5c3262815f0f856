#pragma once

#include <opinex/common.hpp>
#include <opinex/wordnet.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opinex {

struct Token {
  std::string surface;
  std::string lemma; // lowercase, no whitespace
  PartOfSpeech pos = PartOfSpeech::Other;
  std::optional<SynsetId> sense;
  std::optional<int> lexdomain; // set together with sense
};

struct Sentence {
  std::string text;
  std::vector<Token> tokens;
  Polarity label = Polarity::Neu;
  std::size_t index = 0;
};

enum class Domain : std::uint8_t { Books, Dvds, Electronics, Music, Videogames, Other };

inline constexpr std::array<Domain, 6> kDomains{Domain::Books,      Domain::Dvds,
                                                Domain::Electronics, Domain::Music,
                                                Domain::Videogames, Domain::Other};

std::string_view to_string(Domain d);
std::optional<Domain> parse_domain(std::string_view text);

struct Document {
  std::string id;
  Domain domain = Domain::Other;
  Polarity label = Polarity::Neu;
  std::vector<Sentence> sentences;
};

using Corpus = std::vector<Document>;

/// Maps raw annotation labels onto three classes: MIX and NR fold into NEU.
/// Throws DataError naming the value (and `document_id` when given).
Polarity normalize_label(std::string_view raw, std::string_view document_id = {});

/// Splits on whitespace and punctuation; apostrophes, hyphens and underscores
/// between word characters stay inside a token. With a WordNet, lemmas are
/// reduced to index base forms and pos follows index membership in the order
/// noun, verb, adj, adv.
std::vector<Token> tokenize(std::string_view text, const WordNetDb* db = nullptr);

/// Reads the JSON-lines corpus format. Tokens are produced with `db`.
Corpus load_corpus(const std::filesystem::path& path, const WordNetDb* db = nullptr);
Corpus parse_corpus(std::istream& in, const WordNetDb* db = nullptr,
                    std::string_view source_name = "<stream>");

struct StatsRow {
  std::string category;
  std::array<std::int64_t, 3> documents{}; // POS, NEG, NEU
  std::array<std::int64_t, 3> sentences{};
  std::int64_t document_total() const { return documents[0] + documents[1] + documents[2]; }
  std::int64_t sentence_total() const { return sentences[0] + sentences[1] + sentences[2]; }
};

/// Documents and sentences per domain and polarity, plus a final "Total" row.
/// The five review domains always appear; "other" only when used.
struct StatsTable {
  std::vector<StatsRow> rows;
  const StatsRow& total() const { return rows.back(); }
  const StatsRow* find(std::string_view category) const;
};

StatsTable corpus_stats(const Corpus& corpus);
void write_stats_csv(std::ostream& out, const StatsTable& table);

} // namespace opinex
