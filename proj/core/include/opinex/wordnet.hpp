#pragma once

#include <opinex/common.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace opinex {

/// (pos, byte offset) pair identifying a synset in a WNDB data file.
struct SynsetId {
  PartOfSpeech pos = PartOfSpeech::Noun;
  std::uint32_t offset = 0;

  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;
};

/// "n:00001234" style rendering, used in reports and diagnostics.
std::string to_string(SynsetId id);

struct SynsetIdHash {
  std::size_t operator()(const SynsetId& id) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(id.pos) << 32) | id.offset);
  }
};

struct Synset {
  SynsetId id;
  int lexfile = 0;
  std::vector<std::string> words; // lowercase, underscores for spaces
  std::string gloss;
  std::vector<SynsetId> hypernyms; // '@' and '@i' targets

  PartOfSpeech pos() const { return id.pos; }
};

/// One of the 45 lexicographer files.
struct LexDomain {
  int file_no;
  std::string_view name;
  std::string_view description;
};

inline constexpr int kLexDomainCount = 45;

const std::array<LexDomain, kLexDomainCount>& lex_domains();
std::optional<int> lex_domain_by_name(std::string_view name);

/// Immutable synset graph loaded from WNDB 3.0 files. Safe for concurrent reads.
class WordNetDb {
public:
  /// Reads index.{noun,verb,adj,adv}, data.{noun,verb,adj,adv} and, when
  /// present, the morphological exception lists {noun,verb,adj,adv}.exc.
  static WordNetDb load(const std::filesystem::path& dir);

  std::size_t size() const { return synsets_.size(); }
  std::span<const Synset> synsets() const { return synsets_; }

  const Synset* find(SynsetId id) const;
  const Synset& at(SynsetId id) const;

  /// Senses of a lowercase lemma in sense-rank order; empty when absent.
  std::span<const SynsetId> senses(std::string_view lemma, PartOfSpeech pos) const;
  std::vector<const Synset*> lookup(std::string_view lemma, PartOfSpeech pos) const;
  bool contains(std::string_view lemma, PartOfSpeech pos) const;

  /// Base form of `word` under `pos` that is present in the index, trying the
  /// word itself, then the exception list, then the detachment suffix rules.
  std::optional<std::string> base_form(std::string_view word, PartOfSpeech pos) const;

  /// 1 + edges on the longest hypernym path to a root.
  int depth(SynsetId id) const;
  int max_depth(PartOfSpeech pos) const;

  /// Every ancestor of `id` (itself included, distance 0) with its shortest
  /// hypernym-edge distance.
  std::unordered_map<SynsetId, int, SynsetIdHash> ancestor_distances(SynsetId id) const;

private:
  std::size_t slot(SynsetId id) const;

  std::vector<Synset> synsets_; // sorted by id
  std::vector<int> depth_;      // parallel to synsets_
  std::unordered_map<SynsetId, std::size_t, SynsetIdHash> slots_;
  std::array<std::unordered_map<std::string, std::vector<SynsetId>>, 4> index_;
  std::array<std::unordered_map<std::string, std::vector<std::string>>, 4> exceptions_;
  std::array<int, 4> max_depth_{};
};

enum class SimilarityMeasure { Path, WuPalmer, LeacockChodorow };

std::string_view to_string(SimilarityMeasure m);
std::optional<SimilarityMeasure> parse_similarity_measure(std::string_view text);

struct LcsResult {
  const Synset* lcs = nullptr; // absent when no shared ancestor
  int depth_a = 0;
  int depth_b = 0;
  int depth_lcs = 0;
};

/// Deepest common hypernym (either synset itself included). Throws
/// std::invalid_argument when the synsets differ in part of speech.
LcsResult lcs_depth(const WordNetDb& db, const Synset& a, const Synset& b);

/// Shortest hypernym-path length in edges through any common ancestor.
std::optional<int> shortest_path_length(const WordNetDb& db, const Synset& a, const Synset& b);

/// Taxonomy similarity in [0, 1]; 0 when the synsets share no ancestor.
double similarity(const WordNetDb& db, const Synset& a, const Synset& b,
                  SimilarityMeasure measure);

} // namespace opinex
