#pragma once

#include <opinex/corpus.hpp>
#include <opinex/wordnet.hpp>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace opinex {

/// Token counts per lexicographer file (0..44).
struct DomainHistogram {
  std::array<std::int64_t, kLexDomainCount> counts{};
  std::int64_t total = 0;

  void add(int file_no, std::int64_t n = 1);
  DomainHistogram& operator+=(const DomainHistogram& other);
  /// Relative frequencies; all zero when total == 0.
  std::array<double, kLexDomainCount> normalized() const;

  friend bool operator==(const DomainHistogram&, const DomainHistogram&) = default;
};

DomainHistogram sentence_domains(const Sentence& sentence);
DomainHistogram document_domains(const Document& document);

enum class DomainGrouping { Domain, Polarity, DomainPolarity };

/// "domain", "polarity" or "domain×polarity" (ASCII "domain-polarity" and "domain*polarity" also
/// accepted). Throws std::invalid_argument on anything else.
DomainGrouping parse_domain_grouping(std::string_view text);

struct DomainGroupRow {
  std::string group; // "electronics", "POS", "electronics/POS"
  DomainHistogram histogram;
  std::array<double, kLexDomainCount> distribution{};
};

/// One row per group; documents are grouped by their own domain and label.
/// The five review domains always appear, "other" only when used.
std::vector<DomainGroupRow> corpus_domain_distribution(const Corpus& corpus,
                                                       DomainGrouping grouping);

/// Header: group,<45 lexicographer file names in file-number order>
void write_domain_csv(std::ostream& out, const std::vector<DomainGroupRow>& rows);

} // namespace opinex
