#include <opinex/lexdomain.hpp>

#include <fmt/format.h>

#include <map>
#include <ostream>
#include <stdexcept>

namespace opinex {

void DomainHistogram::add(int file_no, std::int64_t n) {
  if (file_no < 0 || file_no >= kLexDomainCount)
    throw std::out_of_range(fmt::format("lexicographer file {} out of range", file_no));
  counts[static_cast<std::size_t>(file_no)] += n;
  total += n;
}

DomainHistogram& DomainHistogram::operator+=(const DomainHistogram& other) {
  for (std::size_t i = 0; i < counts.size(); ++i)
    counts[i] += other.counts[i];
  total += other.total;
  return *this;
}

std::array<double, kLexDomainCount> DomainHistogram::normalized() const {
  std::array<double, kLexDomainCount> out{};
  if (total == 0)
    return out;
  for (std::size_t i = 0; i < counts.size(); ++i)
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  return out;
}

DomainHistogram sentence_domains(const Sentence& sentence) {
  DomainHistogram h;
  for (const auto& token : sentence.tokens)
    if (token.lexdomain)
      h.add(*token.lexdomain);
  return h;
}

DomainHistogram document_domains(const Document& document) {
  DomainHistogram h;
  for (const auto& s : document.sentences)
    h += sentence_domains(s);
  return h;
}

DomainGrouping parse_domain_grouping(std::string_view text) {
  if (text == "domain")
    return DomainGrouping::Domain;
  if (text == "polarity")
    return DomainGrouping::Polarity;
  if (text == "domain×polarity" || text == "domain-polarity" || text == "domain*polarity" ||
      text == "domain_polarity")
    return DomainGrouping::DomainPolarity;
  throw std::invalid_argument(fmt::format("unknown domain grouping '{}'", text));
}

std::vector<DomainGroupRow> corpus_domain_distribution(const Corpus& corpus,
                                                       DomainGrouping grouping) {
  bool has_other = false;
  for (const auto& doc : corpus)
    has_other |= doc.domain == Domain::Other;

  std::vector<std::string> order;
  auto domains = [&] {
    std::vector<Domain> ds;
    for (const Domain d : kDomains)
      if (d != Domain::Other || has_other)
        ds.push_back(d);
    return ds;
  }();
  switch (grouping) {
  case DomainGrouping::Domain:
    for (const Domain d : domains)
      order.emplace_back(to_string(d));
    break;
  case DomainGrouping::Polarity:
    for (const Polarity p : kPolarities)
      order.emplace_back(to_string(p));
    break;
  case DomainGrouping::DomainPolarity:
    for (const Domain d : domains)
      for (const Polarity p : kPolarities)
        order.push_back(fmt::format("{}/{}", to_string(d), to_string(p)));
    break;
  }

  std::map<std::string, DomainHistogram> tally;
  for (const auto& name : order)
    tally[name];
  for (const auto& doc : corpus) {
    std::string key;
    switch (grouping) {
    case DomainGrouping::Domain:
      key = std::string(to_string(doc.domain));
      break;
    case DomainGrouping::Polarity:
      key = std::string(to_string(doc.label));
      break;
    case DomainGrouping::DomainPolarity:
      key = fmt::format("{}/{}", to_string(doc.domain), to_string(doc.label));
      break;
    }
    tally[key] += document_domains(doc);
  }

  std::vector<DomainGroupRow> rows;
  for (const auto& name : order) {
    DomainGroupRow row;
    row.group = name;
    row.histogram = tally[name];
    row.distribution = row.histogram.normalized();
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_domain_csv(std::ostream& out, const std::vector<DomainGroupRow>& rows) {
  out << "group";
  for (const auto& d : lex_domains())
    out << ',' << d.name;
  out << '\n';
  for (const auto& row : rows) {
    out << row.group;
    for (const double v : row.distribution)
      out << fmt::format(",{}", v);
    out << '\n';
  }
}

} // namespace opinex
