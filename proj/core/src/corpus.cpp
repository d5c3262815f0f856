#include <opinex/corpus.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace opinex {

namespace {

bool is_word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) != 0;
}

bool is_joiner(char c) { return c == '\'' || c == '-' || c == '_'; }

Token make_token(std::string_view surface, const WordNetDb* db) {
  Token t;
  t.surface = std::string(surface);
  t.lemma = to_lower_ascii(surface);
  if (db != nullptr) {
    for (const PartOfSpeech pos : kWordNetPos) {
      if (auto base = db->base_form(t.lemma, pos)) {
        t.lemma = std::move(*base);
        t.pos = pos;
        break;
      }
    }
  }
  return t;
}

std::string json_string_field(const nlohmann::json& obj, const char* field,
                              const std::string& where) {
  const auto it = obj.find(field);
  if (it == obj.end() || !it->is_string())
    throw DataError(fmt::format("{}: field '{}' missing or not a string", where, field));
  return it->get<std::string>();
}

} // namespace

std::string_view to_string(Domain d) {
  switch (d) {
  case Domain::Books:
    return "books";
  case Domain::Dvds:
    return "dvds";
  case Domain::Electronics:
    return "electronics";
  case Domain::Music:
    return "music";
  case Domain::Videogames:
    return "videogames";
  case Domain::Other:
    return "other";
  }
  return "other";
}

std::optional<Domain> parse_domain(std::string_view text) {
  const std::string lower = to_lower_ascii(text);
  for (const Domain d : kDomains)
    if (to_string(d) == lower)
      return d;
  return std::nullopt;
}

Polarity normalize_label(std::string_view raw, std::string_view document_id) {
  const std::string lower = to_lower_ascii(trim(raw));
  if (lower == "pos")
    return Polarity::Pos;
  if (lower == "neg")
    return Polarity::Neg;
  if (lower == "neu" || lower == "mix" || lower == "nr")
    return Polarity::Neu;
  if (document_id.empty())
    throw DataError(fmt::format("unrecognized label '{}'", raw));
  throw DataError(fmt::format("unrecognized label '{}' in document '{}'", raw, document_id));
}

std::vector<Token> tokenize(std::string_view text, const WordNetDb* db) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size()) {
      if (is_word_char(text[i])) {
        ++i;
      } else if (is_joiner(text[i]) && i + 1 < text.size() && is_word_char(text[i + 1])) {
        i += 2;
      } else {
        break;
      }
    }
    tokens.push_back(make_token(text.substr(start, i - start), db));
  }
  return tokens;
}

Corpus parse_corpus(std::istream& in, const WordNetDb* db, std::string_view source_name) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty())
      continue;
    const std::string where = fmt::format("{}:{}", source_name, line_no);
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(fmt::format("{}: malformed JSON: {}", where, e.what()));
    }
    if (!obj.is_object())
      throw DataError(fmt::format("{}: expected a JSON object", where));

    Document doc;
    doc.id = json_string_field(obj, "id", where);
    if (doc.id.empty())
      throw DataError(fmt::format("{}: field 'id' is empty", where));
    if (!seen.insert(doc.id).second)
      throw DataError(fmt::format("{}: duplicate document id '{}'", where, doc.id));
    const auto domain_text = json_string_field(obj, "domain", where);
    const auto domain = parse_domain(domain_text);
    if (!domain)
      throw DataError(fmt::format("{}: field 'domain' has unknown value '{}'", where, domain_text));
    doc.domain = *domain;
    doc.label = normalize_label(json_string_field(obj, "label", where), doc.id);

    const auto sentences = obj.find("sentences");
    if (sentences == obj.end() || !sentences->is_array())
      throw DataError(fmt::format("{}: field 'sentences' missing or not an array", where));
    if (sentences->empty())
      throw DataError(fmt::format("{}: field 'sentences' is empty in document '{}'", where, doc.id));
    for (const auto& s : *sentences) {
      if (!s.is_object())
        throw DataError(fmt::format("{}: field 'sentences' holds a non-object", where));
      Sentence sentence;
      sentence.index = doc.sentences.size();
      const std::string sentence_where = fmt::format("{} sentence {}", where, sentence.index);
      sentence.text = json_string_field(s, "text", sentence_where);
      sentence.label = normalize_label(json_string_field(s, "label", sentence_where), doc.id);
      sentence.tokens = tokenize(sentence.text, db);
      doc.sentences.push_back(std::move(sentence));
    }
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, const WordNetDb* db) {
  std::ifstream in(path);
  if (!in)
    throw DataError(fmt::format("cannot open corpus '{}'", path.string()));
  return parse_corpus(in, db, path.string());
}

const StatsRow* StatsTable::find(std::string_view category) const {
  for (const auto& row : rows)
    if (row.category == category)
      return &row;
  return nullptr;
}

StatsTable corpus_stats(const Corpus& corpus) {
  std::array<StatsRow, kDomains.size()> per_domain;
  for (const Domain d : kDomains)
    per_domain[static_cast<std::size_t>(d)].category = std::string(to_string(d));
  bool has_other = false;
  for (const auto& doc : corpus) {
    auto& row = per_domain[static_cast<std::size_t>(doc.domain)];
    has_other |= doc.domain == Domain::Other;
    ++row.documents[index_of(doc.label)];
    for (const auto& s : doc.sentences)
      ++row.sentences[index_of(s.label)];
  }

  StatsTable table;
  StatsRow total;
  total.category = "Total";
  for (const auto& row : per_domain) {
    if (row.category == "other" && !has_other)
      continue;
    for (std::size_t k = 0; k < 3; ++k) {
      total.documents[k] += row.documents[k];
      total.sentences[k] += row.sentences[k];
    }
    table.rows.push_back(row);
  }
  table.rows.push_back(total);
  return table;
}

void write_stats_csv(std::ostream& out, const StatsTable& table) {
  out << "category,docs_pos,docs_neg,docs_neu,docs_total,"
         "sentences_pos,sentences_neg,sentences_neu,sentences_total\n";
  for (const auto& r : table.rows) {
    out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.category, r.documents[0], r.documents[1],
                       r.documents[2], r.document_total(), r.sentences[0], r.sentences[1],
                       r.sentences[2], r.sentence_total());
  }
}

} // namespace opinex
