#include <opinex/lexicons.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace opinex {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (text.empty())
    return std::nullopt;
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value))
    return std::nullopt;
  return value;
}

[[noreturn]] void malformed(std::string_view lexicon, std::size_t line_no, std::string_view what) {
  throw DataError(fmt::format("{} lexicon, line {}: {}", lexicon, line_no, what));
}

std::ifstream open_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw DataError(fmt::format("cannot open lexicon '{}'", path.string()));
  return in;
}

std::optional<LexPos> sentiwordnet_pos(std::string_view c) {
  if (c == "n")
    return LexPos::Noun;
  if (c == "v")
    return LexPos::Verb;
  if (c == "a" || c == "s")
    return LexPos::Adj;
  if (c == "r")
    return LexPos::Adv;
  return std::nullopt;
}

} // namespace

std::string_view to_string(LexiconFormat f) {
  switch (f) {
  case LexiconFormat::SentiWordNet:
    return "sentiwordnet";
  case LexiconFormat::WordList:
    return "wordlist";
  case LexiconFormat::Mpqa:
    return "mpqa";
  case LexiconFormat::Tsv:
    return "tsv";
  }
  return "tsv";
}

std::optional<LexiconFormat> parse_lexicon_format(std::string_view text) {
  for (const auto f : {LexiconFormat::SentiWordNet, LexiconFormat::WordList, LexiconFormat::Mpqa,
                       LexiconFormat::Tsv})
    if (to_string(f) == text)
      return f;
  return std::nullopt;
}

std::string_view to_string(LexPos p) {
  switch (p) {
  case LexPos::Noun:
    return "noun";
  case LexPos::Verb:
    return "verb";
  case LexPos::Adj:
    return "adj";
  case LexPos::Adv:
    return "adv";
  case LexPos::Any:
    return "any";
  }
  return "any";
}

std::optional<LexPos> parse_lex_pos(std::string_view text) {
  const auto lower = to_lower_ascii(trim(text));
  for (const auto p : {LexPos::Noun, LexPos::Verb, LexPos::Adj, LexPos::Adv, LexPos::Any})
    if (to_string(p) == lower)
      return p;
  return std::nullopt;
}

LexPos lex_pos_for(PartOfSpeech pos) {
  switch (pos) {
  case PartOfSpeech::Noun:
    return LexPos::Noun;
  case PartOfSpeech::Verb:
    return LexPos::Verb;
  case PartOfSpeech::Adj:
    return LexPos::Adj;
  case PartOfSpeech::Adv:
    return LexPos::Adv;
  case PartOfSpeech::Other:
    return LexPos::Any;
  }
  return LexPos::Any;
}

std::string lexicon_key(std::string_view term) {
  std::string key = to_lower_ascii(trim(term));
  std::string out;
  out.reserve(key.size());
  for (const char c : key) {
    const bool sep = c == ' ' || c == '-' || c == '\t';
    if (sep) {
      if (!out.empty() && out.back() != '_')
        out.push_back('_');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Lexicon::Lexicon(std::string name, LexiconFormat format, const std::vector<LexiconEntry>& entries)
    : name_(std::move(name)), format_(format) {
  std::map<std::pair<std::string, LexPos>, std::pair<double, int>> sums;
  for (const auto& e : entries) {
    double score = e.score;
    if (score < -1.0 || score > 1.0) {
      score = std::clamp(score, -1.0, 1.0);
      ++clamped_;
    }
    auto& [sum, count] = sums[{lexicon_key(e.lemma), e.pos}];
    sum += score;
    ++count;
  }
  for (const auto& [key, acc] : sums)
    entries_.emplace(key, acc.first / acc.second);
}

std::optional<double> Lexicon::lookup(std::string_view lemma, LexPos pos) const {
  const std::string key(lemma);
  if (const auto it = entries_.find({key, pos}); it != entries_.end())
    return it->second;
  if (pos != LexPos::Any) {
    if (const auto it = entries_.find({key, LexPos::Any}); it != entries_.end())
      return it->second;
    return std::nullopt;
  }
  for (const auto p : {LexPos::Noun, LexPos::Verb, LexPos::Adj, LexPos::Adv})
    if (const auto it = entries_.find({key, p}); it != entries_.end())
      return it->second;
  return std::nullopt;
}

bool Lexicon::contains_lemma(std::string_view lemma) const {
  const auto it = entries_.lower_bound({std::string(lemma), LexPos::Noun});
  return it != entries_.end() && it->first.first == lemma;
}

std::vector<LexiconEntry> Lexicon::entries() const {
  std::vector<LexiconEntry> out;
  out.reserve(entries_.size());
  for (const auto& [key, score] : entries_)
    out.push_back({key.first, key.second, score});
  return out;
}

Lexicon parse_sentiwordnet(std::istream& in, std::string name) {
  struct Sense {
    int rank;
    double diff;
  };
  std::map<std::pair<std::string, LexPos>, std::vector<Sense>> senses;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.starts_with('#'))
      continue;
    const auto fields = split(line, '\t');
    if (std::all_of(fields.begin(), fields.end(), [](auto f) { return trim(f).empty(); }))
      continue;
    if (fields.size() < 5)
      malformed(name, line_no, "expected POS, ID, PosScore, NegScore, SynsetTerms columns");
    const auto pos = sentiwordnet_pos(trim(fields[0]));
    if (!pos)
      malformed(name, line_no, fmt::format("unknown POS '{}'", fields[0]));
    const auto p = parse_double(fields[2]);
    const auto n = parse_double(fields[3]);
    if (!p || !n)
      malformed(name, line_no, "PosScore/NegScore are not numbers");
    std::istringstream terms{std::string(fields[4])};
    std::string term;
    bool any = false;
    while (terms >> term) {
      const auto hash = term.rfind('#');
      int rank = 0;
      if (hash == std::string::npos || hash == 0)
        malformed(name, line_no, fmt::format("synset term '{}' lacks '#rank'", term));
      const auto rank_text = std::string_view(term).substr(hash + 1);
      auto [ptr, ec] = std::from_chars(rank_text.data(), rank_text.data() + rank_text.size(), rank);
      if (ec != std::errc{} || ptr != rank_text.data() + rank_text.size() || rank < 1)
        malformed(name, line_no, fmt::format("bad sense rank in '{}'", term));
      senses[{lexicon_key(term.substr(0, hash)), *pos}].push_back({rank, *p - *n});
      any = true;
    }
    if (!any)
      malformed(name, line_no, "empty SynsetTerms column");
  }

  std::vector<LexiconEntry> entries;
  for (const auto& [key, list] : senses) {
    double weighted = 0.0;
    double weights = 0.0;
    for (const auto& s : list) {
      weighted += s.diff / s.rank;
      weights += 1.0 / s.rank;
    }
    entries.push_back({key.first, key.second, weighted / weights});
  }
  return Lexicon(std::move(name), LexiconFormat::SentiWordNet, entries);
}

namespace {

void read_wordlist(std::istream& in, Polarity role, std::vector<LexiconEntry>& entries) {
  if (role == Polarity::Neu)
    throw std::invalid_argument("word-list role must be positive or negative");
  const double score = role == Polarity::Pos ? 1.0 : -1.0;
  std::string line;
  while (std::getline(in, line)) {
    const auto term = trim(line);
    if (term.empty() || term.starts_with(';'))
      continue;
    entries.push_back({lexicon_key(term), LexPos::Any, score});
  }
}

} // namespace

Lexicon parse_wordlist(std::istream& in, Polarity role, std::string name) {
  std::vector<LexiconEntry> entries;
  read_wordlist(in, role, entries);
  return Lexicon(std::move(name), LexiconFormat::WordList, entries);
}

Lexicon load_wordlist(const std::vector<std::pair<std::filesystem::path, Polarity>>& files,
                      std::string name) {
  std::vector<LexiconEntry> entries;
  for (const auto& [path, role] : files) {
    auto in = open_lexicon(path);
    read_wordlist(in, role, entries);
  }
  return Lexicon(std::move(name), LexiconFormat::WordList, entries);
}

Lexicon parse_mpqa(std::istream& in, std::string name) {
  std::vector<LexiconEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || trim(line).starts_with('#'))
      continue;
    std::map<std::string, std::string, std::less<>> kv;
    std::istringstream fields(line);
    std::string field;
    while (fields >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos || eq == 0)
        malformed(name, line_no, fmt::format("expected key=value, got '{}'", field));
      kv[field.substr(0, eq)] = field.substr(eq + 1);
    }
    const auto word = kv.find("word1");
    const auto prior = kv.find("priorpolarity");
    if (word == kv.end() || word->second.empty())
      malformed(name, line_no, "missing word1");
    if (prior == kv.end())
      malformed(name, line_no, "missing priorpolarity");

    double score = 0.0;
    if (prior->second == "positive")
      score = 1.0;
    else if (prior->second == "negative" || prior->second == "weakneg")
      score = -1.0;
    else if (prior->second != "neutral" && prior->second != "both")
      malformed(name, line_no, fmt::format("unknown priorpolarity '{}'", prior->second));

    if (const auto type = kv.find("type"); type != kv.end()) {
      if (type->second == "weaksubj")
        score *= 0.5;
      else if (type->second != "strongsubj")
        malformed(name, line_no, fmt::format("unknown type '{}'", type->second));
    }

    LexPos pos = LexPos::Any;
    if (const auto p = kv.find("pos1"); p != kv.end()) {
      if (p->second == "adj")
        pos = LexPos::Adj;
      else if (p->second == "noun")
        pos = LexPos::Noun;
      else if (p->second == "verb")
        pos = LexPos::Verb;
      else if (p->second == "adverb" || p->second == "adv")
        pos = LexPos::Adv;
      else if (p->second == "anypos" || p->second == "any")
        pos = LexPos::Any;
      else
        malformed(name, line_no, fmt::format("unknown pos1 '{}'", p->second));
    }
    entries.push_back({word->second, pos, score});
  }
  return Lexicon(std::move(name), LexiconFormat::Mpqa, entries);
}

Lexicon parse_tsv(std::istream& in, std::string name) {
  std::vector<LexiconEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || line.starts_with('#'))
      continue;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    const auto fields = split(line, '\t');
    if (fields.size() != 3)
      malformed(name, line_no, "expected lemma<TAB>pos<TAB>score");
    const auto pos = parse_lex_pos(fields[1]);
    if (!pos)
      malformed(name, line_no, fmt::format("unknown pos '{}'", fields[1]));
    const auto score = parse_double(fields[2]);
    if (!score)
      malformed(name, line_no, fmt::format("score '{}' is not a number", fields[2]));
    if (trim(fields[0]).empty())
      malformed(name, line_no, "empty lemma");
    entries.push_back({std::string(fields[0]), *pos, *score});
  }
  return Lexicon(std::move(name), LexiconFormat::Tsv, entries);
}

Lexicon load_lexicon(const std::filesystem::path& path, LexiconFormat format, Polarity role,
                     std::string name) {
  if (name.empty())
    name = std::string(to_string(format));
  auto in = open_lexicon(path);
  switch (format) {
  case LexiconFormat::SentiWordNet:
    return parse_sentiwordnet(in, std::move(name));
  case LexiconFormat::WordList:
    return parse_wordlist(in, role, std::move(name));
  case LexiconFormat::Mpqa:
    return parse_mpqa(in, std::move(name));
  case LexiconFormat::Tsv:
    return parse_tsv(in, std::move(name));
  }
  throw std::invalid_argument("unknown lexicon format");
}

std::optional<double> word_polarity(const Lexicon& lexicon, std::string_view lemma, LexPos pos) {
  return lexicon.lookup(lemma, pos);
}

std::string_view to_string(EnsembleStrategy s) {
  return s == EnsembleStrategy::FirstNonNeutral ? "first-non-neutral" : "majority";
}

std::optional<EnsembleStrategy> parse_ensemble_strategy(std::string_view text) {
  if (text == "first-non-neutral")
    return EnsembleStrategy::FirstNonNeutral;
  if (text == "majority")
    return EnsembleStrategy::Majority;
  return std::nullopt;
}

void LexiconSet::add(Lexicon lexicon) {
  if (find(lexicon.name()) != nullptr)
    throw std::invalid_argument(fmt::format("lexicon '{}' loaded twice", lexicon.name()));
  lexicons_.push_back(std::move(lexicon));
}

const Lexicon* LexiconSet::find(std::string_view name) const {
  for (const auto& lex : lexicons_)
    if (lex.name() == name)
      return &lex;
  return nullptr;
}

std::vector<std::string> LexiconSet::default_order() const {
  std::vector<std::string> order;
  for (const auto* preferred : {"sentiwordnet", "wordlist", "mpqa", "tsv"})
    if (find(preferred) != nullptr)
      order.emplace_back(preferred);
  for (const auto& lex : lexicons_)
    if (std::find(order.begin(), order.end(), lex.name()) == order.end())
      order.push_back(lex.name());
  return order;
}

Polarity banded_verdict(double score, double neutral_band) {
  if (score > neutral_band)
    return Polarity::Pos;
  if (score < -neutral_band)
    return Polarity::Neg;
  return Polarity::Neu;
}

EnsembleVerdict ensemble_polarity(std::string_view lemma, LexPos pos, const LexiconSet& lexicons,
                                  const EnsemblePolicy& policy) {
  if (policy.order.empty())
    throw std::invalid_argument("ensemble policy names no lexicons");
  std::vector<std::pair<const Lexicon*, double>> hits;
  for (const auto& name : policy.order) {
    const Lexicon* lex = lexicons.find(name);
    if (lex == nullptr)
      throw std::invalid_argument(fmt::format("ensemble policy names unknown lexicon '{}'", name));
    if (const auto score = lex->lookup(lemma, pos))
      hits.emplace_back(lex, *score);
  }

  EnsembleVerdict verdict;
  verdict.found = !hits.empty();
  verdict.provenance = hits.empty() ? "none" : hits.front().first->name();

  if (policy.strategy == EnsembleStrategy::FirstNonNeutral) {
    for (const auto& [lex, score] : hits) {
      const Polarity p = banded_verdict(score, policy.neutral_band);
      if (p != Polarity::Neu) {
        verdict.polarity = p;
        verdict.score = score;
        verdict.provenance = lex->name();
        return verdict;
      }
    }
    return verdict;
  }

  std::array<int, 3> votes{};
  for (const auto& [lex, score] : hits)
    ++votes[index_of(banded_verdict(score, policy.neutral_band))];
  if (!hits.empty())
    verdict.provenance = "vote";
  const auto top = *std::max_element(votes.begin(), votes.end());
  int leaders = 0;
  Polarity winner = Polarity::Neu;
  for (const Polarity p : kPolarities)
    if (votes[index_of(p)] == top) {
      ++leaders;
      winner = p;
    }
  if (hits.empty() || leaders > 1 || winner == Polarity::Neu)
    return verdict;
  double sum = 0.0;
  for (const auto& [lex, score] : hits)
    if (banded_verdict(score, policy.neutral_band) == winner)
      sum += score;
  verdict.polarity = winner;
  verdict.score = sum / top;
  return verdict;
}

namespace {

struct Candidate {
  std::vector<std::string> parts;
  std::size_t last = 0;
  int skipped = 0;
};

bool is_stop(const Token& t, const Stopwords& stopwords) {
  return stopwords.contains(t.lemma) || stopwords.contains(to_lower_ascii(t.surface));
}

void extend(const Sentence& s, const Stopwords& stopwords, int gaps_left, std::size_t next,
            Candidate current, std::vector<Candidate>& out) {
  out.push_back(current);
  if (current.parts.size() == 4 || next >= s.tokens.size())
    return;
  Candidate take = current;
  take.parts.push_back(lexicon_key(s.tokens[next].lemma));
  take.last = next;
  extend(s, stopwords, gaps_left, next + 1, std::move(take), out);
  if (gaps_left > 0 && is_stop(s.tokens[next], stopwords) && next + 1 < s.tokens.size()) {
    Candidate skip = current;
    ++skip.skipped;
    skip.parts.push_back(lexicon_key(s.tokens[next + 1].lemma));
    skip.last = next + 1;
    extend(s, stopwords, gaps_left - 1, next + 2, std::move(skip), out);
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string key;
  for (const auto& p : parts) {
    if (!key.empty())
      key += '_';
    key += p;
  }
  return key;
}

} // namespace

std::vector<LexiconMatch> match_lexicon_units(const Sentence& sentence, const LexiconSet& lexicons,
                                              const EnsemblePolicy& policy,
                                              const Stopwords& stopwords, int allow_gap) {
  if (policy.order.empty())
    throw std::invalid_argument("ensemble policy names no lexicons");
  auto present = [&](const std::string& key) {
    for (const auto& name : policy.order)
      if (const Lexicon* lex = lexicons.find(name); lex != nullptr && lex->contains_lemma(key))
        return true;
    return false;
  };

  std::vector<LexiconMatch> matches;
  std::size_t i = 0;
  while (i < sentence.tokens.size()) {
    std::vector<Candidate> candidates;
    Candidate first;
    first.parts.push_back(lexicon_key(sentence.tokens[i].lemma));
    first.last = i;
    extend(sentence, stopwords, allow_gap, i + 1, std::move(first), candidates);

    const Candidate* best = nullptr;
    for (const auto& c : candidates) {
      if (!present(join(c.parts)))
        continue;
      if (best == nullptr || c.parts.size() > best->parts.size() ||
          (c.parts.size() == best->parts.size() && c.skipped < best->skipped))
        best = &c;
    }
    if (best == nullptr) {
      ++i;
      continue;
    }
    LexiconMatch m;
    m.key = join(best->parts);
    m.first_token = i;
    m.last_token = best->last;
    const LexPos pos =
        best->parts.size() == 1 ? lex_pos_for(sentence.tokens[i].pos) : LexPos::Any;
    m.verdict = ensemble_polarity(m.key, pos, lexicons, policy);
    matches.push_back(std::move(m));
    i = best->last + 1;
  }
  return matches;
}

LexiconScore sentence_lexicon_score(const Sentence& sentence, const LexiconSet& lexicons,
                                    const EnsemblePolicy& policy, const Stopwords& stopwords,
                                    int allow_gap) {
  LexiconScore score;
  for (const auto& m : match_lexicon_units(sentence, lexicons, policy, stopwords, allow_gap)) {
    if (m.verdict.polarity == Polarity::Pos) {
      score.sum_pos += m.verdict.score;
      ++score.hit_count;
    } else if (m.verdict.polarity == Polarity::Neg) {
      score.sum_neg += m.verdict.score;
      ++score.hit_count;
    }
  }
  score.net = score.sum_pos + score.sum_neg;
  return score;
}

} // namespace opinex
