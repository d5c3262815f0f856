#include <opinex/wordnet.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace opinex {

namespace {

constexpr std::array<LexDomain, kLexDomainCount> kLexDomains{{
    {0, "adj.all", "all adjective clusters"},
    {1, "adj.pert", "relational adjectives (pertainyms)"},
    {2, "adv.all", "all adverbs"},
    {3, "noun.Tops", "unique beginner for nouns"},
    {4, "noun.act", "nouns denoting acts or actions"},
    {5, "noun.animal", "nouns denoting animals"},
    {6, "noun.artifact", "nouns denoting man-made objects"},
    {7, "noun.attribute", "nouns denoting attributes of people and objects"},
    {8, "noun.body", "nouns denoting body parts"},
    {9, "noun.cognition", "nouns denoting cognitive processes and contents"},
    {10, "noun.communication", "nouns denoting communicative processes and contents"},
    {11, "noun.event", "nouns denoting natural events"},
    {12, "noun.feeling", "nouns denoting feelings and emotions"},
    {13, "noun.food", "nouns denoting foods and drinks"},
    {14, "noun.group", "nouns denoting groupings of people or objects"},
    {15, "noun.location", "nouns denoting spatial position"},
    {16, "noun.motive", "nouns denoting goals"},
    {17, "noun.object", "nouns denoting natural objects (not man-made)"},
    {18, "noun.person", "nouns denoting people"},
    {19, "noun.phenomenon", "nouns denoting natural phenomena"},
    {20, "noun.plant", "nouns denoting plants"},
    {21, "noun.possession", "nouns denoting possession and transfer of possession"},
    {22, "noun.process", "nouns denoting natural processes"},
    {23, "noun.quantity", "nouns denoting quantities and units of measure"},
    {24, "noun.relation", "nouns denoting relations between people or things or ideas"},
    {25, "noun.shape", "nouns denoting two and three dimensional shapes"},
    {26, "noun.state", "nouns denoting stable states of affairs"},
    {27, "noun.substance", "nouns denoting substances"},
    {28, "noun.time", "nouns denoting time and temporal relations"},
    {29, "verb.body", "verbs of grooming, dressing and bodily care"},
    {30, "verb.change", "verbs of size, temperature change, intensifying, etc."},
    {31, "verb.cognition", "verbs of thinking, judging, analyzing, doubting"},
    {32, "verb.communication", "verbs of telling, asking, ordering, singing"},
    {33, "verb.competition", "verbs of fighting, athletic activities"},
    {34, "verb.consumption", "verbs of eating and drinking"},
    {35, "verb.contact", "verbs of touching, hitting, tying, digging"},
    {36, "verb.creation", "verbs of sewing, baking, painting, performing"},
    {37, "verb.emotion", "verbs of feeling"},
    {38, "verb.motion", "verbs of walking, flying, swimming"},
    {39, "verb.perception", "verbs of seeing, hearing, feeling"},
    {40, "verb.possession", "verbs of buying, selling, owning"},
    {41, "verb.social", "verbs of political and social activities and events"},
    {42, "verb.stative", "verbs of being, having, spatial relations"},
    {43, "verb.weather", "verbs of raining, snowing, thawing, thundering"},
    {44, "adj.ppl", "participial adjectives"},
}};

constexpr std::array<std::string_view, 4> kFileSuffix{"noun", "verb", "adj", "adv"};

struct Suffix {
  std::string_view ending;
  std::string_view replacement;
};

// WordNet morphy detachment rules.
constexpr std::array<Suffix, 8> kNounRules{{{"s", ""},
                                            {"ses", "s"},
                                            {"xes", "x"},
                                            {"zes", "z"},
                                            {"ches", "ch"},
                                            {"shes", "sh"},
                                            {"men", "man"},
                                            {"ies", "y"}}};
constexpr std::array<Suffix, 8> kVerbRules{{{"s", ""},
                                            {"ies", "y"},
                                            {"es", "e"},
                                            {"es", ""},
                                            {"ed", "e"},
                                            {"ed", ""},
                                            {"ing", "e"},
                                            {"ing", ""}}};
constexpr std::array<Suffix, 4> kAdjRules{{{"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}}};

std::span<const Suffix> rules_for(PartOfSpeech pos) {
  switch (pos) {
  case PartOfSpeech::Noun:
    return kNounRules;
  case PartOfSpeech::Verb:
    return kVerbRules;
  case PartOfSpeech::Adj:
    return kAdjRules;
  default:
    return {};
  }
}

std::size_t pos_slot(PartOfSpeech pos) {
  if (pos == PartOfSpeech::Other)
    throw std::invalid_argument("part of speech 'other' has no WordNet graph");
  return static_cast<std::size_t>(pos);
}

std::optional<PartOfSpeech> pos_from_pointer_char(std::string_view c) {
  if (c == "n")
    return PartOfSpeech::Noun;
  if (c == "v")
    return PartOfSpeech::Verb;
  if (c == "a" || c == "s")
    return PartOfSpeech::Adj;
  if (c == "r")
    return PartOfSpeech::Adv;
  return std::nullopt;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start)
      out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view text, Int& out, int base = 10) {
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out, base);
  return ec == std::errc{} && ptr == end;
}

struct LineContext {
  std::string file;
  std::size_t line_no;

  [[noreturn]] void fail(std::string_view what) const {
    throw DataError(fmt::format("{}:{}: {}", file, line_no, what));
  }
};

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw DataError(fmt::format("cannot open WordNet file '{}'", path.string()));
  return in;
}

// Strip adjective syntactic markers such as "(a)", "(p)", "(ip)".
std::string clean_word(std::string_view word) {
  if (const auto paren = word.find('('); paren != std::string_view::npos && word.back() == ')')
    word = word.substr(0, paren);
  return to_lower_ascii(word);
}

struct RawSynset {
  Synset synset;
  std::vector<std::pair<SynsetId, LineContext>> pending_hypernyms;
};

RawSynset parse_data_line(std::string_view line, PartOfSpeech file_pos, const LineContext& ctx) {
  const auto bar = line.find('|');
  if (bar == std::string_view::npos)
    ctx.fail("missing '|' gloss separator");
  const auto fields = split_ws(line.substr(0, bar));
  std::size_t i = 0;
  auto next = [&](std::string_view what) {
    if (i >= fields.size())
      ctx.fail(fmt::format("truncated line: expected {}", what));
    return fields[i++];
  };

  RawSynset raw;
  Synset& s = raw.synset;
  std::uint32_t offset = 0;
  if (!parse_int(next("synset_offset"), offset))
    ctx.fail("bad synset_offset");
  const auto lexfile_text = next("lex_filenum");
  if (lexfile_text.size() != 2 || !parse_int(lexfile_text, s.lexfile) || s.lexfile < 0 ||
      s.lexfile >= kLexDomainCount)
    ctx.fail(fmt::format("bad lex_filenum '{}'", lexfile_text));
  const auto ss_type = pos_from_pointer_char(next("ss_type"));
  if (!ss_type || *ss_type != file_pos)
    ctx.fail("ss_type does not match data file");
  s.id = SynsetId{file_pos, offset};

  unsigned w_cnt = 0;
  if (!parse_int(next("w_cnt"), w_cnt, 16) || w_cnt == 0)
    ctx.fail("bad w_cnt");
  for (unsigned w = 0; w < w_cnt; ++w) {
    s.words.push_back(clean_word(next("word")));
    unsigned lex_id = 0;
    if (!parse_int(next("lex_id"), lex_id, 16))
      ctx.fail("bad lex_id");
  }

  unsigned p_cnt = 0;
  if (!parse_int(next("p_cnt"), p_cnt))
    ctx.fail("bad p_cnt");
  for (unsigned p = 0; p < p_cnt; ++p) {
    const auto symbol = next("pointer_symbol");
    std::uint32_t target = 0;
    if (!parse_int(next("pointer offset"), target))
      ctx.fail("bad pointer offset");
    const auto target_pos = pos_from_pointer_char(next("pointer pos"));
    if (!target_pos)
      ctx.fail("bad pointer pos");
    const auto source_target = next("pointer source/target");
    if (source_target.size() != 4)
      ctx.fail("bad pointer source/target field");
    if (symbol == "@" || symbol == "@i") {
      if (*target_pos != file_pos)
        ctx.fail("hypernym pointer crosses part of speech");
      raw.pending_hypernyms.emplace_back(SynsetId{*target_pos, target}, ctx);
    }
  }
  // Any remaining fields are verb frames; not consumed.

  s.gloss = std::string(trim(line.substr(bar + 1)));
  return raw;
}

} // namespace

const std::array<LexDomain, kLexDomainCount>& lex_domains() { return kLexDomains; }

std::optional<int> lex_domain_by_name(std::string_view name) {
  for (const auto& d : kLexDomains)
    if (d.name == name)
      return d.file_no;
  return std::nullopt;
}

std::string to_string(SynsetId id) {
  constexpr std::array<char, 5> kChar{'n', 'v', 'a', 'r', '?'};
  return fmt::format("{}:{:08d}", kChar[static_cast<std::size_t>(id.pos)], id.offset);
}

WordNetDb WordNetDb::load(const std::filesystem::path& dir) {
  WordNetDb db;
  std::vector<RawSynset> raws;

  for (const PartOfSpeech pos : kWordNetPos) {
    const auto suffix = kFileSuffix[static_cast<std::size_t>(pos)];
    const auto data_path = dir / fmt::format("data.{}", suffix);
    auto in = open_or_throw(data_path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line.starts_with("  "))
        continue;
      raws.push_back(parse_data_line(line, pos, LineContext{data_path.filename().string(), line_no}));
    }
  }

  std::sort(raws.begin(), raws.end(),
            [](const RawSynset& a, const RawSynset& b) { return a.synset.id < b.synset.id; });
  db.synsets_.reserve(raws.size());
  for (std::size_t i = 0; i < raws.size(); ++i) {
    const auto id = raws[i].synset.id;
    if (!db.slots_.emplace(id, i).second)
      throw DataError(fmt::format("duplicate synset {}", to_string(id)));
  }
  for (auto& raw : raws) {
    for (const auto& [target, ctx] : raw.pending_hypernyms) {
      if (!db.slots_.contains(target))
        ctx.fail(fmt::format("hypernym pointer to unknown synset {}", to_string(target)));
      raw.synset.hypernyms.push_back(target);
    }
    db.synsets_.push_back(std::move(raw.synset));
  }

  for (const PartOfSpeech pos : kWordNetPos) {
    const auto suffix = kFileSuffix[static_cast<std::size_t>(pos)];
    const auto index_path = dir / fmt::format("index.{}", suffix);
    auto in = open_or_throw(index_path);
    auto& index = db.index_[pos_slot(pos)];
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line.starts_with("  "))
        continue;
      const LineContext ctx{index_path.filename().string(), line_no};
      const auto f = split_ws(line);
      if (f.size() < 6)
        ctx.fail("truncated index line");
      unsigned synset_cnt = 0, p_cnt = 0;
      if (!parse_int(f[2], synset_cnt) || !parse_int(f[3], p_cnt))
        ctx.fail("bad synset_cnt or p_cnt");
      const std::size_t first_offset = 4 + p_cnt + 2;
      if (f.size() != first_offset + synset_cnt)
        ctx.fail("field count does not match synset_cnt");
      std::vector<SynsetId> ids;
      for (std::size_t k = 0; k < synset_cnt; ++k) {
        std::uint32_t offset = 0;
        if (!parse_int(f[first_offset + k], offset))
          ctx.fail("bad synset offset");
        const SynsetId id{pos, offset};
        if (!db.slots_.contains(id))
          ctx.fail(fmt::format("index refers to unknown synset {}", to_string(id)));
        ids.push_back(id);
      }
      index[to_lower_ascii(f[0])] = std::move(ids);
    }

    const auto exc_path = dir / fmt::format("{}.exc", suffix);
    if (std::filesystem::exists(exc_path)) {
      auto exc = open_or_throw(exc_path);
      while (std::getline(exc, line)) {
        const auto f = split_ws(line);
        if (f.size() < 2)
          continue;
        auto& bases = db.exceptions_[pos_slot(pos)][to_lower_ascii(f[0])];
        for (std::size_t k = 1; k < f.size(); ++k)
          bases.push_back(to_lower_ascii(f[k]));
      }
    }
  }

  // Longest-path depth with cycle detection (iterative DFS, three colours).
  const std::size_t n = db.synsets_.size();
  db.depth_.assign(n, 0);
  std::vector<std::uint8_t> colour(n, 0); // 0 new, 1 on stack, 2 done
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != 0)
      continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [node, next_edge] = stack.back();
      const auto& hypers = db.synsets_[node].hypernyms;
      if (next_edge < hypers.size()) {
        const std::size_t parent = db.slots_.at(hypers[next_edge++]);
        if (colour[parent] == 1)
          throw DataError(fmt::format("hypernym cycle through synset {}",
                                      to_string(db.synsets_[parent].id)));
        if (colour[parent] == 0) {
          colour[parent] = 1;
          stack.emplace_back(parent, 0);
        }
        continue;
      }
      int d = 1;
      for (const auto& h : hypers)
        d = std::max(d, 1 + db.depth_[db.slots_.at(h)]);
      db.depth_[node] = d;
      colour[node] = 2;
      stack.pop_back();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& md = db.max_depth_[pos_slot(db.synsets_[i].pos())];
    md = std::max(md, db.depth_[i]);
  }
  return db;
}

std::size_t WordNetDb::slot(SynsetId id) const {
  const auto it = slots_.find(id);
  if (it == slots_.end())
    throw std::out_of_range(fmt::format("unknown synset {}", to_string(id)));
  return it->second;
}

const Synset* WordNetDb::find(SynsetId id) const {
  const auto it = slots_.find(id);
  return it == slots_.end() ? nullptr : &synsets_[it->second];
}

const Synset& WordNetDb::at(SynsetId id) const { return synsets_[slot(id)]; }

std::span<const SynsetId> WordNetDb::senses(std::string_view lemma, PartOfSpeech pos) const {
  if (pos == PartOfSpeech::Other)
    return {};
  const auto& index = index_[pos_slot(pos)];
  const auto it = index.find(std::string(lemma));
  if (it == index.end())
    return {};
  return it->second;
}

std::vector<const Synset*> WordNetDb::lookup(std::string_view lemma, PartOfSpeech pos) const {
  std::vector<const Synset*> out;
  for (const auto& id : senses(lemma, pos))
    out.push_back(&at(id));
  return out;
}

bool WordNetDb::contains(std::string_view lemma, PartOfSpeech pos) const {
  return !senses(lemma, pos).empty();
}

std::optional<std::string> WordNetDb::base_form(std::string_view word, PartOfSpeech pos) const {
  if (pos == PartOfSpeech::Other || word.empty())
    return std::nullopt;
  const std::string lower = to_lower_ascii(word);
  if (contains(lower, pos))
    return lower;
  const auto& exc = exceptions_[pos_slot(pos)];
  if (const auto it = exc.find(lower); it != exc.end())
    for (const auto& base : it->second)
      if (contains(base, pos))
        return base;
  for (const auto& rule : rules_for(pos)) {
    if (lower.size() <= rule.ending.size() || !lower.ends_with(rule.ending))
      continue;
    std::string candidate = lower.substr(0, lower.size() - rule.ending.size());
    candidate += rule.replacement;
    if (contains(candidate, pos))
      return candidate;
  }
  return std::nullopt;
}

int WordNetDb::depth(SynsetId id) const { return depth_[slot(id)]; }

int WordNetDb::max_depth(PartOfSpeech pos) const { return max_depth_[pos_slot(pos)]; }

std::unordered_map<SynsetId, int, SynsetIdHash> WordNetDb::ancestor_distances(SynsetId id) const {
  std::unordered_map<SynsetId, int, SynsetIdHash> dist{{id, 0}};
  std::vector<SynsetId> frontier{id};
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<SynsetId> next;
    for (const auto& s : frontier)
      for (const auto& h : at(s).hypernyms)
        if (dist.emplace(h, d).second)
          next.push_back(h);
    frontier = std::move(next);
  }
  return dist;
}

} // namespace opinex
