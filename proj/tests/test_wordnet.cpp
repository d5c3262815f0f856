#include "support.hpp"

#include <doctest.h>

#include <opinex/wordnet.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace opinex;
using opinex::test::fixture_db;

namespace {

const Synset& sense(std::string_view lemma, PartOfSpeech pos, std::size_t rank = 0) {
  const auto ids = fixture_db().senses(lemma, pos);
  REQUIRE(ids.size() > rank);
  return fixture_db().at(ids[rank]);
}

// ---- brute-force oracles -------------------------------------------------

int oracle_depth(const WordNetDb& db, SynsetId id) {
  int best = 1;
  for (const auto& h : db.at(id).hypernyms)
    best = std::max(best, 1 + oracle_depth(db, h));
  return best;
}

void collect_ancestors(const WordNetDb& db, SynsetId id, int dist, std::map<SynsetId, int>& out) {
  auto [it, inserted] = out.emplace(id, dist);
  if (!inserted) {
    if (it->second <= dist)
      return;
    it->second = dist;
  }
  for (const auto& h : db.at(id).hypernyms)
    collect_ancestors(db, h, dist + 1, out);
}

struct OracleLcs {
  std::optional<SynsetId> lcs;
  int depth = 0;
  std::optional<int> path;
};

OracleLcs oracle_lcs(const WordNetDb& db, const Synset& a, const Synset& b) {
  std::map<SynsetId, int> up_a, up_b;
  collect_ancestors(db, a.id, 0, up_a);
  collect_ancestors(db, b.id, 0, up_b);
  OracleLcs r;
  for (const auto& [id, da] : up_a) {
    const auto it = up_b.find(id);
    if (it == up_b.end())
      continue;
    const int d = oracle_depth(db, id);
    if (!r.lcs || d > r.depth) { // map order: lowest id wins ties
      r.lcs = id;
      r.depth = d;
    }
    const int len = da + it->second;
    if (!r.path || len < *r.path)
      r.path = len;
  }
  return r;
}

double oracle_wup(const WordNetDb& db, const Synset& a, const Synset& b) {
  if (a.pos() == PartOfSpeech::Adj || a.pos() == PartOfSpeech::Adv)
    return a.id == b.id ? 1.0 : 0.0;
  const auto r = oracle_lcs(db, a, b);
  if (!r.lcs)
    return 0.0;
  return 2.0 * r.depth / (oracle_depth(db, a.id) + oracle_depth(db, b.id));
}

// ---- tiny WNDB writer for loader error cases ----------------------------

struct MiniWordNet {
  std::filesystem::path dir;
  std::map<std::string, std::string> files;

  explicit MiniWordNet(const std::string& name) : dir(opinex::test::scratch_dir(name)) {
    for (const char* pos : {"noun", "verb", "adj", "adv"}) {
      files[std::string("data.") + pos] = "  1 test header\n";
      files[std::string("index.") + pos] = "  1 test header\n";
    }
  }
  void write() const {
    for (const auto& [name, text] : files) {
      std::ofstream out(dir / name);
      out << text;
    }
  }
  std::string load_error() const {
    write();
    try {
      WordNetDb::load(dir);
    } catch (const DataError& e) {
      return e.what();
    }
    return {};
  }
};

} // namespace

TEST_CASE("lexicographer file table matches the published names") {
  const std::array<std::string_view, 45> names{
      "adj.all",          "adj.pert",           "adv.all",          "noun.Tops",          "noun.act",
      "noun.animal",      "noun.artifact",      "noun.attribute",   "noun.body",          "noun.cognition",
      "noun.communication", "noun.event",       "noun.feeling",     "noun.food",          "noun.group",
      "noun.location",    "noun.motive",        "noun.object",      "noun.person",        "noun.phenomenon",
      "noun.plant",       "noun.possession",    "noun.process",     "noun.quantity",      "noun.relation",
      "noun.shape",       "noun.state",         "noun.substance",   "noun.time",          "verb.body",
      "verb.change",      "verb.cognition",     "verb.communication", "verb.competition", "verb.consumption",
      "verb.contact",     "verb.creation",      "verb.emotion",     "verb.motion",        "verb.perception",
      "verb.possession",  "verb.social",        "verb.stative",     "verb.weather",       "adj.ppl"};
  for (int i = 0; i < kLexDomainCount; ++i) {
    CHECK(lex_domains()[i].file_no == i);
    CHECK(lex_domains()[i].name == names[i]);
    CHECK(lex_domain_by_name(names[i]) == i);
  }
  CHECK_FALSE(lex_domain_by_name("noun.nothing").has_value());
}

TEST_CASE("fixture WordNet loads with the expected counts and depths") {
  const auto& db = fixture_db();
  CHECK(db.size() == 77);
  std::map<PartOfSpeech, int> per_pos;
  for (const auto& s : db.synsets())
    ++per_pos[s.pos()];
  CHECK(per_pos[PartOfSpeech::Noun] == 48);
  CHECK(per_pos[PartOfSpeech::Verb] == 16);
  CHECK(per_pos[PartOfSpeech::Adj] == 10);
  CHECK(per_pos[PartOfSpeech::Adv] == 3);
  // entity > abstraction > state > feeling > emotion > sadness > sorrow > grief
  CHECK(db.max_depth(PartOfSpeech::Noun) == 8);
  CHECK(db.depth(sense("grief", PartOfSpeech::Noun).id) == 8);
  CHECK(db.max_depth(PartOfSpeech::Verb) == 2);
  CHECK(db.max_depth(PartOfSpeech::Adj) == 1);

  int oracle_max = 0;
  for (const auto& s : db.synsets()) {
    CHECK(db.depth(s.id) == oracle_depth(db, s.id));
    if (s.pos() == PartOfSpeech::Noun)
      oracle_max = std::max(oracle_max, oracle_depth(db, s.id));
  }
  CHECK(oracle_max == db.max_depth(PartOfSpeech::Noun));
}

TEST_CASE("lexfile, lookup order and the verb.possession example") {
  CHECK(sense("phone", PartOfSpeech::Noun).lexfile == 6);
  const auto books = fixture_db().lookup("book", PartOfSpeech::Noun);
  REQUIRE(books.size() == 2);
  CHECK(books[0]->lexfile == 10);
  CHECK(books[1]->lexfile == 6);
  CHECK(books[0]->gloss.find("written work") != std::string::npos);
  CHECK(fixture_db().lookup("zzzz", PartOfSpeech::Noun).empty());
  const auto buy = fixture_db().lookup("buy", PartOfSpeech::Verb);
  REQUIRE(buy.size() == 1);
  CHECK(buy[0]->lexfile == 40);
  CHECK(lex_domains()[buy[0]->lexfile].name == "verb.possession");
  // satellite adjectives fold into adj
  CHECK(fixture_db().contains("fantastic", PartOfSpeech::Adj));
  CHECK(fixture_db().contains("one-dimensional", PartOfSpeech::Adj));
}

TEST_CASE("indexed ids resolve to synsets of the same pos and hypernyms are shallower") {
  const auto& db = fixture_db();
  for (const auto& s : db.synsets()) {
    for (const auto& w : s.words) {
      const auto ids = db.senses(w, s.pos());
      CHECK(std::find(ids.begin(), ids.end(), s.id) != ids.end());
      for (const auto& id : ids)
        CHECK(db.at(id).pos() == s.pos());
    }
    for (const auto& h : s.hypernyms)
      CHECK(db.depth(h) < db.depth(s.id));
  }
}

TEST_CASE("synset offsets and lexfiles round-trip against the data files") {
  const auto dir = opinex::test::fixture_dir() / "wordnet";
  const std::map<PartOfSpeech, const char*> files{{PartOfSpeech::Noun, "data.noun"},
                                                 {PartOfSpeech::Verb, "data.verb"},
                                                 {PartOfSpeech::Adj, "data.adj"},
                                                 {PartOfSpeech::Adv, "data.adv"}};
  std::size_t seen = 0;
  for (const auto& [pos, name] : files) {
    const auto text = opinex::test::read_file(dir / name);
    for (const auto& s : fixture_db().synsets()) {
      if (s.pos() != pos)
        continue;
      // The offset is the byte position of the line; the line starts with the
      // 8-digit offset and the 2-digit lexfile.
      const auto line = text.substr(s.id.offset, text.find('\n', s.id.offset) - s.id.offset);
      const std::string expected = fmt::format("{:08d} {:02d}", s.id.offset, s.lexfile);
      CHECK(line.substr(0, expected.size()) == expected);
      ++seen;
    }
  }
  CHECK(seen == fixture_db().size());
}

TEST_CASE("morphology: exceptions before detachment rules") {
  const auto& db = fixture_db();
  CHECK(db.base_form("is", PartOfSpeech::Verb) == "be");
  CHECK(db.base_form("bought", PartOfSpeech::Verb) == "buy");
  CHECK(db.base_form("cameras", PartOfSpeech::Noun) == "camera");
  CHECK(db.base_form("batteries", PartOfSpeech::Noun) == "battery");
  CHECK(db.base_form("enjoyed", PartOfSpeech::Verb) == "enjoy");
  CHECK(db.base_form("thinking", PartOfSpeech::Verb) == "think");
  CHECK(db.base_form("best", PartOfSpeech::Adj) == "good");
  CHECK_FALSE(db.base_form("zzzz", PartOfSpeech::Noun).has_value());
}

TEST_CASE("loader errors name the file and line") {
  SUBCASE("missing data.verb") {
    MiniWordNet wn("wn-missing");
    wn.write();
    std::filesystem::remove(wn.dir / "data.verb");
    try {
      WordNetDb::load(wn.dir);
      FAIL("expected DataError");
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find("data.verb") != std::string::npos);
    }
  }
  SUBCASE("malformed data line") {
    MiniWordNet wn("wn-malformed");
    wn.files["data.noun"] += "00000017 03 n 01 entity 0 000 | root\n00000050 3x n 01 thing 0 000 | broken\n";
    const auto msg = wn.load_error();
    CHECK(msg.find("data.noun:3") != std::string::npos);
    CHECK(msg.find("lex_filenum") != std::string::npos);
  }
  SUBCASE("hypernym cycle") {
    MiniWordNet wn("wn-cycle");
    wn.files["data.noun"] += "00000017 03 n 01 alpha 0 001 @ 00000080 n 0000 | a\n"
                             "00000080 03 n 01 beta 0 001 @ 00000017 n 0000 | b\n";
    CHECK(wn.load_error().find("cycle") != std::string::npos);
  }
  SUBCASE("dangling hypernym") {
    MiniWordNet wn("wn-dangling");
    wn.files["data.noun"] += "00000017 03 n 01 alpha 0 001 @ 00099999 n 0000 | a\n";
    const auto msg = wn.load_error();
    CHECK(msg.find("data.noun:2") != std::string::npos);
    CHECK(msg.find("unknown synset") != std::string::npos);
  }
  SUBCASE("index pointing nowhere") {
    MiniWordNet wn("wn-index");
    wn.files["data.noun"] += "00000017 03 n 01 alpha 0 000 | a\n";
    wn.files["index.noun"] += "alpha n 1 0 1 0 00000099\n";
    CHECK(wn.load_error().find("index.noun:2") != std::string::npos);
  }
  SUBCASE("well-formed mini WordNet with instance hypernym and verb frames") {
    MiniWordNet wn("wn-ok");
    wn.files["data.noun"] += "00000017 03 n 01 alpha 0 000 | a\n"
                             "00000050 05 n 02 beta 0 Beta_Two 1 001 @i 00000017 n 0000 | b\n";
    wn.files["data.verb"] += "00000017 29 v 01 doze 0 000 01 + 02 00 | sleep lightly\n";
    wn.files["index.noun"] += "beta n 1 1 @ 1 0 00000050\n";
    wn.write();
    const auto db = WordNetDb::load(wn.dir);
    CHECK(db.size() == 3);
    const auto& beta = db.at({PartOfSpeech::Noun, 50});
    CHECK(beta.words == std::vector<std::string>{"beta", "beta_two"});
    CHECK(beta.lexfile == 5);
    CHECK(beta.hypernyms.size() == 1);
    CHECK(db.depth(beta.id) == 2);
    CHECK(db.at({PartOfSpeech::Verb, 17}).gloss == "sleep lightly");
  }
}

TEST_CASE("lcs_depth examples") {
  const auto& db = fixture_db();
  const auto& dog = sense("dog", PartOfSpeech::Noun);
  const auto& cat = sense("cat", PartOfSpeech::Noun);
  const auto same = lcs_depth(db, dog, dog);
  REQUIRE(same.lcs != nullptr);
  CHECK(same.lcs->id == dog.id);
  CHECK(same.depth_lcs == same.depth_a);

  // entity > physical_entity > object > living_thing > organism > animal > dog
  const auto r = lcs_depth(db, dog, cat);
  REQUIRE(r.lcs != nullptr);
  CHECK(r.lcs->words.front() == "animal");
  CHECK(r.depth_lcs == 6);
  CHECK(r.depth_a == 7);
  CHECK(r.depth_b == 7);
  CHECK(similarity(db, dog, cat, SimilarityMeasure::WuPalmer) == doctest::Approx(12.0 / 14.0).epsilon(1e-12));
  CHECK(similarity(db, dog, cat, SimilarityMeasure::Path) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const auto& buy = sense("buy", PartOfSpeech::Verb);
  const auto& sleep = sense("sleep", PartOfSpeech::Verb);
  CHECK(lcs_depth(db, buy, sleep).lcs == nullptr);
  CHECK(similarity(db, buy, sleep, SimilarityMeasure::WuPalmer) == 0.0);
  CHECK_FALSE(shortest_path_length(db, buy, sleep).has_value());

  CHECK_THROWS_AS(lcs_depth(db, dog, buy), std::invalid_argument);
  CHECK_THROWS_AS(similarity(db, dog, buy, SimilarityMeasure::Path), std::invalid_argument);
}

TEST_CASE("lch normalization") {
  const auto& db = fixture_db();
  const auto& dog = sense("dog", PartOfSpeech::Noun);
  const auto& cat = sense("cat", PartOfSpeech::Noun);
  CHECK(similarity(db, dog, dog, SimilarityMeasure::LeacockChodorow) == doctest::Approx(1.0));
  const double two_d = 2.0 * db.max_depth(PartOfSpeech::Noun);
  const double expected = std::log(two_d / 2.0) / std::log(two_d);
  CHECK(similarity(db, dog, cat, SimilarityMeasure::LeacockChodorow) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("happiness has two hypernym paths: depth uses the longest, path the shortest") {
  const auto& db = fixture_db();
  const auto& happiness = sense("happiness", PartOfSpeech::Noun);
  // via joy: entity, abstraction, state, feeling, emotion, joy, happiness
  CHECK(db.depth(happiness.id) == 7);
  const auto& state = sense("state", PartOfSpeech::Noun);
  CHECK(shortest_path_length(db, happiness, state) == 1);
  const auto dist = db.ancestor_distances(happiness.id);
  CHECK(dist.at(state.id) == 1);
  CHECK(dist.at(happiness.id) == 0);
}

TEST_CASE("similarity properties over every same-pos fixture pair") {
  const auto& db = fixture_db();
  const auto synsets = db.synsets();
  for (const auto measure :
       {SimilarityMeasure::Path, SimilarityMeasure::WuPalmer, SimilarityMeasure::LeacockChodorow}) {
    for (const auto& a : synsets) {
      CHECK(similarity(db, a, a, measure) == doctest::Approx(1.0).epsilon(1e-12));
      for (const auto& b : synsets) {
        if (a.pos() != b.pos())
          continue;
        const double ab = similarity(db, a, b, measure);
        CHECK(ab == similarity(db, b, a, measure));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
      }
    }
  }
}

TEST_CASE("wup and path match the exhaustive ancestor oracle") {
  const auto& db = fixture_db();
  for (const auto& a : db.synsets()) {
    for (const auto& b : db.synsets()) {
      if (a.pos() != b.pos())
        continue;
      CHECK(std::abs(similarity(db, a, b, SimilarityMeasure::WuPalmer) - oracle_wup(db, a, b)) <= 1e-12);
      if (a.pos() == PartOfSpeech::Noun || a.pos() == PartOfSpeech::Verb) {
        const auto r = oracle_lcs(db, a, b);
        const auto lcs = lcs_depth(db, a, b);
        CHECK((lcs.lcs ? std::optional<SynsetId>(lcs.lcs->id) : std::nullopt) == r.lcs);
        CHECK(shortest_path_length(db, a, b) == r.path);
        const double path = r.path ? 1.0 / (1.0 + *r.path) : 0.0;
        CHECK(std::abs(similarity(db, a, b, SimilarityMeasure::Path) - path) <= 1e-12);
      }
    }
  }
}

TEST_CASE("adjective and adverb similarity is identity") {
  const auto& db = fixture_db();
  const auto& good = sense("good", PartOfSpeech::Adj);
  const auto& bad = sense("bad", PartOfSpeech::Adj);
  CHECK(similarity(db, good, good, SimilarityMeasure::WuPalmer) == 1.0);
  CHECK(similarity(db, good, bad, SimilarityMeasure::WuPalmer) == 0.0);
  CHECK(similarity(db, good, bad, SimilarityMeasure::LeacockChodorow) == 0.0);
}

TEST_CASE("similarity measure names") {
  CHECK(parse_similarity_measure("wup") == SimilarityMeasure::WuPalmer);
  CHECK(parse_similarity_measure("path") == SimilarityMeasure::Path);
  CHECK(parse_similarity_measure("lch") == SimilarityMeasure::LeacockChodorow);
  CHECK_FALSE(parse_similarity_measure("jcn").has_value());
  CHECK(to_string(SimilarityMeasure::WuPalmer) == "wup");
  CHECK(to_string(SynsetId{PartOfSpeech::Verb, 42}) == "v:00000042");
}
