#include "support.hpp"

#include <doctest.h>

#include <opinex/lexicons.hpp>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <random>

using namespace opinex;
using opinex::test::fixture_lexicons;
using opinex::test::make_sentence;

namespace {

const Stopwords& sw() { return Stopwords::english(); }

EnsemblePolicy default_policy() {
  EnsemblePolicy p;
  p.order = {"sentiwordnet", "wordlist", "mpqa", "tsv"};
  return p;
}

std::string error_of(auto&& f) {
  try {
    f();
  } catch (const DataError& e) {
    return e.what();
  }
  return {};
}

Lexicon tsv(const std::string& text, const std::string& name = "tsv") {
  std::istringstream in(text);
  return parse_tsv(in, name);
}

} // namespace

TEST_CASE("lexicon keys") {
  CHECK(lexicon_key("One-Dimensional") == "one_dimensional");
  CHECK(lexicon_key("put to sleep") == "put_to_sleep");
  CHECK(lexicon_key("co_op") == "co_op");
}

TEST_CASE("SentiWordNet folds senses by 1/k weights") {
  const auto set = fixture_lexicons();
  const auto& swn = *set.find("sentiwordnet");
  CHECK(swn.format() == LexiconFormat::SentiWordNet);
  // fun#1 = 0.5, fun#2 = 0: (0.5 * 1 + 0 * 1/2) / (1 + 1/2)
  CHECK(*swn.lookup("fun", LexPos::Adj) == doctest::Approx(1.0 / 3.0));
  CHECK(*swn.lookup("grief", LexPos::Noun) == doctest::Approx(-0.625));
  CHECK(*swn.lookup("very", LexPos::Adv) == 0.0);
  CHECK(*swn.lookup("one_dimensional", LexPos::Adj) == 0.0);
  CHECK(*swn.lookup("undependable", LexPos::Adj) == doctest::Approx(-0.5));
  CHECK(swn.lookup("fun", LexPos::Noun) == std::nullopt);
  CHECK(*swn.lookup("fun", LexPos::Any) == doctest::Approx(1.0 / 3.0));
  CHECK(swn.lookup("zzz", LexPos::Any) == std::nullopt);

  std::istringstream multi("n\t1\t0.5\t0\tx#1 x#3\tg\nn\t2\t0\t0.5\tx#2\tg\n");
  const auto lex = parse_sentiwordnet(multi);
  // ranks 1, 2, 3 with scores 0.5, -0.5, 0.5
  CHECK(*lex.lookup("x", LexPos::Noun) == doctest::Approx((0.5 - 0.25 + 0.5 / 3.0) / (1 + 0.5 + 1.0 / 3.0)));
}

TEST_CASE("word lists score +1 and -1 under any") {
  const auto set = fixture_lexicons();
  const auto& wl = *set.find("wordlist");
  CHECK(*wl.lookup("one_dimensional", LexPos::Any) == -1.0);
  CHECK(*wl.lookup("one_dimensional", LexPos::Adj) == -1.0);
  CHECK(*wl.lookup("stylish", LexPos::Noun) == 1.0);
  CHECK(wl.contains_lemma("disproportionately"));
  std::istringstream both("; comment\nfoo\nfoo\n");
  CHECK(parse_wordlist(both, Polarity::Neg).size() == 1);
}

TEST_CASE("MPQA strength and prior mapping") {
  const auto set = fixture_lexicons();
  const auto& mpqa = *set.find("mpqa");
  CHECK(*mpqa.lookup("abandon", LexPos::Verb) == -0.5);
  CHECK(*mpqa.lookup("fun", LexPos::Adj) == 0.5);
  CHECK(*mpqa.lookup("bad", LexPos::Adj) == -1.0);
  CHECK(*mpqa.lookup("rage", LexPos::Noun) == -1.0); // anypos
  CHECK(*mpqa.lookup("feel", LexPos::Verb) == 0.0);
  CHECK(*mpqa.lookup("disappointment", LexPos::Noun) == -0.5);
  CHECK(*mpqa.lookup("really", LexPos::Adv) == 0.0);
}

TEST_CASE("TSV entries and clamping") {
  const auto set = fixture_lexicons();
  const auto& t = *set.find("tsv");
  CHECK(*t.lookup("put_to_sleep", LexPos::Verb) == -1.0);
  CHECK(*t.lookup("one_dimensional", LexPos::Adj) == doctest::Approx(-0.8));
  CHECK(*t.lookup("co_op", LexPos::Noun) == doctest::Approx(0.2));
  CHECK(*t.lookup("filled_with_sadness", LexPos::Verb) == -1.0);
  CHECK(t.clamped_count() == 1);
  CHECK(t.size() == 4);

  const auto dup = tsv("a\tnoun\t1\na\tnoun\t0\n");
  CHECK(*dup.lookup("a", LexPos::Noun) == 0.5);
}

TEST_CASE("malformed lexicon lines report their line number") {
  CHECK(error_of([] { tsv("# header\nok\tnoun\t1\nbad line\n"); }).find("line 3") != std::string::npos);
  CHECK(error_of([] { tsv("x\tpronoun\t1\n"); }).find("line 1") != std::string::npos);
  CHECK(error_of([] { tsv("x\tnoun\tabc\n"); }).find("line 1") != std::string::npos);
  CHECK(error_of([] {
          std::istringstream in("# c\na\t1\t0.5\n");
          parse_sentiwordnet(in);
        }).find("line 2") != std::string::npos);
  CHECK(error_of([] {
          std::istringstream in("type=strongsubj len=1 word1=x pos1=adj priorpolarity=sideways\n");
          parse_mpqa(in);
        }).find("line 1") != std::string::npos);
  CHECK(error_of([] { load_lexicon("/nonexistent/lex.tsv", LexiconFormat::Tsv); }).find("/nonexistent/lex.tsv") !=
        std::string::npos);
}

TEST_CASE("format, pos and strategy names") {
  CHECK(parse_lexicon_format("mpqa") == LexiconFormat::Mpqa);
  CHECK_FALSE(parse_lexicon_format("csv").has_value());
  CHECK(parse_lex_pos("any") == LexPos::Any);
  CHECK(lex_pos_for(PartOfSpeech::Other) == LexPos::Any);
  CHECK(lex_pos_for(PartOfSpeech::Adv) == LexPos::Adv);
  CHECK(parse_ensemble_strategy("majority") == EnsembleStrategy::Majority);
  CHECK(to_string(EnsembleStrategy::FirstNonNeutral) == "first-non-neutral");
}

TEST_CASE("first-non-neutral takes the second opinion for neutral entries") {
  const auto set = fixture_lexicons();
  const auto v = ensemble_polarity("disproportionately", LexPos::Adv, set, default_policy());
  CHECK(v.polarity == Polarity::Neg);
  CHECK(v.score == -1.0);
  CHECK(v.provenance == "wordlist");
  CHECK(v.found);

  const auto fun = ensemble_polarity("fun", LexPos::Adj, set, default_policy());
  CHECK(fun.polarity == Polarity::Pos);
  CHECK(fun.provenance == "sentiwordnet");

  const auto very = ensemble_polarity("very", LexPos::Adv, set, default_policy());
  CHECK(very.polarity == Polarity::Neu);
  CHECK(very.found);
  CHECK(very.provenance == "sentiwordnet");

  const auto none = ensemble_polarity("zzz", LexPos::Any, set, default_policy());
  CHECK_FALSE(none.found);
  CHECK(none.provenance == "none");

  auto narrow = default_policy();
  narrow.neutral_band = 0.4;
  CHECK(ensemble_polarity("fun", LexPos::Adj, set, narrow).provenance == "wordlist");

  CHECK_THROWS_AS(ensemble_polarity("x", LexPos::Any, set, EnsemblePolicy{}), std::invalid_argument);
  EnsemblePolicy unknown;
  unknown.order = {"liwc"};
  CHECK_THROWS_AS(ensemble_polarity("x", LexPos::Any, set, unknown), std::invalid_argument);
}

TEST_CASE("majority voting and ties") {
  LexiconSet set;
  set.add(tsv("x\tany\t0.5\ny\tany\t0.5\nz\tany\t0\n", "a"));
  set.add(tsv("x\tany\t0.9\ny\tany\t-0.5\nz\tany\t0\n", "b"));
  set.add(tsv("x\tany\t-0.4\nz\tany\t0.3\n", "c"));
  EnsemblePolicy p;
  p.order = {"a", "b", "c"};
  p.strategy = EnsembleStrategy::Majority;
  const auto x = ensemble_polarity("x", LexPos::Any, set, p);
  CHECK(x.polarity == Polarity::Pos);
  CHECK(x.score == doctest::Approx(0.7));
  CHECK(x.provenance == "vote");
  CHECK(ensemble_polarity("y", LexPos::Any, set, p).polarity == Polarity::Neu); // 1-1 tie
  CHECK(ensemble_polarity("z", LexPos::Any, set, p).polarity == Polarity::Neu); // neutral majority
  CHECK_THROWS_AS(set.add(tsv("", "a")), std::invalid_argument);
}

TEST_CASE("loading order of lexicon lines does not matter") {
  std::vector<std::string> lines{"a\tnoun\t0.5", "b\tverb\t-0.2", "a\tnoun\t0.1", "c\tany\t2", "d\tadj\t0"};
  std::mt19937_64 rng(31);
  const auto reference = tsv(fmt::format("{}\n", fmt::join(lines, "\n"))).entries();
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(lines.begin(), lines.end(), rng);
    const auto shuffled = tsv(fmt::format("{}\n", fmt::join(lines, "\n"))).entries();
    REQUIRE(shuffled.size() == reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) {
      CHECK(shuffled[i].lemma == reference[i].lemma);
      CHECK(shuffled[i].score == doctest::Approx(reference[i].score).epsilon(1e-15));
    }
  }
  CHECK(fixture_lexicons().default_order() == std::vector<std::string>{"sentiwordnet", "wordlist", "mpqa", "tsv"});
}

TEST_CASE("multi-word units and stopword gaps") {
  const auto set = fixture_lexicons();
  const auto s6 = make_sentence("First of all, this book put me to sleep several times.");
  const auto no_gap = sentence_lexicon_score(s6, set, default_policy(), sw(), 0);
  CHECK(no_gap.hit_count == 0);
  const auto gap = sentence_lexicon_score(s6, set, default_policy(), sw(), 1);
  CHECK(gap.net == -1.0);
  CHECK(gap.hit_count == 1);
  const auto matches = match_lexicon_units(s6, set, default_policy(), sw(), 1);
  const auto it = std::find_if(matches.begin(), matches.end(), [](const auto& m) { return m.key == "put_to_sleep"; });
  REQUIRE(it != matches.end());
  CHECK(it->verdict.provenance == "tsv");
  CHECK(s6.tokens[it->first_token].surface == "put");
  CHECK(s6.tokens[it->last_token].surface == "sleep");

  // two tokens joined, longest match wins over "dimensional"
  const auto s7 = make_sentence("This is a very one dimensional book.");
  const auto s7_matches = match_lexicon_units(s7, set, default_policy(), sw());
  CHECK(std::any_of(s7_matches.begin(), s7_matches.end(), [](const auto& m) { return m.key == "one_dimensional"; }));
  CHECK(sentence_lexicon_score(s7, set, default_policy(), sw()).net == -1.0);

  const auto s5 = make_sentence("The book is disproportionately focused on multilayer feedback networks.");
  CHECK(sentence_lexicon_score(s5, set, default_policy(), sw()).sum_neg == -1.0);
}

TEST_CASE("sentence score arithmetic") {
  LexiconSet set;
  set.add(tsv("great\tany\t1\nmeh\tany\t-0.5\nokay\tany\t0.01\n"));
  EnsemblePolicy p;
  p.order = {"tsv"};
  const auto score = sentence_lexicon_score(make_sentence("great but meh and okay", Polarity::Neu, nullptr), set, p, sw());
  CHECK(score == LexiconScore{1.0, -0.5, 0.5, 2});
  CHECK(sentence_lexicon_score(make_sentence("", Polarity::Neu, nullptr), set, p, sw()) == LexiconScore{});
  CHECK(banded_verdict(0.05, 0.05) == Polarity::Neu);
  CHECK(banded_verdict(-0.0501, 0.05) == Polarity::Neg);
}
