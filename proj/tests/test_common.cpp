#include "support.hpp"

#include <doctest.h>

#include <opinex/common.hpp>
#include <opinex/stopwords.hpp>

using namespace opinex;

TEST_CASE("polarity names round-trip") {
  for (const auto p : kPolarities)
    CHECK(parse_polarity(to_string(p)) == p);
  CHECK(parse_polarity("neg") == Polarity::Neg);
  CHECK_FALSE(parse_polarity("MIX").has_value());
  CHECK(index_of(Polarity::Neu) == 2);
}

TEST_CASE("part of speech names round-trip") {
  for (const auto p : {PartOfSpeech::Noun, PartOfSpeech::Verb, PartOfSpeech::Adj, PartOfSpeech::Adv,
                       PartOfSpeech::Other})
    CHECK(parse_part_of_speech(to_string(p)) == p);
  CHECK_FALSE(parse_part_of_speech("pronoun").has_value());
}

TEST_CASE("ascii helpers") {
  CHECK(to_lower_ascii("AbC-Ü") == "abc-Ü");
  CHECK(trim("  x y \t\n") == "x y");
  CHECK(trim("   ").empty());
}

TEST_CASE("english stopwords") {
  const auto& sw = Stopwords::english();
  CHECK(sw.contains("the"));
  CHECK(sw.contains("is"));
  CHECK_FALSE(sw.contains("book"));
}

TEST_CASE("bundled stopword file mirrors the built-in list") {
  std::istringstream in(opinex::test::read_file(opinex::test::data_dir() / "stopwords.txt"));
  std::size_t count = 0;
  for (std::string line; std::getline(in, line);) {
    const auto word = trim(line);
    if (word.empty() || word.front() == '#')
      continue;
    CHECK(Stopwords::english().contains(word));
    ++count;
  }
  CHECK(count == Stopwords::english().size());
}
