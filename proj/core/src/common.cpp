#include <opinex/common.hpp>

#include <algorithm>
#include <cctype>

namespace opinex {

std::string_view to_string(Polarity p) {
  switch (p) {
  case Polarity::Pos:
    return "POS";
  case Polarity::Neg:
    return "NEG";
  case Polarity::Neu:
    return "NEU";
  }
  return "NEU";
}

std::optional<Polarity> parse_polarity(std::string_view text) {
  const std::string lower = to_lower_ascii(text);
  if (lower == "pos")
    return Polarity::Pos;
  if (lower == "neg")
    return Polarity::Neg;
  if (lower == "neu")
    return Polarity::Neu;
  return std::nullopt;
}

std::string_view to_string(PartOfSpeech pos) {
  switch (pos) {
  case PartOfSpeech::Noun:
    return "noun";
  case PartOfSpeech::Verb:
    return "verb";
  case PartOfSpeech::Adj:
    return "adj";
  case PartOfSpeech::Adv:
    return "adv";
  case PartOfSpeech::Other:
    return "other";
  }
  return "other";
}

std::optional<PartOfSpeech> parse_part_of_speech(std::string_view text) {
  const std::string lower = to_lower_ascii(text);
  if (lower == "noun" || lower == "n")
    return PartOfSpeech::Noun;
  if (lower == "verb" || lower == "v")
    return PartOfSpeech::Verb;
  if (lower == "adj" || lower == "a" || lower == "s")
    return PartOfSpeech::Adj;
  if (lower == "adv" || lower == "r")
    return PartOfSpeech::Adv;
  if (lower == "other")
    return PartOfSpeech::Other;
  return std::nullopt;
}

std::string to_lower_ascii(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(c < 0x80 ? std::tolower(c) : c);
  });
  return out;
}

std::string_view trim(std::string_view text) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front()))
    text.remove_prefix(1);
  while (!text.empty() && is_space(text.back()))
    text.remove_suffix(1);
  return text;
}

} // namespace opinex
