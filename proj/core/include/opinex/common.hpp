#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opinex {

/// Three-way sentiment class of a sentence or document.
enum class Polarity : std::uint8_t { Pos = 0, Neg = 1, Neu = 2 };

inline constexpr std::array<Polarity, 3> kPolarities{Polarity::Pos, Polarity::Neg,
                                                     Polarity::Neu};

constexpr std::size_t index_of(Polarity p) { return static_cast<std::size_t>(p); }

std::string_view to_string(Polarity p);

/// Strict parse of "POS", "NEG" or "NEU" (case-insensitive).
std::optional<Polarity> parse_polarity(std::string_view text);

enum class PartOfSpeech : std::uint8_t { Noun = 0, Verb = 1, Adj = 2, Adv = 3, Other = 4 };

inline constexpr std::array<PartOfSpeech, 4> kWordNetPos{PartOfSpeech::Noun, PartOfSpeech::Verb,
                                                         PartOfSpeech::Adj, PartOfSpeech::Adv};

/// "noun", "verb", "adj", "adv", "other".
std::string_view to_string(PartOfSpeech pos);
std::optional<PartOfSpeech> parse_part_of_speech(std::string_view text);

/// Input data that cannot be used: malformed files, schema violations, missing resources.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string to_lower_ascii(std::string_view text);
std::string_view trim(std::string_view text);

} // namespace opinex
