#include <opinex/metachar.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace opinex {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) != 0;
}
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

double to_number(std::string_view digits) {
  double v = 0.0;
  std::from_chars(digits.data(), digits.data() + digits.size(), v);
  return v;
}

std::string read_file(const std::filesystem::path& path, std::string_view what) {
  std::ifstream in(path);
  if (!in)
    throw DataError(fmt::format("cannot open {} '{}'", what, path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

nlohmann::json parse_json(std::string_view text, std::string_view what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(fmt::format("{}: malformed JSON: {}", what, e.what()));
  }
}

bool iequals_prefix(std::string_view text, std::size_t at, std::string_view lower_prefix) {
  if (text.size() - at < lower_prefix.size())
    return false;
  for (std::size_t k = 0; k < lower_prefix.size(); ++k)
    if (std::tolower(static_cast<unsigned char>(text[at + k])) !=
        static_cast<unsigned char>(lower_prefix[k]))
      return false;
  return true;
}

} // namespace

Polarity rating_polarity(double x, double y, const RatingThresholds& thresholds) {
  if (!(y > 0.0) || !(x >= 0.0) || x > y)
    throw std::invalid_argument(fmt::format("rating {}/{} requires 0 <= x <= y and y > 0", x, y));
  const double r = x / y;
  if (r <= thresholds.negative_max)
    return Polarity::Neg;
  if (r >= thresholds.positive_min)
    return Polarity::Pos;
  return Polarity::Neu;
}

std::vector<RatioRating> extract_ratings(std::string_view text, const RatingOptions& options) {
  std::vector<RatioRating> out;
  for (std::size_t slash = text.find('/'); slash != std::string_view::npos;
       slash = text.find('/', slash + 1)) {
    // numerator: digits with an optional ".digits" tail
    std::size_t begin = slash;
    while (begin > 0 && is_digit(text[begin - 1]))
      --begin;
    if (begin >= 2 && text[begin - 1] == '.' && is_digit(text[begin - 2])) {
      begin -= 1;
      while (begin > 0 && is_digit(text[begin - 1]))
        --begin;
    }
    if (begin == slash || !is_digit(text[begin]))
      continue;
    if (begin > 0) {
      const char before = text[begin - 1];
      if (is_alnum(before) || before == '/' || before == '.')
        continue;
    }

    std::size_t end = slash + 1;
    while (end < text.size() && is_digit(text[end]))
      ++end;
    if (end == slash + 1)
      continue;
    if (end + 1 < text.size() && text[end] == '.' && is_digit(text[end + 1])) {
      ++end;
      while (end < text.size() && is_digit(text[end]))
        ++end;
    }
    if (end < text.size() && (is_alnum(text[end]) || text[end] == '/'))
      continue;

    const double x = to_number(text.substr(begin, slash - begin));
    const double y = to_number(text.substr(slash + 1, end - slash - 1));
    if (std::find(options.denominators.begin(), options.denominators.end(), y) ==
            options.denominators.end() ||
        x > y)
      continue;
    out.push_back({x, y, begin, end, rating_polarity(x, y, options.thresholds)});
  }
  return out;
}

CueTable CueTable::defaults() {
  return CueTable{{{"pros", Polarity::Pos},
                   {"the good", Polarity::Pos},
                   {"likes", Polarity::Pos},
                   {"+", Polarity::Pos},
                   {"cons", Polarity::Neg},
                   {"the bad", Polarity::Neg},
                   {"dislikes", Polarity::Neg},
                   {"-", Polarity::Neg}}};
}

CueTable CueTable::parse(std::string_view json_text) {
  const auto doc = parse_json(json_text, "cue table");
  if (!doc.is_object())
    throw DataError("cue table: expected an object with 'pos' and 'neg' arrays");
  CueTable table;
  for (const auto& [key, polarity] : {std::pair{"pos", Polarity::Pos}, {"neg", Polarity::Neg}}) {
    if (!doc.contains(key))
      continue;
    if (!doc[key].is_array())
      throw DataError(fmt::format("cue table: '{}' must be an array of strings", key));
    for (const auto& cue : doc[key]) {
      if (!cue.is_string() || cue.get<std::string>().empty())
        throw DataError(fmt::format("cue table: '{}' must hold non-empty strings", key));
      table.cues.emplace_back(to_lower_ascii(cue.get<std::string>()), polarity);
    }
  }
  return table;
}

CueTable CueTable::load(const std::filesystem::path& path) {
  return parse(read_file(path, "cue table"));
}

std::vector<LabeledSegment> extract_labeled_segments(std::string_view text, const CueTable& cues) {
  // Longest cues first.
  std::vector<std::pair<std::string, Polarity>> ordered = cues.cues;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });

  struct Hit {
    std::size_t cue_begin;
    std::size_t body_begin;
    std::string cue;
    Polarity prior;
  };
  std::vector<Hit> hits;

  auto try_match = [&](std::size_t at) {
    while (at < text.size() && is_space(text[at]))
      ++at;
    for (const auto& [cue, prior] : ordered) {
      if (!iequals_prefix(text, at, cue))
        continue;
      std::size_t k = at + cue.size();
      while (k < text.size() && (text[k] == ' ' || text[k] == '\t'))
        ++k;
      if (k < text.size() && text[k] == ':') {
        hits.push_back({at, k + 1, std::string(text.substr(at, cue.size())), prior});
        return;
      }
    }
  };

  try_match(0);
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    const char c = text[i];
    if ((c == '.' || c == '!' || c == '?') && is_space(text[i + 1]))
      if (hits.empty() || i >= hits.back().body_begin)
        try_match(i + 1);
  }

  std::vector<LabeledSegment> out;
  for (std::size_t h = 0; h < hits.size(); ++h) {
    std::size_t b = hits[h].body_begin;
    std::size_t e = h + 1 < hits.size() ? hits[h + 1].cue_begin : text.size();
    while (b < e && is_space(text[b]))
      ++b;
    while (e > b && is_space(text[e - 1]))
      --e;
    out.push_back({hits[h].cue, hits[h].prior, std::string(text.substr(b, e - b)), b, e});
  }
  return out;
}

EmoticonTable EmoticonTable::defaults() {
  return EmoticonTable{{{":)", 1}, {":-)", 1}, {":D", 1}, {";)", 1}, {":(", -1}, {":-(", -1}, {":/", -1}}};
}

EmoticonTable EmoticonTable::parse(std::string_view json_text) {
  const auto doc = parse_json(json_text, "emoticon table");
  if (!doc.is_object())
    throw DataError("emoticon table: expected an object mapping emoticons to scores");
  EmoticonTable table;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number_integer() || key.empty())
      throw DataError(fmt::format("emoticon table: '{}' must map to an integer", key));
    table.emoticons.emplace_back(key, value.get<int>());
  }
  return table;
}

EmoticonTable EmoticonTable::load(const std::filesystem::path& path) {
  return parse(read_file(path, "emoticon table"));
}

PunctuationProfile punctuation_profile(std::string_view text, const EmoticonTable& emoticons) {
  auto ordered = emoticons.emoticons;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });

  PunctuationProfile p;
  std::size_t i = 0;
  while (i < text.size()) {
    bool matched = false;
    if (i == 0 || is_space(text[i - 1])) {
      for (const auto& [face, score] : ordered) {
        if (text.substr(i, face.size()) != face)
          continue;
        const std::size_t end = i + face.size();
        if (end < text.size() && is_alnum(text[end]))
          continue;
        ++p.emoticon;
        p.emoticon_score += score;
        i = end;
        matched = true;
        break;
      }
    }
    if (matched)
      continue;
    switch (text[i]) {
    case '?':
      ++p.question;
      break;
    case '!':
      ++p.exclamation;
      break;
    case ':':
      ++p.colon;
      break;
    case '/':
      ++p.slash;
      break;
    default:
      break;
    }
    ++i;
  }
  return p;
}

} // namespace opinex
