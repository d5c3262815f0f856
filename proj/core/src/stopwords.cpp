#include <opinex/stopwords.hpp>

#include <array>

namespace opinex {

namespace {

// Keep in sync with data/stopwords.txt.
constexpr std::array kEnglishStopwords = {
    "a",       "about",    "above",   "after",   "again",   "against", "all",     "am",
    "an",      "and",      "any",     "are",     "as",      "at",      "be",      "been",
    "before",  "being",    "below",   "between", "both",    "but",     "by",      "can",
    "could",   "did",      "do",      "does",    "doing",   "down",    "during",  "each",
    "few",     "for",      "from",    "further", "had",     "has",     "have",    "having",
    "he",      "her",      "here",    "hers",    "herself", "him",     "himself", "his",
    "how",     "i",        "if",      "in",      "into",    "is",      "it",      "it's",
    "its",     "itself",   "just",    "me",      "more",    "most",    "my",      "myself",
    "no",      "nor",      "not",     "now",     "of",      "off",     "on",      "once",
    "only",    "or",       "other",   "our",     "ours",    "ourselves", "out",   "over",
    "own",     "same",     "she",     "should",  "so",      "some",    "such",    "than",
    "that",    "the",      "their",   "theirs",  "them",    "themselves", "then", "there",
    "these",   "they",     "this",    "those",   "through", "to",      "too",     "under",
    "until",   "up",       "very",    "was",     "we",      "were",    "what",    "when",
    "where",   "which",    "while",   "who",     "whom",    "why",     "will",    "with",
    "would",   "you",      "your",    "yours",   "yourself", "yourselves", "several", "s",
    "t",       "here's",   "i'm",     "i've",    "don't",   "also",    "every",   "whole",
};

} // namespace

Stopwords::Stopwords(std::vector<std::string> words) : words_(words.begin(), words.end()) {}

const Stopwords& Stopwords::english() {
  static const Stopwords instance{std::vector<std::string>(kEnglishStopwords.begin(),
                                                           kEnglishStopwords.end())};
  return instance;
}

bool Stopwords::contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

} // namespace opinex
