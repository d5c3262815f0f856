#include <opinex/parallel.hpp>
#include <opinex/wsd.hpp>

#include <algorithm>

namespace opinex {

namespace {

void add_content_words(WordBag& bag, std::string_view text, const WordNetDb& db,
                       const Stopwords& stopwords) {
  for (const auto& token : tokenize(text, &db))
    if (!stopwords.contains(token.lemma) && !stopwords.contains(to_lower_ascii(token.surface)))
      ++bag[token.lemma];
}

} // namespace

std::string_view to_string(SenseMethod m) {
  switch (m) {
  case SenseMethod::Lesk:
    return "lesk";
  case SenseMethod::Monosemous:
    return "monosemous";
  case SenseMethod::FirstSenseFallback:
    return "first-sense-fallback";
  }
  return "lesk";
}

WordBag context_bag(const Sentence& sentence, std::size_t target, const Stopwords& stopwords) {
  WordBag bag;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (i == target)
      continue;
    const auto& token = sentence.tokens[i];
    if (stopwords.contains(token.lemma) || stopwords.contains(to_lower_ascii(token.surface)))
      continue;
    ++bag[token.lemma];
  }
  return bag;
}

WordBag sense_signature(const WordNetDb& db, const Synset& synset, const Stopwords& stopwords) {
  WordBag bag;
  add_content_words(bag, synset.gloss, db, stopwords);
  for (const auto& word : synset.words)
    ++bag[word];
  for (const auto& hypernym : synset.hypernyms)
    add_content_words(bag, db.at(hypernym).gloss, db, stopwords);
  return bag;
}

int overlap(const WordBag& a, const WordBag& b) {
  int total = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      total += std::min(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return total;
}

std::vector<SenseAssignment> disambiguate_sentence(const WordNetDb& db, const Sentence& sentence,
                                                   const Stopwords& stopwords) {
  std::vector<SenseAssignment> out;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const auto& token = sentence.tokens[i];
    const auto candidates = db.senses(token.lemma, token.pos);
    if (candidates.empty())
      continue;
    if (candidates.size() == 1) {
      out.push_back({i, candidates.front(), 0, SenseMethod::Monosemous});
      continue;
    }
    const WordBag context = context_bag(sentence, i, stopwords);
    int best_score = -1;
    std::size_t best_rank = 0;
    for (std::size_t rank = 0; rank < candidates.size(); ++rank) {
      const int score = overlap(context, sense_signature(db, db.at(candidates[rank]), stopwords));
      if (score > best_score) {
        best_score = score;
        best_rank = rank;
      }
    }
    if (best_score == 0)
      out.push_back({i, candidates.front(), 0, SenseMethod::FirstSenseFallback});
    else
      out.push_back({i, candidates[best_rank], best_score, SenseMethod::Lesk});
  }
  return out;
}

Sentence annotate_lexdomains(const WordNetDb& db, Sentence sentence,
                             std::span<const SenseAssignment> assignments) {
  for (auto& token : sentence.tokens) {
    token.sense.reset();
    token.lexdomain.reset();
  }
  for (const auto& a : assignments) {
    auto& token = sentence.tokens.at(a.token_index);
    token.sense = a.sense;
    token.lexdomain = db.at(a.sense).lexfile;
  }
  return sentence;
}

Corpus annotate_corpus(const WordNetDb& db, const Corpus& corpus, const Stopwords& stopwords,
                       int jobs) {
  Corpus out = corpus;
  parallel_for(out.size(), jobs, [&](std::size_t d) {
    for (auto& sentence : out[d].sentences) {
      const auto assignments = disambiguate_sentence(db, sentence, stopwords);
      sentence = annotate_lexdomains(db, std::move(sentence), assignments);
    }
  });
  return out;
}

} // namespace opinex
