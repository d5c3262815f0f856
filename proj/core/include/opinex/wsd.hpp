#pragma once

#include <opinex/corpus.hpp>
#include <opinex/stopwords.hpp>
#include <opinex/wordnet.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace opinex {

enum class SenseMethod { Lesk, Monosemous, FirstSenseFallback };

std::string_view to_string(SenseMethod m);

struct SenseAssignment {
  std::size_t token_index = 0;
  SynsetId sense;
  int overlap_score = 0;
  SenseMethod method = SenseMethod::Lesk;
};

using WordBag = std::map<std::string, int>;

/// Multiset of the other tokens' lemmas, stopwords removed.
WordBag context_bag(const Sentence& sentence, std::size_t target, const Stopwords& stopwords);

/// Gloss content words + synset words + gloss content words of direct hypernyms.
WordBag sense_signature(const WordNetDb& db, const Synset& synset, const Stopwords& stopwords);

/// Multiset intersection size.
int overlap(const WordBag& a, const WordBag& b);

/// Simplified extended Lesk over the whole sentence. Ties break towards the
/// lower sense rank; all-zero overlaps fall back to sense rank 1.
std::vector<SenseAssignment> disambiguate_sentence(const WordNetDb& db, const Sentence& sentence,
                                                   const Stopwords& stopwords);

/// Copies chosen senses and their lexicographer files onto the tokens.
Sentence annotate_lexdomains(const WordNetDb& db, Sentence sentence,
                             std::span<const SenseAssignment> assignments);

/// WSD + annotation for every sentence, parallel per document.
Corpus annotate_corpus(const WordNetDb& db, const Corpus& corpus, const Stopwords& stopwords,
                       int jobs = 1);

} // namespace opinex
