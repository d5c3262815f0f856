#pragma once

#include <opinex/corpus.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace opinex {

enum class TransitionMode { Joint, Conditional };

std::string_view to_string(TransitionMode mode);
std::optional<TransitionMode> parse_transition_mode(std::string_view text);

using PairCounts = std::array<std::array<std::int64_t, 3>, 3>;

/// Polarity of sentence i (rows) followed by sentence i+1 (columns), indexed
/// POS, NEG, NEU.
struct TransitionMatrix {
  TransitionMode mode = TransitionMode::Joint;
  double alpha = 0.0;
  std::array<std::array<double, 3>, 3> cells{};
  PairCounts support{};

  double cell(Polarity current, Polarity next) const {
    return cells[index_of(current)][index_of(next)];
  }
};

/// Adjacent sentence pairs within each document; first sentences start no pair.
PairCounts count_transitions(const Corpus& corpus);

/// Additive smoothing: joint cells (n + a) / (N + 9a), conditional cells
/// (n + a) / (row + 3a). Throws DataError when there is nothing to estimate
/// from (no pairs and alpha == 0). An empty conditional row with alpha == 0
/// stays all zero.
TransitionMatrix transitions_from_counts(const PairCounts& support, TransitionMode mode,
                                         double alpha);
TransitionMatrix estimate_transitions(const Corpus& corpus, TransitionMode mode, double alpha);

struct CoherenceFindings {
  bool same_polarity_dominance = false; // cell(c,c) > cell(c,n) for every n != c
  bool pos_abrupt_lt_neutral = false;   // pos->neg < pos->neu
  bool neg_abrupt_lt_neutral = false;   // neg->pos < neg->neu
};

/// Requires a joint matrix (std::invalid_argument otherwise).
CoherenceFindings coherence_report(const TransitionMatrix& matrix);

/// transitions.json document.
std::string transitions_json(const TransitionMatrix& matrix, const CoherenceFindings& findings);

/// One-hot over {prev-POS, prev-NEG, prev-NEU, no-previous}.
using PreviousPolarity = std::array<double, 4>;

PreviousPolarity previous_polarity_one_hot(std::optional<Polarity> previous);

enum class PreviousSource { Gold, Predicted };

/// `predicted` holds the labels already decoded for this document (at least
/// `sentence_index` of them) when source is Predicted. Throws std::out_of_range
/// when the index is past the end.
PreviousPolarity previous_polarity_feature(const Document& document, std::size_t sentence_index,
                                           PreviousSource source = PreviousSource::Gold,
                                           std::span<const Polarity> predicted = {});

} // namespace opinex
