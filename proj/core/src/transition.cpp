#include <opinex/transition.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <stdexcept>

namespace opinex {

std::string_view to_string(TransitionMode mode) {
  return mode == TransitionMode::Joint ? "joint" : "conditional";
}

std::optional<TransitionMode> parse_transition_mode(std::string_view text) {
  if (text == "joint")
    return TransitionMode::Joint;
  if (text == "conditional")
    return TransitionMode::Conditional;
  return std::nullopt;
}

PairCounts count_transitions(const Corpus& corpus) {
  PairCounts counts{};
  for (const auto& doc : corpus)
    for (std::size_t i = 1; i < doc.sentences.size(); ++i)
      ++counts[index_of(doc.sentences[i - 1].label)][index_of(doc.sentences[i].label)];
  return counts;
}

TransitionMatrix transitions_from_counts(const PairCounts& support, TransitionMode mode,
                                         double alpha) {
  if (!(alpha >= 0.0))
    throw std::invalid_argument("smoothing alpha must be non-negative");
  std::int64_t total = 0;
  for (const auto& row : support)
    for (const auto n : row)
      total += n;
  if (total == 0 && alpha == 0.0)
    throw DataError("no data: the corpus has no adjacent sentence pairs to estimate transitions");

  TransitionMatrix m;
  m.mode = mode;
  m.alpha = alpha;
  m.support = support;
  for (std::size_t c = 0; c < 3; ++c) {
    std::int64_t row_total = 0;
    for (const auto n : support[c])
      row_total += n;
    const double denominator = mode == TransitionMode::Joint
                                   ? static_cast<double>(total) + 9.0 * alpha
                                   : static_cast<double>(row_total) + 3.0 * alpha;
    for (std::size_t n = 0; n < 3; ++n)
      m.cells[c][n] =
          denominator > 0.0 ? (static_cast<double>(support[c][n]) + alpha) / denominator : 0.0;
  }
  return m;
}

TransitionMatrix estimate_transitions(const Corpus& corpus, TransitionMode mode, double alpha) {
  return transitions_from_counts(count_transitions(corpus), mode, alpha);
}

CoherenceFindings coherence_report(const TransitionMatrix& matrix) {
  if (matrix.mode != TransitionMode::Joint)
    throw std::invalid_argument("coherence findings are defined on the joint matrix");
  CoherenceFindings f;
  f.same_polarity_dominance = true;
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t n = 0; n < 3; ++n)
      if (n != c && !(matrix.cells[c][c] > matrix.cells[c][n]))
        f.same_polarity_dominance = false;
  f.pos_abrupt_lt_neutral =
      matrix.cell(Polarity::Pos, Polarity::Neg) < matrix.cell(Polarity::Pos, Polarity::Neu);
  f.neg_abrupt_lt_neutral =
      matrix.cell(Polarity::Neg, Polarity::Pos) < matrix.cell(Polarity::Neg, Polarity::Neu);
  return f;
}

std::string transitions_json(const TransitionMatrix& matrix, const CoherenceFindings& findings) {
  nlohmann::ordered_json doc;
  doc["mode"] = std::string(to_string(matrix.mode));
  doc["alpha"] = matrix.alpha;
  doc["cells"] = matrix.cells;
  doc["support"] = matrix.support;
  doc["findings"] = {{"same_polarity_dominance", findings.same_polarity_dominance},
                     {"pos_abrupt_lt_neutral", findings.pos_abrupt_lt_neutral},
                     {"neg_abrupt_lt_neutral", findings.neg_abrupt_lt_neutral}};
  return doc.dump(2) + "\n";
}

PreviousPolarity previous_polarity_one_hot(std::optional<Polarity> previous) {
  PreviousPolarity v{};
  v[previous ? index_of(*previous) : 3] = 1.0;
  return v;
}

PreviousPolarity previous_polarity_feature(const Document& document, std::size_t sentence_index,
                                           PreviousSource source,
                                           std::span<const Polarity> predicted) {
  if (sentence_index >= document.sentences.size())
    throw std::out_of_range(fmt::format("sentence index {} out of range for document '{}'",
                                        sentence_index, document.id));
  if (sentence_index == 0)
    return previous_polarity_one_hot(std::nullopt);
  if (source == PreviousSource::Gold)
    return previous_polarity_one_hot(document.sentences[sentence_index - 1].label);
  if (predicted.size() < sentence_index)
    throw std::invalid_argument("predicted labels must cover every earlier sentence");
  return previous_polarity_one_hot(predicted[sentence_index - 1]);
}

} // namespace opinex
