#include <opinex/pipeline.hpp>
#include <opinex/parallel.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace opinex {

namespace {

std::string sentence_id(const Document& doc, std::size_t index) {
  return fmt::format("{}#{}", doc.id, index);
}

// Per-document slots, concatenated in corpus order afterwards.
struct DocumentExamples {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> rows;
  std::vector<Polarity> labels;
};

std::vector<double> to_row(const FeatureVector& v) { return {v.begin(), v.end()}; }

// Shortest round-trip representation.
std::string format_number(double v) { return fmt::format("{}", v); }

} // namespace

std::string_view to_string(ClassMode mode) {
  return mode == ClassMode::Binary ? "binary" : "3class";
}

std::optional<ClassMode> parse_class_mode(std::string_view text) {
  if (text == "3class")
    return ClassMode::ThreeClass;
  if (text == "binary")
    return ClassMode::Binary;
  return std::nullopt;
}

std::string_view to_string(DecodeMode mode) {
  return mode == DecodeMode::GoldPrevious ? "gold-prev" : "greedy-prev";
}

std::optional<DecodeMode> parse_decode_mode(std::string_view text) {
  if (text == "gold-prev")
    return DecodeMode::GoldPrevious;
  if (text == "greedy-prev")
    return DecodeMode::GreedyPrevious;
  return std::nullopt;
}

bool is_scored(Polarity gold, ClassMode mode) {
  return mode == ClassMode::ThreeClass || gold != Polarity::Neu;
}

ExampleSet build_examples(const FeatureResources& res, const Corpus& corpus, AnalysisLevel level,
                          ClassMode mode, int jobs) {
  std::vector<DocumentExamples> slots(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t d) {
    const auto& doc = corpus[d];
    auto& slot = slots[d];
    if (level == AnalysisLevel::Document) {
      if (!is_scored(doc.label, mode))
        return;
      slot.ids.push_back(doc.id);
      slot.rows.push_back(to_row(document_features(res, doc)));
      slot.labels.push_back(doc.label);
      return;
    }
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
      const auto& s = doc.sentences[i];
      if (!is_scored(s.label, mode))
        continue;
      slot.ids.push_back(sentence_id(doc, i));
      slot.rows.push_back(to_row(sentence_features(res, s, previous_polarity_feature(doc, i))));
      slot.labels.push_back(s.label);
    }
  });
  ExampleSet out;
  for (auto& slot : slots) {
    std::move(slot.ids.begin(), slot.ids.end(), std::back_inserter(out.ids));
    std::move(slot.rows.begin(), slot.rows.end(), std::back_inserter(out.rows));
    out.labels.insert(out.labels.end(), slot.labels.begin(), slot.labels.end());
  }
  return out;
}

Model train_model(const FeatureResources& res, const Corpus& corpus, AnalysisLevel level,
                  ClassMode mode, const TrainOptions& options, int jobs) {
  const auto examples = build_examples(res, corpus, level, mode, jobs);
  return train(examples.rows, examples.labels, options);
}

Evaluation evaluate(const Model& model, const FeatureResources& res, const Corpus& corpus,
                    AnalysisLevel level, ClassMode mode, DecodeMode decode, int jobs) {
  struct Slot {
    std::vector<std::string> ids;
    std::vector<Polarity> gold;
    std::vector<Polarity> predicted;
  };
  std::vector<Slot> slots(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t d) {
    const auto& doc = corpus[d];
    auto& slot = slots[d];
    if (level == AnalysisLevel::Document) {
      if (!is_scored(doc.label, mode))
        return;
      slot.ids.push_back(doc.id);
      slot.gold.push_back(doc.label);
      slot.predicted.push_back(model.predict(to_row(document_features(res, doc))));
      return;
    }
    std::vector<Polarity> decoded;
    decoded.reserve(doc.sentences.size());
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
      const auto previous = decode == DecodeMode::GoldPrevious
                                ? previous_polarity_feature(doc, i)
                                : previous_polarity_feature(doc, i, PreviousSource::Predicted, decoded);
      const Polarity p = model.predict(to_row(sentence_features(res, doc.sentences[i], previous)));
      decoded.push_back(p);
      if (!is_scored(doc.sentences[i].label, mode))
        continue;
      slot.ids.push_back(sentence_id(doc, i));
      slot.gold.push_back(doc.sentences[i].label);
      slot.predicted.push_back(p);
    }
  });
  Evaluation ev;
  ev.level = level;
  ev.mode = mode;
  ev.decode = decode;
  for (auto& slot : slots) {
    std::move(slot.ids.begin(), slot.ids.end(), std::back_inserter(ev.ids));
    ev.gold.insert(ev.gold.end(), slot.gold.begin(), slot.gold.end());
    ev.predicted.insert(ev.predicted.end(), slot.predicted.begin(), slot.predicted.end());
  }
  ev.metrics = score_predictions(ev.gold, ev.predicted);
  return ev;
}

std::string metrics_json(const Evaluation& evaluation) {
  const auto& m = evaluation.metrics;
  nlohmann::ordered_json doc;
  doc["level"] = to_string(evaluation.level);
  doc["mode"] = to_string(evaluation.mode);
  doc["decode"] = to_string(evaluation.decode);
  doc["items"] = m.items;
  doc["accuracy"] = m.accuracy;
  nlohmann::ordered_json per_class = nlohmann::ordered_json::object();
  for (const Polarity p : kPolarities) {
    if (evaluation.mode == ClassMode::Binary && p == Polarity::Neu)
      continue;
    const auto& c = m.per_class[index_of(p)];
    per_class[std::string(to_string(p))] = {
        {"precision", c.precision}, {"recall", c.recall}, {"f1", c.f1}, {"support", c.support}};
  }
  doc["per_class"] = per_class;
  doc["confusion"] = m.confusion;
  return doc.dump(2) + "\n";
}

Split stratified_split(const Corpus& corpus, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction >= 0.0 && test_fraction <= 1.0))
    throw std::invalid_argument("test fraction must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<bool> in_test(corpus.size(), false);
  for (const Polarity p : kPolarities) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      if (corpus[i].label == p)
        members.push_back(i);
    for (std::size_t i = members.size(); i > 1; --i)
      std::swap(members[i - 1], members[rng() % i]);
    const auto n_test = static_cast<std::size_t>(std::llround(test_fraction * members.size()));
    for (std::size_t k = 0; k < n_test; ++k)
      in_test[members[k]] = true;
  }
  Split split;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    (in_test[i] ? split.test : split.train).push_back(corpus[i]);
  return split;
}

void write_feature_csv(std::ostream& out, const FeatureResources& res, const Corpus& corpus,
                       AnalysisLevel level, int jobs) {
  struct Row {
    std::string id;
    Polarity label;
    FeatureVector features;
    std::vector<double> extra;
  };
  std::vector<std::vector<Row>> slots(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t d) {
    const auto& doc = corpus[d];
    if (level == AnalysisLevel::Document) {
      slots[d].push_back({doc.id, doc.label, document_features(res, doc), document_seed_scores(res, doc)});
      return;
    }
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
      const auto& s = doc.sentences[i];
      slots[d].push_back({sentence_id(doc, i), s.label,
                          sentence_features(res, s, previous_polarity_feature(doc, i)),
                          sentence_seed_scores(res, s)});
    }
  });
  out << "id,label";
  for (const auto& name : feature_names())
    out << ',' << name;
  for (const auto& extra : res.extra_seeds)
    out << ",seed." << to_lower_ascii(extra.name);
  out << '\n';
  for (const auto& slot : slots) {
    for (const auto& row : slot) {
      out << row.id << ',' << to_string(row.label);
      for (const double v : row.features)
        out << ',' << format_number(v);
      for (const double v : row.extra)
        out << ',' << format_number(v);
      out << '\n';
    }
  }
}

ReportSelection ReportSelection::parse(std::string_view list) {
  ReportSelection sel{false, false, false, false, false};
  std::size_t start = 0;
  while (true) {
    const auto comma = list.find(',', start);
    const auto name = trim(list.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (name == "stats")
      sel.stats = true;
    else if (name == "transitions")
      sel.transitions = true;
    else if (name == "emotions")
      sel.emotions = true;
    else if (name == "domains")
      sel.domains = true;
    else if (name == "metrics")
      sel.metrics = true;
    else
      throw std::invalid_argument(fmt::format("unknown report output '{}'", name));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return sel;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw DataError(fmt::format("cannot write '{}'", path.string()));
  out << text;
  out.flush();
  if (!out)
    throw DataError(fmt::format("failed writing '{}'", path.string()));
}

std::vector<std::filesystem::path> emit_report(const std::filesystem::path& out_dir,
                                               const FeatureResources& res, const Corpus& corpus,
                                               const ReportOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir))
    throw DataError(fmt::format("cannot create output directory '{}'", out_dir.string()));

  std::vector<std::filesystem::path> written;
  auto emit = [&](const char* name, const std::string& text) {
    const auto path = out_dir / name;
    write_text_file(path, text);
    written.push_back(path);
  };

  if (options.only.stats) {
    std::ostringstream s;
    write_stats_csv(s, corpus_stats(corpus));
    emit("stats.csv", s.str());
  }
  if (options.only.transitions) {
    const auto matrix = estimate_transitions(corpus, options.transition_mode, options.alpha);
    const auto joint = options.transition_mode == TransitionMode::Joint
                           ? matrix
                           : transitions_from_counts(matrix.support, TransitionMode::Joint, options.alpha);
    emit("transitions.json", transitions_json(matrix, coherence_report(joint)));
  }
  if (options.only.emotions) {
    if (res.db == nullptr || res.emotions.size() != kEmotionCount)
      throw DataError("emotion report needs a WordNet and six emotion seed sets");
    std::ostringstream s;
    write_emotion_csv(s, emotion_distribution_report(*res.db, corpus, res.emotions, *res.stopwords,
                                                     options.level, res.emotion_options, options.jobs));
    emit("emotions.csv", s.str());
  }
  if (options.only.domains) {
    std::ostringstream s;
    write_domain_csv(s, corpus_domain_distribution(corpus, options.grouping));
    emit("domains.csv", s.str());
  }
  if (options.only.metrics) {
    const auto split = stratified_split(corpus, options.test_fraction, options.train.seed);
    if (split.test.empty())
      throw DataError("corpus too small for a held-out split");
    const auto model = train_model(res, split.train, options.level, options.mode, options.train, options.jobs);
    const auto ev = evaluate(model, res, split.test, options.level, options.mode, options.decode, options.jobs);
    emit("metrics.json", metrics_json(ev));
  }
  return written;
}

} // namespace opinex
