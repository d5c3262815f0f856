#include "cli.hpp"

#include <opinex/classifier.hpp>
#include <opinex/corpus.hpp>
#include <opinex/emotion.hpp>
#include <opinex/features.hpp>
#include <opinex/lexdomain.hpp>
#include <opinex/lexicons.hpp>
#include <opinex/metachar.hpp>
#include <opinex/pipeline.hpp>
#include <opinex/transition.hpp>
#include <opinex/wordnet.hpp>
#include <opinex/wsd.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace opinex::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string corpus;
  std::string wordnet;
  std::string out = "opinex-out";
  std::string model;
  int jobs = 1;
  std::uint64_t seed = 42;

  std::string seeds;
  std::string measure = "wup";
  bool use_wsd_sense = false;
  std::string level = "sentence";
  std::size_t bins = 20;

  std::string transition_mode = "joint";
  double alpha = 0.0;

  std::string grouping = "domain";

  std::string swn;
  std::string wordlist_pos;
  std::string wordlist_neg;
  std::string mpqa;
  std::string tsv;
  std::string order;
  std::string strategy = "first-non-neutral";
  double tau = 0.05;
  int allow_gap = 0;
  std::vector<std::string> terms;
  std::string term_pos = "any";

  std::string cues;
  std::string emoticons;
  double rating_neg = 0.4;
  double rating_pos = 0.7;
  std::string denominators = "5,10,100";

  std::string features = "all";
  std::string classes = "3class";
  std::string decode = "greedy-prev";
  double lr = 0.1;
  double lambda = 1e-4;
  int epochs = 500;
  double test_fraction = 0.2;

  std::string only;
};

// ---- option groups -------------------------------------------------------

void add_common(CLI::App* app, Config& c) {
  app->add_option("--out", c.out, "Output directory");
  app->add_option("--jobs", c.jobs, "Worker threads for per-document work")->check(CLI::PositiveNumber);
}

void add_corpus(CLI::App* app, Config& c) {
  app->add_option("--corpus", c.corpus, "Corpus in JSON-lines format")->required();
}

void add_wordnet(CLI::App* app, Config& c) {
  app->add_option("--wordnet", c.wordnet, "WordNet 3.0 dict directory")->envname("OPINEX_WORDNET");
}

void add_emotion(CLI::App* app, Config& c) {
  app->add_option("--seeds", c.seeds, "Seed configuration JSON (built-in seeds when empty)");
  app->add_option("--measure", c.measure, "Similarity measure")
      ->check(CLI::IsMember({"path", "wup", "lch"}));
  app->add_flag("--use-wsd-sense", c.use_wsd_sense, "Score only the sense chosen by WSD");
}

void add_level(CLI::App* app, Config& c) {
  app->add_option("--level", c.level, "Analysis level")->check(CLI::IsMember({"sentence", "document"}));
}

void add_lexicons(CLI::App* app, Config& c) {
  app->add_option("--swn", c.swn, "SentiWordNet 3.0 file");
  app->add_option("--wordlist-pos", c.wordlist_pos, "Positive word list");
  app->add_option("--wordlist-neg", c.wordlist_neg, "Negative word list");
  app->add_option("--mpqa", c.mpqa, "MPQA subjectivity clues (.tff)");
  app->add_option("--tsv", c.tsv, "Extra lemma<TAB>pos<TAB>score lexicon");
  app->add_option("--order", c.order, "Comma list of lexicon names (default order when empty)");
  app->add_option("--strategy", c.strategy, "Ensemble strategy")
      ->check(CLI::IsMember({"first-non-neutral", "majority"}));
  app->add_option("--tau", c.tau, "Neutral band half-width")->check(CLI::Range(0.0, 1.0));
  app->add_option("--allow-gap", c.allow_gap, "Stopword tokens skippable inside a phrase")
      ->check(CLI::Range(0, 3));
}

void add_metachar(CLI::App* app, Config& c) {
  app->add_option("--cues", c.cues, "Cue table JSON (built-in cues when empty)");
  app->add_option("--emoticons", c.emoticons, "Emoticon table JSON (built-in table when empty)");
  app->add_option("--rating-neg", c.rating_neg, "Ratings at or below this ratio are NEG")
      ->check(CLI::Range(0.0, 1.0));
  app->add_option("--rating-pos", c.rating_pos, "Ratings at or above this ratio are POS")
      ->check(CLI::Range(0.0, 1.0));
  app->add_option("--denominators", c.denominators, "Accepted rating denominators");
}

void add_features(CLI::App* app, Config& c) {
  add_wordnet(app, c);
  add_emotion(app, c);
  add_lexicons(app, c);
  add_metachar(app, c);
  app->add_option("--features", c.features,
                  "Feature groups: all, none, or a comma list of emotion,lexdomain,lexicon,previous,"
                  "metachar,punctuation");
}

void add_training(CLI::App* app, Config& c) {
  app->add_option("--classes", c.classes, "Class mode")->check(CLI::IsMember({"3class", "binary"}));
  app->add_option("--lr", c.lr, "Learning rate")->check(CLI::PositiveNumber);
  app->add_option("--lambda", c.lambda, "L2 strength")->check(CLI::NonNegativeNumber);
  app->add_option("--epochs", c.epochs, "Gradient descent epochs")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "Random seed");
}

void add_decode(CLI::App* app, Config& c) {
  app->add_option("--decode", c.decode, "Previous-polarity source at evaluation")
      ->check(CLI::IsMember({"gold-prev", "greedy-prev"}));
}

// ---- resource loading ----------------------------------------------------

void require_path(const std::string& path, std::string_view what) {
  if (!fs::exists(path))
    throw DataError(fmt::format("{} not found: '{}'", what, path));
}

std::unique_ptr<WordNetDb> load_wordnet(const Config& c) {
  if (c.wordnet.empty())
    throw UsageError("--wordnet is required (or set OPINEX_WORDNET)");
  require_path(c.wordnet, "WordNet directory");
  return std::make_unique<WordNetDb>(WordNetDb::load(c.wordnet));
}

Corpus read_corpus(const Config& c, const WordNetDb* db) {
  require_path(c.corpus, "corpus");
  return load_corpus(c.corpus, db);
}

std::vector<double> parse_denominators(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto t = trim(item);
    try {
      std::size_t used = 0;
      const double v = std::stod(std::string(t), &used);
      if (used != t.size() || !(v > 0.0))
        throw std::invalid_argument("bad");
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(fmt::format("--denominators: '{}' is not a positive number", t));
    }
  }
  if (out.empty())
    throw UsageError("--denominators needs at least one value");
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (const auto t = trim(item); !t.empty())
      out.emplace_back(t);
  return out;
}

LexiconSet load_lexicons(const Config& c) {
  LexiconSet set;
  if (!c.swn.empty()) {
    require_path(c.swn, "SentiWordNet file");
    set.add(load_lexicon(c.swn, LexiconFormat::SentiWordNet, Polarity::Pos, "sentiwordnet"));
  }
  std::vector<std::pair<fs::path, Polarity>> lists;
  if (!c.wordlist_pos.empty()) {
    require_path(c.wordlist_pos, "positive word list");
    lists.emplace_back(c.wordlist_pos, Polarity::Pos);
  }
  if (!c.wordlist_neg.empty()) {
    require_path(c.wordlist_neg, "negative word list");
    lists.emplace_back(c.wordlist_neg, Polarity::Neg);
  }
  if (!lists.empty())
    set.add(load_wordlist(lists, "wordlist"));
  if (!c.mpqa.empty()) {
    require_path(c.mpqa, "MPQA file");
    set.add(load_lexicon(c.mpqa, LexiconFormat::Mpqa, Polarity::Pos, "mpqa"));
  }
  if (!c.tsv.empty()) {
    require_path(c.tsv, "TSV lexicon");
    set.add(load_lexicon(c.tsv, LexiconFormat::Tsv, Polarity::Pos, "tsv"));
  }
  return set;
}

EnsemblePolicy make_policy(const Config& c, const LexiconSet& set) {
  EnsemblePolicy policy;
  policy.order = c.order.empty() ? set.default_order() : split_list(c.order);
  for (const auto& name : policy.order)
    if (set.find(name) == nullptr)
      throw UsageError(fmt::format("--order names lexicon '{}' which was not loaded", name));
  policy.neutral_band = c.tau;
  policy.strategy = *parse_ensemble_strategy(c.strategy);
  return policy;
}

RatingOptions make_rating(const Config& c) {
  if (!(c.rating_neg < c.rating_pos))
    throw UsageError("--rating-neg must be below --rating-pos");
  RatingOptions r;
  r.thresholds = {c.rating_neg, c.rating_pos};
  r.denominators = parse_denominators(c.denominators);
  return r;
}

EmotionOptions make_emotion_options(const Config& c) {
  return {*parse_similarity_measure(c.measure), c.use_wsd_sense};
}

SeedConfig load_seeds(const Config& c, const WordNetDb& db) {
  if (c.seeds.empty())
    return default_seed_config(db);
  require_path(c.seeds, "seed configuration");
  return load_seed_config(c.seeds, db);
}

/// Everything a feature-consuming subcommand needs, kept alive together.
struct Session {
  std::unique_ptr<WordNetDb> db;
  LexiconSet lexicons;
  Corpus corpus;
  FeatureResources res;
};

std::unique_ptr<Session> open_session(const Config& c) {
  auto s = std::make_unique<Session>();
  s->db = load_wordnet(c);
  s->lexicons = load_lexicons(c);
  auto seeds = load_seeds(c, *s->db);
  auto& res = s->res;
  res.db = s->db.get();
  res.emotions = std::move(seeds.emotions);
  res.extra_seeds = std::move(seeds.extra);
  res.emotion_options = make_emotion_options(c);
  res.lexicons = &s->lexicons;
  if (!s->lexicons.empty())
    res.policy = make_policy(c, s->lexicons);
  res.allow_gap = c.allow_gap;
  if (!c.cues.empty()) {
    require_path(c.cues, "cue table");
    res.cues = CueTable::load(c.cues);
  }
  if (!c.emoticons.empty()) {
    require_path(c.emoticons, "emoticon table");
    res.emoticons = EmoticonTable::load(c.emoticons);
  }
  res.rating = make_rating(c);
  try {
    res.groups = FeatureGroups::parse(c.features);
  } catch (const std::invalid_argument& e) {
    throw UsageError(fmt::format("--features: {}", e.what()));
  }
  s->corpus = annotate_corpus(*s->db, read_corpus(c, s->db.get()), *res.stopwords, c.jobs);
  return s;
}

TrainOptions make_train_options(const Config& c) {
  TrainOptions t;
  t.learning_rate = c.lr;
  t.l2 = c.lambda;
  t.epochs = c.epochs;
  t.seed = c.seed;
  return t;
}

AnalysisLevel level_of(const Config& c) { return *parse_analysis_level(c.level); }
ClassMode classes_of(const Config& c) { return *parse_class_mode(c.classes); }
DecodeMode decode_of(const Config& c) { return *parse_decode_mode(c.decode); }

fs::path output_dir(const Config& c) {
  std::error_code ec;
  fs::create_directories(c.out, ec);
  if (ec || !fs::is_directory(c.out))
    throw DataError(fmt::format("cannot create output directory '{}'", c.out));
  return c.out;
}

void write_output(const Config& c, const char* name, const std::string& text, std::ostream& err) {
  const auto path = output_dir(c) / name;
  write_text_file(path, text);
  err << "wrote " << path.string() << '\n';
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n") == std::string_view::npos)
    return std::string(value);
  std::string out = "\"";
  for (const char ch : value) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

// ---- subcommands ---------------------------------------------------------

void cmd_stats(const Config& c, std::ostream& err) {
  std::ostringstream s;
  write_stats_csv(s, corpus_stats(read_corpus(c, nullptr)));
  write_output(c, "stats.csv", s.str(), err);
}

void cmd_transitions(const Config& c, std::ostream& err) {
  const auto corpus = read_corpus(c, nullptr);
  const auto mode = *parse_transition_mode(c.transition_mode);
  const auto matrix = estimate_transitions(corpus, mode, c.alpha);
  const auto joint =
      mode == TransitionMode::Joint ? matrix : transitions_from_counts(matrix.support, TransitionMode::Joint, c.alpha);
  write_output(c, "transitions.json", transitions_json(matrix, coherence_report(joint)), err);
}

void cmd_emotions(const Config& c, std::ostream& err) {
  const auto db = load_wordnet(c);
  const auto seeds = load_seeds(c, *db);
  auto corpus = read_corpus(c, db.get());
  const auto options = make_emotion_options(c);
  if (options.use_wsd_sense)
    corpus = annotate_corpus(*db, corpus, Stopwords::english(), c.jobs);
  const auto report = emotion_distribution_report(*db, corpus, seeds.emotions, Stopwords::english(),
                                                  level_of(c), options, c.jobs);
  std::ostringstream rows;
  write_emotion_csv(rows, report);
  write_output(c, "emotions.csv", rows.str(), err);
  std::ostringstream hist;
  write_emotion_histogram_csv(hist, emotion_histogram(report, c.bins));
  write_output(c, "emotions_histogram.csv", hist.str(), err);
}

void cmd_domains(const Config& c, std::ostream& err) {
  const auto db = load_wordnet(c);
  DomainGrouping grouping;
  try {
    grouping = parse_domain_grouping(c.grouping);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto corpus = annotate_corpus(*db, read_corpus(c, db.get()), Stopwords::english(), c.jobs);
  std::ostringstream s;
  write_domain_csv(s, corpus_domain_distribution(corpus, grouping));
  write_output(c, "domains.csv", s.str(), err);
}

void cmd_lexicon(const Config& c, std::ostream& err) {
  const auto set = load_lexicons(c);
  if (set.empty())
    throw UsageError("lexicon: load at least one of --swn, --wordlist-pos, --wordlist-neg, --mpqa, --tsv");
  const auto policy = make_policy(c, set);
  if (!c.terms.empty()) {
    const auto pos = parse_lex_pos(c.term_pos);
    if (!pos)
      throw UsageError(fmt::format("--pos: unknown part of speech '{}'", c.term_pos));
    std::ostringstream s;
    s << "term,pos,polarity,score,provenance,found\n";
    for (const auto& term : c.terms) {
      const auto v = ensemble_polarity(lexicon_key(term), *pos, set, policy);
      s << csv_field(term) << ',' << to_string(*pos) << ',' << to_string(v.polarity) << ','
        << fmt::format("{}", v.score) << ',' << v.provenance << ',' << (v.found ? "true" : "false")
        << '\n';
    }
    write_output(c, "lexicon.csv", s.str(), err);
    return;
  }
  if (c.corpus.empty())
    throw UsageError("lexicon: give --term for lookups or --corpus for sentence scoring");
  std::unique_ptr<WordNetDb> db;
  if (!c.wordnet.empty())
    db = load_wordnet(c);
  const auto corpus = read_corpus(c, db.get());
  std::ostringstream s;
  s << "id,sum_pos,sum_neg,net,hit_count\n";
  for (const auto& doc : corpus) {
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
      const auto score = sentence_lexicon_score(doc.sentences[i], set, policy, Stopwords::english(), c.allow_gap);
      s << fmt::format("{}#{},{},{},{},{}\n", doc.id, i, score.sum_pos, score.sum_neg, score.net, score.hit_count);
    }
  }
  write_output(c, "lexicon_scores.csv", s.str(), err);
}

void cmd_metachar(const Config& c, std::ostream& err) {
  const auto corpus = read_corpus(c, nullptr);
  const auto rating = make_rating(c);
  CueTable cues = CueTable::defaults();
  if (!c.cues.empty()) {
    require_path(c.cues, "cue table");
    cues = CueTable::load(c.cues);
  }
  EmoticonTable emoticons = EmoticonTable::defaults();
  if (!c.emoticons.empty()) {
    require_path(c.emoticons, "emoticon table");
    emoticons = EmoticonTable::load(c.emoticons);
  }
  std::ostringstream s;
  s << "id,ratings,segments,question,exclamation,colon,slash,emoticon,emoticon_score\n";
  for (const auto& doc : corpus) {
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
      const auto& text = doc.sentences[i].text;
      std::string ratings;
      for (const auto& r : extract_ratings(text, rating))
        ratings += fmt::format("{}{}/{}:{}", ratings.empty() ? "" : ";", r.numerator, r.denominator,
                               to_string(r.polarity));
      std::string segments;
      for (const auto& seg : extract_labeled_segments(text, cues))
        segments += fmt::format("{}{}:{}", segments.empty() ? "" : ";", seg.cue, to_string(seg.prior));
      const auto p = punctuation_profile(text, emoticons);
      s << doc.id << '#' << i << ',' << csv_field(ratings) << ',' << csv_field(segments) << ',' << p.question
        << ',' << p.exclamation << ',' << p.colon << ',' << p.slash << ',' << p.emoticon << ','
        << p.emoticon_score << '\n';
    }
  }
  write_output(c, "metachar.csv", s.str(), err);
}

void cmd_extract(const Config& c, std::ostream& err) {
  const auto session = open_session(c);
  std::ostringstream s;
  write_feature_csv(s, session->res, session->corpus, level_of(c), c.jobs);
  write_output(c, "features.csv", s.str(), err);
}

fs::path model_path(const Config& c) { return c.model.empty() ? output_dir(c) / "model.json" : fs::path(c.model); }

void cmd_train(const Config& c, std::ostream& err) {
  const auto session = open_session(c);
  Model model;
  try {
    model = train_model(session->res, session->corpus, level_of(c), classes_of(c), make_train_options(c), c.jobs);
  } catch (const std::invalid_argument& e) {
    throw DataError(fmt::format("training failed: {}", e.what()));
  }
  const auto path = model_path(c);
  write_text_file(path, model.to_json());
  err << "wrote " << path.string() << '\n';
}

void cmd_eval(const Config& c, std::ostream& err) {
  if (c.model.empty())
    throw UsageError("eval: --model is required");
  require_path(c.model, "model file");
  std::ifstream in(c.model);
  std::stringstream text;
  text << in.rdbuf();
  const auto model = Model::from_json(text.str());
  if (model.weights.dim != kFeatureCount)
    throw DataError(fmt::format("model '{}' has {} features, expected {}", c.model, model.weights.dim, kFeatureCount));
  const auto session = open_session(c);
  const auto ev = evaluate(model, session->res, session->corpus, level_of(c), classes_of(c), decode_of(c), c.jobs);
  write_output(c, "metrics.json", metrics_json(ev), err);
}

void cmd_report(const Config& c, std::ostream& err) {
  ReportOptions options;
  if (!c.only.empty()) {
    try {
      options.only = ReportSelection::parse(c.only);
    } catch (const std::invalid_argument& e) {
      throw UsageError(fmt::format("--only: {}", e.what()));
    }
  }
  try {
    options.grouping = parse_domain_grouping(c.grouping);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  options.transition_mode = *parse_transition_mode(c.transition_mode);
  options.alpha = c.alpha;
  options.level = level_of(c);
  options.mode = classes_of(c);
  options.decode = decode_of(c);
  options.train = make_train_options(c);
  options.test_fraction = c.test_fraction;
  options.jobs = c.jobs;
  const auto session = open_session(c);
  for (const auto& path : emit_report(output_dir(c), session->res, session->corpus, options))
    err << "wrote " << path.string() << '\n';
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"opinex: sentiment feature extraction and polarity classification for review corpora",
               "opinex"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "opinex 0.1.0");

  auto* stats = app.add_subcommand("stats", "Documents and sentences per domain and polarity (stats.csv)");
  add_corpus(stats, c);
  add_common(stats, c);

  auto* transitions = app.add_subcommand("transitions", "Sentence polarity transition matrix (transitions.json)");
  add_corpus(transitions, c);
  add_common(transitions, c);
  transitions->add_option("--mode", c.transition_mode, "Matrix kind")
      ->check(CLI::IsMember({"joint", "conditional"}));
  transitions->add_option("--alpha", c.alpha, "Additive smoothing")->check(CLI::NonNegativeNumber);

  auto* emotions = app.add_subcommand("emotions", "Emotion vectors per item (emotions.csv, emotions_histogram.csv)");
  add_corpus(emotions, c);
  add_common(emotions, c);
  add_wordnet(emotions, c);
  add_emotion(emotions, c);
  add_level(emotions, c);
  emotions->add_option("--bins", c.bins, "Histogram bins over [0, 1]")->check(CLI::PositiveNumber);

  auto* domains = app.add_subcommand("domains", "Lexicographer-file distribution per group (domains.csv)");
  add_corpus(domains, c);
  add_common(domains, c);
  add_wordnet(domains, c);
  domains->add_option("--grouping", c.grouping, "Grouping: domain, polarity or domain-polarity");

  auto* lexicon = app.add_subcommand("lexicon", "Ensemble lookups (lexicon.csv) or sentence scores (lexicon_scores.csv)");
  lexicon->add_option("--corpus", c.corpus, "Corpus to score sentence by sentence");
  add_common(lexicon, c);
  add_wordnet(lexicon, c);
  add_lexicons(lexicon, c);
  lexicon->add_option("--term", c.terms, "Term to look up (repeatable)")->default_str("");
  lexicon->add_option("--pos", c.term_pos, "Part of speech for --term lookups")
      ->check(CLI::IsMember({"noun", "verb", "adj", "adv", "any"}));

  auto* metachar = app.add_subcommand("metachar", "Ratings, cue segments and punctuation per sentence (metachar.csv)");
  add_corpus(metachar, c);
  add_common(metachar, c);
  add_metachar(metachar, c);

  auto* extract = app.add_subcommand("extract", "Feature matrix (features.csv)");
  add_corpus(extract, c);
  add_common(extract, c);
  add_features(extract, c);
  add_level(extract, c);

  auto* train_cmd = app.add_subcommand("train", "Train the polarity classifier (model.json)");
  add_corpus(train_cmd, c);
  add_common(train_cmd, c);
  add_features(train_cmd, c);
  add_level(train_cmd, c);
  add_training(train_cmd, c);
  train_cmd->add_option("--model", c.model, "Model output path (default <out>/model.json)");

  auto* eval = app.add_subcommand("eval", "Evaluate a trained model (metrics.json)");
  add_corpus(eval, c);
  add_common(eval, c);
  add_features(eval, c);
  add_level(eval, c);
  add_decode(eval, c);
  eval->add_option("--classes", c.classes, "Class mode")->check(CLI::IsMember({"3class", "binary"}));
  eval->add_option("--model", c.model, "Trained model JSON")->required();

  auto* report = app.add_subcommand("report", "Every report plus a held-out evaluation");
  add_corpus(report, c);
  add_common(report, c);
  add_features(report, c);
  add_level(report, c);
  add_training(report, c);
  add_decode(report, c);
  report->add_option("--transition-mode", c.transition_mode, "Transition matrix kind")
      ->check(CLI::IsMember({"joint", "conditional"}));
  report->add_option("--alpha", c.alpha, "Additive smoothing for transitions.json")->check(CLI::NonNegativeNumber);
  report->add_option("--grouping", c.grouping, "Grouping for domains.csv");
  report->add_option("--test-fraction", c.test_fraction, "Held-out share per label")->check(CLI::Range(0.0, 1.0));
  report->add_option("--only", c.only, "Comma list of stats, transitions, emotions, domains, metrics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (stats->parsed())
      cmd_stats(c, err);
    else if (transitions->parsed())
      cmd_transitions(c, err);
    else if (emotions->parsed())
      cmd_emotions(c, err);
    else if (domains->parsed())
      cmd_domains(c, err);
    else if (lexicon->parsed())
      cmd_lexicon(c, err);
    else if (metachar->parsed())
      cmd_metachar(c, err);
    else if (extract->parsed())
      cmd_extract(c, err);
    else if (train_cmd->parsed())
      cmd_train(c, err);
    else if (eval->parsed())
      cmd_eval(c, err);
    else if (report->parsed())
      cmd_report(c, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

} // namespace opinex::cli
