#include <opinex/classifier.hpp>
#include <opinex/corpus.hpp>
#include <opinex/wordnet.hpp>
#include <opinex/wsd.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

const opinex::WordNetDb& fixture_db() {
  static const auto db = opinex::WordNetDb::load(OPINEX_FIXTURE_DIR "/wordnet");
  return db;
}

void BM_WuPalmerAllNounPairs(benchmark::State& state) {
  const auto& db = fixture_db();
  std::vector<const opinex::Synset*> nouns;
  for (const auto& s : db.synsets())
    if (s.id.pos == opinex::PartOfSpeech::Noun)
      nouns.push_back(&s);
  for (auto _ : state) {
    double sum = 0.0;
    for (const auto& a : nouns)
      for (const auto& b : nouns)
        sum += opinex::similarity(db, *a, *b, opinex::SimilarityMeasure::WuPalmer);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(nouns.size() * nouns.size()));
}
BENCHMARK(BM_WuPalmerAllNounPairs);

constexpr const char* kReview =
    "The phone has a stylish screen but the battery is unreliable and the camera lens is bad. "
    "I bought it to play a game and read a book, and it made me feel anger and sadness!";

void BM_Tokenize(benchmark::State& state) {
  const auto& db = fixture_db();
  for (auto _ : state)
    benchmark::DoNotOptimize(opinex::tokenize(kReview, &db));
}
BENCHMARK(BM_Tokenize);

void BM_LeskSentence(benchmark::State& state) {
  const auto& db = fixture_db();
  opinex::Sentence s;
  s.text = kReview;
  s.tokens = opinex::tokenize(kReview, &db);
  for (auto _ : state)
    benchmark::DoNotOptimize(opinex::disambiguate_sentence(db, s, opinex::Stopwords::english()));
}
BENCHMARK(BM_LeskSentence);

void BM_TrainLogistic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(64));
  std::vector<opinex::Polarity> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = opinex::kPolarities[i % 3];
    for (std::size_t j = 0; j < 64; ++j)
      rows[i][j] = noise(rng) + (j % 3 == i % 3 ? 1.0 : 0.0);
  }
  opinex::TrainOptions options;
  options.epochs = 100;
  for (auto _ : state)
    benchmark::DoNotOptimize(opinex::train(rows, labels, options));
}
BENCHMARK(BM_TrainLogistic)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
