#include <doctest.h>

#include <opinex/classifier.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

using namespace opinex;

namespace {

struct Data {
  std::vector<std::vector<double>> x;
  std::vector<Polarity> y;
  Batch batch() const { return {x, y}; }
};

Data sample_rows(std::mt19937_64& rng, std::size_t n, std::size_t d) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> label(0, 2);
  Data data;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(d);
    for (auto& v : row)
      v = g(rng);
    data.x.push_back(row);
    data.y.push_back(kPolarities[label(rng)]);
  }
  return data;
}

LinearWeights random_weights(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g(0.0, 0.7);
  LinearWeights w(d);
  for (auto& v : w.values)
    v = g(rng);
  return w;
}

// Written out from the definition of the objective.
double reference_loss(const LinearWeights& w, const Data& data, double l2) {
  double total = 0;
  for (std::size_t i = 0; i < data.x.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      double z = w.bias(k);
      for (std::size_t j = 0; j < w.dim; ++j)
        z += w.weight(k, j) * data.x[i][j];
      const double p = 1.0 / (1.0 + std::exp(-z));
      const bool yk = index_of(data.y[i]) == k;
      total -= yk ? std::log(p) : std::log(1.0 - p);
    }
  double reg = 0;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < w.dim; ++j)
      reg += w.weight(k, j) * w.weight(k, j);
  return total / static_cast<double>(data.x.size()) + 0.5 * l2 * reg;
}

Data blobs(std::mt19937_64& rng, std::size_t per_class) {
  const std::array<std::array<double, 2>, 3> centers{{{4, 0}, {-4, 0}, {0, 4}}};
  std::normal_distribution<double> g(0.0, 0.6);
  Data data;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < per_class; ++i) {
      data.x.push_back({centers[k][0] + g(rng), centers[k][1] + g(rng)});
      data.y.push_back(kPolarities[k]);
    }
  return data;
}

// Multiclass perceptron; converging proves the set linearly separable.
bool perceptron_separates(const Data& data) {
  std::array<std::array<double, 3>, 3> w{};
  for (int epoch = 0; epoch < 1000; ++epoch) {
    int mistakes = 0;
    for (std::size_t i = 0; i < data.x.size(); ++i) {
      const std::array<double, 3> x{data.x[i][0], data.x[i][1], 1.0};
      std::size_t best = 0;
      std::array<double, 3> s{};
      for (std::size_t k = 0; k < 3; ++k) {
        s[k] = w[k][0] * x[0] + w[k][1] * x[1] + w[k][2] * x[2];
        if (s[k] > s[best])
          best = k;
      }
      const auto gold = index_of(data.y[i]);
      if (best != gold || std::count(s.begin(), s.end(), s[gold]) > 1) {
        ++mistakes;
        for (std::size_t j = 0; j < 3; ++j) {
          w[gold][j] += x[j];
          w[best == gold ? (gold + 1) % 3 : best][j] -= x[j];
        }
      }
    }
    if (mistakes == 0)
      return true;
  }
  return false;
}

double accuracy(const Model& m, const Data& data) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < data.x.size(); ++i)
    hits += m.predict(data.x[i]) == data.y[i];
  return static_cast<double>(hits) / static_cast<double>(data.x.size());
}

} // namespace

TEST_CASE("loss matches the written-out objective") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto data = sample_rows(rng, 15, 4);
    const auto w = random_weights(rng, 4);
    CHECK(loss(w, data.batch(), 0.3) == doctest::Approx(reference_loss(w, data, 0.3)).epsilon(1e-12));
  }
}

TEST_CASE("gradient agrees with central finite differences") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const auto data = sample_rows(rng, 12, 5);
    auto w = random_weights(rng, 5);
    const auto g = gradient(w, data.batch(), 0.01);
    REQUIRE(g.size() == w.values.size());
    for (std::size_t p = 0; p < w.values.size(); ++p) {
      const double h = 1e-6;
      const double keep = w.values[p];
      w.values[p] = keep + h;
      const double up = loss(w, data.batch(), 0.01);
      w.values[p] = keep - h;
      const double down = loss(w, data.batch(), 0.01);
      w.values[p] = keep;
      const double numeric = (up - down) / (2 * h);
      CHECK(std::abs(numeric - g[p]) <= 1e-4 * std::max(1.0, std::abs(numeric)));
    }
  }
}

TEST_CASE("gradient at zero weights has the closed form") {
  std::mt19937_64 rng(53);
  const auto data = sample_rows(rng, 40, 3);
  const LinearWeights zero(3);
  const auto g = gradient(zero, data.batch(), 0.5);
  for (std::size_t k = 0; k < 3; ++k) {
    const double freq = static_cast<double>(std::count(data.y.begin(), data.y.end(), kPolarities[k])) / 40.0;
    CHECK(g[k * 4 + 3] == doctest::Approx(0.5 - freq).epsilon(1e-12));
    for (std::size_t j = 0; j < 3; ++j) {
      double expected = 0;
      for (std::size_t i = 0; i < 40; ++i)
        expected += (0.5 - (index_of(data.y[i]) == k ? 1.0 : 0.0)) * data.x[i][j];
      CHECK(g[k * 4 + j] == doctest::Approx(expected / 40.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("duplicating every row leaves loss and gradient unchanged") {
  std::mt19937_64 rng(59);
  const auto data = sample_rows(rng, 10, 3);
  auto twice = data;
  twice.x.insert(twice.x.end(), data.x.begin(), data.x.end());
  twice.y.insert(twice.y.end(), data.y.begin(), data.y.end());
  const auto w = random_weights(rng, 3);
  CHECK(loss(w, data.batch(), 0.1) == doctest::Approx(loss(w, twice.batch(), 0.1)).epsilon(1e-12));
  const auto a = gradient(w, data.batch(), 0.1);
  const auto b = gradient(w, twice.batch(), 0.1);
  for (std::size_t p = 0; p < a.size(); ++p)
    CHECK(a[p] == doctest::Approx(b[p]).epsilon(1e-12));
}

TEST_CASE("separable data is fitted") {
  std::mt19937_64 rng(61);
  const auto data = blobs(rng, 100);
  REQUIRE(perceptron_separates(data));
  const auto model = train(data.x, data.y, {});
  CHECK(accuracy(model, data) >= 0.99);
}

TEST_CASE("standardizer") {
  std::mt19937_64 rng(67);
  auto data = sample_rows(rng, 200, 4);
  for (auto& row : data.x) {
    row[0] = row[0] * 30 + 7;
    row[3] = 2.5;
  }
  const auto s = Standardizer::fit(data.x);
  std::array<double, 4> mean{}, sq{};
  for (const auto& row : data.x) {
    const auto z = s.apply(row);
    for (std::size_t j = 0; j < 4; ++j) {
      mean[j] += z[j] / 200.0;
      sq[j] += z[j] * z[j] / 200.0;
    }
  }
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(std::abs(mean[j]) < 1e-9);
    CHECK(std::abs(sq[j] - mean[j] * mean[j] - 1.0) < 1e-6);
  }
  CHECK(s.scale[3] == 0.0);
  CHECK(mean[3] == 0.0);
  CHECK(sq[3] == 0.0);
}

TEST_CASE("constant features predict the majority class") {
  Data data;
  for (int i = 0; i < 10; ++i) {
    data.x.push_back({1.0, 0.0});
    data.y.push_back(i < 6 ? Polarity::Neg : i < 8 ? Polarity::Pos : Polarity::Neu);
  }
  const auto model = train(data.x, data.y, {});
  CHECK(model.predict(std::vector<double>{1.0, 0.0}) == Polarity::Neg);
  CHECK(model.predict(std::vector<double>{5.0, -3.0}) == Polarity::Neg);
}

TEST_CASE("strong regularization shrinks the weights") {
  std::mt19937_64 rng(71);
  const auto data = blobs(rng, 30);
  auto norm = [](const Model& m) {
    double s = 0;
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < m.weights.dim; ++j)
        s += m.weights.weight(k, j) * m.weights.weight(k, j);
    return std::sqrt(s);
  };
  TrainOptions weak;
  weak.l2 = 0.0;
  TrainOptions strong;
  strong.l2 = 15.0;
  const double a = norm(train(data.x, data.y, weak));
  const double b = norm(train(data.x, data.y, strong));
  CHECK(b < 0.1 * a);
}

TEST_CASE("loss never increases with a small step") {
  std::mt19937_64 rng(73);
  const auto data = sample_rows(rng, 60, 6);
  std::vector<double> trace;
  TrainOptions o;
  o.epochs = 200;
  o.learning_rate = 0.05;
  train(data.x, data.y, o, &trace);
  REQUIRE(trace.size() == 201);
  for (std::size_t i = 1; i < trace.size(); ++i)
    CHECK(trace[i] <= trace[i - 1] + 1e-15);
  CHECK(trace.front() == doctest::Approx(3.0 * std::log(2.0)));
}

TEST_CASE("training is deterministic and models round-trip through JSON") {
  std::mt19937_64 rng(79);
  const auto data = sample_rows(rng, 50, 4);
  const auto a = train(data.x, data.y, {});
  const auto b = train(data.x, data.y, {});
  CHECK(a.weights.values == b.weights.values);
  const auto c = Model::from_json(a.to_json());
  CHECK(c.weights.values == a.weights.values);
  CHECK(c.standardizer.mean == a.standardizer.mean);
  CHECK(c.standardizer.scale == a.standardizer.scale);
  CHECK(c.active == a.active);
  CHECK(c.options.epochs == a.options.epochs);
  for (const auto& row : data.x)
    CHECK(c.scores(row) == a.scores(row));
  CHECK_THROWS(Model::from_json("{}"));
  CHECK_THROWS(Model::from_json("not json"));
}

TEST_CASE("binary training masks the absent class") {
  Data data;
  for (int i = 0; i < 20; ++i) {
    data.x.push_back({static_cast<double>(i)});
    data.y.push_back(i < 10 ? Polarity::Neg : Polarity::Pos);
  }
  const auto m = train(data.x, data.y, {});
  CHECK(m.active == std::array<bool, 3>{true, true, false});
  for (const auto& row : data.x)
    CHECK(m.predict(row) != Polarity::Neu);
}

TEST_CASE("training input errors") {
  const std::vector<std::vector<double>> x{{1.0}, {2.0}};
  CHECK_THROWS_AS(train(x, std::vector{Polarity::Pos, Polarity::Pos}, {}), std::invalid_argument);
  CHECK_THROWS_AS(train(x, std::vector{Polarity::Pos}, {}), std::invalid_argument);
  const std::vector<std::vector<double>> ragged{{1.0}, {2.0, 3.0}};
  CHECK_THROWS_AS(train(ragged, std::vector{Polarity::Pos, Polarity::Neg}, {}), std::invalid_argument);
  const std::vector<std::vector<double>> nan{{1.0}, {std::numeric_limits<double>::quiet_NaN()}};
  CHECK_THROWS_AS(train(nan, std::vector{Polarity::Pos, Polarity::Neg}, {}), std::invalid_argument);
}

TEST_CASE("metrics against a direct recount") {
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<int> label(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polarity> gold, pred;
    for (int i = 0; i < 30; ++i) {
      gold.push_back(kPolarities[label(rng)]);
      pred.push_back(kPolarities[label(rng)]);
    }
    const auto m = score_predictions(gold, pred);
    CHECK(m.items == 30);
    int hits = 0;
    for (int i = 0; i < 30; ++i)
      hits += gold[i] == pred[i];
    CHECK(m.accuracy == doctest::Approx(hits / 30.0));
    for (std::size_t k = 0; k < 3; ++k) {
      const auto row = std::accumulate(m.confusion[k].begin(), m.confusion[k].end(), std::int64_t{0});
      CHECK(row == m.per_class[k].support);
      std::int64_t tp = 0, fp = 0, fn = 0;
      for (int i = 0; i < 30; ++i) {
        const bool g = index_of(gold[i]) == k, p = index_of(pred[i]) == k;
        tp += g && p;
        fp += !g && p;
        fn += g && !p;
      }
      const double precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
      const double recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
      CHECK(m.per_class[k].precision == doctest::Approx(precision));
      CHECK(m.per_class[k].recall == doctest::Approx(recall));
      CHECK(m.per_class[k].f1 ==
            doctest::Approx(precision + recall == 0 ? 0.0 : 2 * precision * recall / (precision + recall)));
    }
  }
  CHECK_THROWS_AS(score_predictions(std::vector{Polarity::Pos}, std::vector<Polarity>{}), std::invalid_argument);
  CHECK(score_predictions({}, {}).items == 0);
}
