#include <opinex/classifier.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opinex {

namespace {

double sigmoid(double m) {
  if (m >= 0.0)
    return 1.0 / (1.0 + std::exp(-m));
  const double e = std::exp(m);
  return e / (1.0 + e);
}

double softplus(double m) { return m > 0.0 ? m + std::log1p(std::exp(-m)) : std::log1p(std::exp(m)); }

void check_batch(const LinearWeights& weights, const Batch& batch) {
  if (batch.features.size() != batch.labels.size())
    throw std::invalid_argument("batch features and labels differ in length");
  for (const auto& row : batch.features)
    if (row.size() != weights.dim)
      throw std::invalid_argument("batch row dimension does not match the model");
}

} // namespace

double LinearWeights::margin(std::size_t k, std::span<const double> x) const {
  const double* w = values.data() + k * stride();
  double m = w[dim];
  for (std::size_t j = 0; j < dim; ++j)
    m += w[j] * x[j];
  return m;
}

double loss(const LinearWeights& weights, const Batch& batch, double l2) {
  check_batch(weights, batch);
  double total = 0.0;
  for (std::size_t i = 0; i < batch.features.size(); ++i) {
    for (std::size_t k = 0; k < kClassCount; ++k) {
      const double y = index_of(batch.labels[i]) == k ? 1.0 : 0.0;
      const double m = weights.margin(k, batch.features[i]);
      total += softplus(m) - y * m;
    }
  }
  double value = batch.features.empty() ? 0.0 : total / static_cast<double>(batch.features.size());
  double norm = 0.0;
  for (std::size_t k = 0; k < kClassCount; ++k)
    for (std::size_t j = 0; j < weights.dim; ++j)
      norm += weights.weight(k, j) * weights.weight(k, j);
  return value + 0.5 * l2 * norm;
}

std::vector<double> gradient(const LinearWeights& weights, const Batch& batch, double l2) {
  check_batch(weights, batch);
  if (batch.features.empty())
    throw std::invalid_argument("gradient needs a non-empty batch");
  std::vector<double> g(weights.values.size(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(batch.features.size());
  const std::size_t stride = weights.stride();
  for (std::size_t i = 0; i < batch.features.size(); ++i) {
    const auto& x = batch.features[i];
    for (std::size_t k = 0; k < kClassCount; ++k) {
      const double y = index_of(batch.labels[i]) == k ? 1.0 : 0.0;
      const double r = (sigmoid(weights.margin(k, x)) - y) * inv_n;
      double* gk = g.data() + k * stride;
      for (std::size_t j = 0; j < weights.dim; ++j)
        gk[j] += r * x[j];
      gk[weights.dim] += r;
    }
  }
  for (std::size_t k = 0; k < kClassCount; ++k)
    for (std::size_t j = 0; j < weights.dim; ++j)
      g[k * stride + j] += l2 * weights.weight(k, j);
  return g;
}

Standardizer Standardizer::fit(std::span<const std::vector<double>> rows) {
  Standardizer s;
  if (rows.empty())
    return s;
  const std::size_t d = rows.front().size();
  s.mean.assign(d, 0.0);
  s.scale.assign(d, 0.0);
  const double n = static_cast<double>(rows.size());
  for (const auto& r : rows)
    for (std::size_t j = 0; j < d; ++j)
      s.mean[j] += r[j];
  for (auto& m : s.mean)
    m /= n;
  for (const auto& r : rows)
    for (std::size_t j = 0; j < d; ++j)
      s.scale[j] += (r[j] - s.mean[j]) * (r[j] - s.mean[j]);
  for (auto& v : s.scale) {
    const double sd = std::sqrt(v / n);
    v = sd > 1e-12 ? sd : 0.0;
  }
  return s;
}

std::vector<double> Standardizer::apply(std::span<const double> x) const {
  if (x.size() != mean.size())
    throw std::invalid_argument("feature dimension does not match the standardizer");
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t j = 0; j < x.size(); ++j)
    out[j] = scale[j] > 0.0 ? (x[j] - mean[j]) / scale[j] : 0.0;
  return out;
}

std::array<double, kClassCount> Model::scores(std::span<const double> x) const {
  const auto z = standardizer.apply(x);
  std::array<double, kClassCount> out{};
  for (std::size_t k = 0; k < kClassCount; ++k)
    out[k] = sigmoid(weights.margin(k, z));
  return out;
}

Polarity Model::predict(std::span<const double> x) const {
  const auto z = standardizer.apply(x);
  std::size_t best = kClassCount;
  double best_margin = 0.0;
  for (std::size_t k = 0; k < kClassCount; ++k) {
    if (!active[k])
      continue;
    const double m = weights.margin(k, z);
    if (best == kClassCount || m > best_margin) {
      best = k;
      best_margin = m;
    }
  }
  return kPolarities[best == kClassCount ? index_of(Polarity::Neu) : best];
}

std::string Model::to_json() const {
  nlohmann::ordered_json doc;
  doc["dim"] = weights.dim;
  doc["weights"] = weights.values;
  doc["mean"] = standardizer.mean;
  doc["scale"] = standardizer.scale;
  doc["active"] = active;
  doc["hyperparameters"] = {{"learning_rate", options.learning_rate},
                            {"lambda", options.l2},
                            {"epochs", options.epochs},
                            {"seed", options.seed}};
  return doc.dump(2) + "\n";
}

Model Model::from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    Model m;
    m.weights = LinearWeights(doc.at("dim").get<std::size_t>());
    m.weights.values = doc.at("weights").get<std::vector<double>>();
    m.standardizer.mean = doc.at("mean").get<std::vector<double>>();
    m.standardizer.scale = doc.at("scale").get<std::vector<double>>();
    m.active = doc.at("active").get<std::array<bool, kClassCount>>();
    const auto& hp = doc.at("hyperparameters");
    m.options.learning_rate = hp.at("learning_rate").get<double>();
    m.options.l2 = hp.at("lambda").get<double>();
    m.options.epochs = hp.at("epochs").get<int>();
    m.options.seed = hp.at("seed").get<std::uint64_t>();
    if (m.weights.values.size() != kClassCount * m.weights.stride() ||
        m.standardizer.mean.size() != m.weights.dim || m.standardizer.scale.size() != m.weights.dim)
      throw DataError("model file: array sizes do not match 'dim'");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(fmt::format("model file: {}", e.what()));
  }
}

Model train(std::span<const std::vector<double>> features, std::span<const Polarity> labels,
            const TrainOptions& options, std::vector<double>* loss_trace) {
  if (features.size() != labels.size())
    throw std::invalid_argument("features and labels differ in length");
  if (features.empty())
    throw std::invalid_argument("cannot train on an empty set");
  const std::size_t d = features.front().size();
  for (const auto& row : features) {
    if (row.size() != d)
      throw std::invalid_argument("feature rows differ in length");
    for (const double v : row)
      if (!std::isfinite(v))
        throw std::invalid_argument("non-finite feature value");
  }
  Model model;
  for (const Polarity p : labels)
    model.active[index_of(p)] = true;
  if (std::count(model.active.begin(), model.active.end(), true) < 2)
    throw std::invalid_argument("training needs at least two distinct labels");

  model.options = options;
  model.standardizer = Standardizer::fit(features);
  std::vector<std::vector<double>> z;
  z.reserve(features.size());
  for (const auto& row : features)
    z.push_back(model.standardizer.apply(row));

  model.weights = LinearWeights(d);
  const Batch batch{z, labels};
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    if (loss_trace != nullptr)
      loss_trace->push_back(loss(model.weights, batch, options.l2));
    const auto g = gradient(model.weights, batch, options.l2);
    for (std::size_t i = 0; i < g.size(); ++i)
      model.weights.values[i] -= options.learning_rate * g[i];
  }
  if (loss_trace != nullptr)
    loss_trace->push_back(loss(model.weights, batch, options.l2));
  return model;
}

Metrics score_predictions(std::span<const Polarity> gold, std::span<const Polarity> predicted) {
  if (gold.size() != predicted.size())
    throw std::invalid_argument("gold and predicted label counts differ");
  Metrics m;
  m.items = static_cast<std::int64_t>(gold.size());
  std::int64_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++m.confusion[index_of(gold[i])][index_of(predicted[i])];
    correct += gold[i] == predicted[i] ? 1 : 0;
  }
  m.accuracy = gold.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(gold.size());
  for (std::size_t k = 0; k < kClassCount; ++k) {
    std::int64_t predicted_k = 0;
    std::int64_t support = 0;
    for (std::size_t j = 0; j < kClassCount; ++j) {
      predicted_k += m.confusion[j][k];
      support += m.confusion[k][j];
    }
    auto& c = m.per_class[k];
    c.support = support;
    const double tp = static_cast<double>(m.confusion[k][k]);
    c.precision = predicted_k > 0 ? tp / static_cast<double>(predicted_k) : 0.0;
    c.recall = support > 0 ? tp / static_cast<double>(support) : 0.0;
    c.f1 = c.precision + c.recall > 0.0 ? 2.0 * c.precision * c.recall / (c.precision + c.recall) : 0.0;
  }
  return m;
}

} // namespace opinex
