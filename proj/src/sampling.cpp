// Copyright 2026 The pgames Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pgames/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>

namespace pgames::sampling {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + stream * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void PayoffRange::validate() const {
  if (!(std::isfinite(low) && std::isfinite(high) && low < high)) {
    throw ParameterError("payoff_range", "payoff range needs finite low < high");
  }
}

Eigen::Matrix4Xd sample_zs_games(Eigen::Index t, std::uint64_t seed, PayoffRange range) {
  if (t < 0) throw ParameterError("t", "sample count must be non-negative");
  range.validate();
  Uniform draw(seed, range);
  Eigen::Matrix4Xd out(4, t);
  for (Eigen::Index j = 0; j < t; ++j) {
    for (Eigen::Index i = 0; i < 4; ++i) out(i, j) = draw();
  }
  return out;
}

SampleSet solve_samples(const Eigen::Matrix4Xd& params) {
  SampleSet set{params, {}};
  set.strategies.reserve(static_cast<std::size_t>(params.cols()));
  for (Eigen::Index j = 0; j < params.cols(); ++j) {
    set.strategies.push_back(solve_2x2(zs_payoffs(params.col(j))));
  }
  return set;
}

double profile_exploitability(const Eigen::Ref<const Eigen::Vector4d>& game,
                              const StrategyProfile<double>& profile) {
  const double a = game[0], c = game[1], e = game[2], g = game[3];
  const double v = zero_sum_value_2x2(a, c, e, g);
  const double p = profile.row[0], q = profile.col[0];
  // Row guarantee: worst column against (p, 1 - p).
  const double row_floor = std::min(p * a + (1 - p) * e, p * c + (1 - p) * g);
  // Column concession: best row against (q, 1 - q).
  const double col_ceiling = std::max(q * a + (1 - q) * c, q * e + (1 - q) * g);
  return 0.5 * ((v - row_floor) + (col_ceiling - v));
}

void ExperimentConfig::validate() const {
  if (n_train < 1) throw ParameterError("n_train", "n_train must be at least 1");
  if (n_test < 1) throw ParameterError("n_test", "n_test must be at least 1");
  if (k_values.empty()) throw ParameterError("k_values", "k_values must not be empty");
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (k_values[i] < 1) throw ParameterError("k_values", "every k must be at least 1");
    if (k_values[i] > n_train) {
      throw ParameterError("k_values", "k = " + std::to_string(k_values[i]) +
                                           " exceeds n_train = " + std::to_string(n_train));
    }
    if (i && k_values[i] <= k_values[i - 1]) {
      throw ParameterError("k_values", "k_values must be strictly ascending");
    }
  }
  range.validate();
}

namespace {

struct Moments {
  double mean;
  double std_err;
};

Moments moments(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0)) / std::sqrt(n)};
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const SampleSet& train,
                                          const std::vector<Eigen::Index>& k_values,
                                          const std::vector<Eigen::Matrix4Xd>& test_sets,
                                          std::uint64_t seed) {
  if (k_values.size() != test_sets.size()) {
    throw DimensionError("one test set is needed per k");
  }
  std::vector<ExperimentRow> rows;
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    const Eigen::Index k = k_values[i];
    if (k < 1 || k > train.size()) throw ParameterError("k_values", "k exceeds the training set");
    const Eigen::Matrix4Xd& tests = test_sets[i];
    std::vector<double> values(static_cast<std::size_t>(tests.cols()));
    for (Eigen::Index j = 0; j < tests.cols(); ++j) {
      const Eigen::Index near = nearest_index(train.params, tests.col(j), k);
      values[static_cast<std::size_t>(j)] =
          profile_exploitability(tests.col(j), train.strategies[static_cast<std::size_t>(near)]);
    }
    const Moments m = moments(values);
    rows.push_back({k, m.mean, m.std_err, tests.cols(), seed});
  }
  return rows;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  config.validate();
  const SampleSet train =
      solve_samples(sample_zs_games(config.n_train, derive_seed(config.seed, kTrainStream), config.range));
  std::vector<Eigen::Matrix4Xd> tests;
  for (std::size_t i = 0; i < config.k_values.size(); ++i) {
    tests.push_back(sample_zs_games(config.n_test, derive_seed(config.seed, kTestStreamBase + i),
                                    config.range));
  }
  return run_experiment(train, config.k_values, tests, config.seed);
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << kCsvHeader << '\n' << std::defaultfloat << std::setprecision(6);
  for (const auto& row : rows) {
    out << row.k << ',' << row.avg_exploitability << ',' << row.std_err << ',' << row.n_test << ','
        << row.seed << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

KMeansResult kmeans_variant(const Eigen::MatrixXd& samples, Eigen::Index k, int max_iter,
                            std::uint64_t seed) {
  const Eigen::Index n = samples.cols();
  if (k < 1 || k > n) throw ParameterError("k", "k must lie in [1, number of samples]");
  if (max_iter < 1) throw ParameterError("max_iter", "max_iter must be at least 1");

  // Forgy initialization: k distinct samples by a partial Fisher-Yates shuffle.
  std::mt19937_64 engine(derive_seed(seed, kKMeansStream));
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto span = static_cast<std::uint64_t>(n - i);
    const auto j = i + static_cast<Eigen::Index>(engine() % span);
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  KMeansResult result;
  result.means.resize(samples.rows(), k);
  for (Eigen::Index c = 0; c < k; ++c) result.means.col(c) = samples.col(order[static_cast<std::size_t>(c)]);
  result.assignment.assign(static_cast<std::size_t>(n), -1);

  for (int iter = 0; iter < max_iter; ++iter) {
    bool changed = false;
    double wcss = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index c = nearest_index(result.means, samples.col(j));
      wcss += (samples.col(j) - result.means.col(c)).squaredNorm();
      if (result.assignment[static_cast<std::size_t>(j)] != c) {
        result.assignment[static_cast<std::size_t>(j)] = c;
        changed = true;
      }
    }
    result.wcss_history.push_back(wcss);
    result.iterations = iter + 1;
    if (!changed) break;

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(samples.rows(), k);
    std::vector<Eigen::Index> counts(static_cast<std::size_t>(k), 0);
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index c = result.assignment[static_cast<std::size_t>(j)];
      sums.col(c) += samples.col(j);
      ++counts[static_cast<std::size_t>(c)];
    }
    for (Eigen::Index c = 0; c < k; ++c) {
      const Eigen::Index count = counts[static_cast<std::size_t>(c)];
      if (count > 0) result.means.col(c) = sums.col(c) / static_cast<double>(count);
    }
    for (Eigen::Index c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) continue;
      Eigen::Index far = 0;
      double far_dist = -1.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index own = result.assignment[static_cast<std::size_t>(j)];
        const double d = (samples.col(j) - result.means.col(own)).squaredNorm();
        if (d > far_dist) {
          far_dist = d;
          far = j;
        }
      }
      result.means.col(c) = samples.col(far);
      result.assignment[static_cast<std::size_t>(far)] = c;
    }
  }
  return result;
}

SampleSet solve_at_means(const Eigen::Matrix4Xd& means) { return solve_samples(means); }

std::vector<ExperimentRow> run_kmeans_experiment(const ExperimentConfig& config, int max_iter) {
  config.validate();
  const Eigen::Matrix4Xd games =
      sample_zs_games(config.n_train, derive_seed(config.seed, kTrainStream), config.range);
  std::vector<ExperimentRow> rows;
  for (std::size_t i = 0; i < config.k_values.size(); ++i) {
    const Eigen::Index k = config.k_values[i];
    const KMeansResult clusters = kmeans_variant(games, k, max_iter, config.seed);
    const SampleSet means = solve_at_means(clusters.means);
    const Eigen::Matrix4Xd tests =
        sample_zs_games(config.n_test, derive_seed(config.seed, kTestStreamBase + i), config.range);
    auto row = run_experiment(means, {k}, {tests}, config.seed);
    rows.push_back(row.front());
  }
  return rows;
}

ZeroSumFamily ZeroSumFamily::uniform(PayoffRange range) {
  ZeroSumFamily f;
  f.dim = 4;
  f.range = range;
  f.game = [](const Eigen::VectorXd& lambda) -> Eigen::Vector4d { return lambda; };
  return f;
}

ZeroSumFamily ZeroSumFamily::constant(const Eigen::Vector4d& game, Eigen::Index dim) {
  ZeroSumFamily f;
  f.dim = dim;
  f.game = [game](const Eigen::VectorXd&) -> Eigen::Vector4d { return game; };
  return f;
}

namespace {

Eigen::MatrixXd sample_lambdas(const ZeroSumFamily& family, Eigen::Index count, std::uint64_t seed) {
  Uniform draw(seed, family.range);
  Eigen::MatrixXd out(family.dim, count);
  for (Eigen::Index j = 0; j < count; ++j) {
    for (Eigen::Index i = 0; i < family.dim; ++i) out(i, j) = draw();
  }
  return out;
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(const ZeroSumFamily& family,
                                              const std::vector<Eigen::Index>& t_values,
                                              const std::vector<std::uint64_t>& seeds,
                                              Eigen::Index n_test) {
  if (t_values.empty() || seeds.empty()) throw ParameterError("t_values", "need t values and seeds");
  if (n_test < 1) throw ParameterError("n_test", "n_test must be at least 1");
  if (family.dim < 1 || !family.game) throw ParameterError("family", "family needs a game map");
  family.range.validate();
  for (std::size_t i = 0; i < t_values.size(); ++i) {
    if (t_values[i] < 1 || (i && t_values[i] <= t_values[i - 1])) {
      throw ParameterError("t_values", "t_values must be positive and strictly ascending");
    }
  }
  const Eigen::Index t_max = t_values.back();

  std::vector<ConvergenceRow> rows;
  for (Eigen::Index t : t_values) rows.push_back({t, 0.0, {}});

  for (std::uint64_t seed : seeds) {
    const Eigen::MatrixXd train = sample_lambdas(family, t_max, derive_seed(seed, kTrainStream));
    std::vector<StrategyProfile<double>> strategies;
    strategies.reserve(static_cast<std::size_t>(t_max));
    for (Eigen::Index j = 0; j < t_max; ++j) {
      strategies.push_back(solve_2x2(zs_payoffs(family.game(train.col(j)))));
    }
    const Eigen::MatrixXd tests = sample_lambdas(family, n_test, derive_seed(seed, 2));

    std::vector<double> sums(t_values.size(), 0.0);
    for (Eigen::Index j = 0; j < n_test; ++j) {
      const Eigen::VectorXd lambda = tests.col(j);
      const Eigen::Vector4d game = family.game(lambda);
      // One scan over the training prefix, read off at each checkpoint t.
      Eigen::Index best = 0;
      double best_dist = std::numeric_limits<double>::infinity();
      std::size_t next = 0;
      for (Eigen::Index i = 0; i < t_max; ++i) {
        const double d = (train.col(i) - lambda).squaredNorm();
        if (d < best_dist) {
          best_dist = d;
          best = i;
        }
        while (next < t_values.size() && t_values[next] == i + 1) {
          sums[next] += profile_exploitability(game, strategies[static_cast<std::size_t>(best)]);
          ++next;
        }
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const double mean = sums[r] / static_cast<double>(n_test);
      rows[r].per_seed.push_back(mean);
    }
  }
  for (auto& row : rows) {
    row.mean = std::accumulate(row.per_seed.begin(), row.per_seed.end(), 0.0) /
               static_cast<double>(row.per_seed.size());
  }
  return rows;
}

}  // namespace pgames::sampling
