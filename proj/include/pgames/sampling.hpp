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


// Parameter sampling for 2x2 zero-sum games: draw payoff vectors (a, c, e, g),
// solve each once, and answer queries with the equilibrium of the nearest
// sample in L2.
//
// Random streams: every draw comes from std::mt19937_64 seeded with
// derive_seed(master, stream). Training games use stream 1, the test set for
// the i-th entry of k_values uses stream 100 + i, k-means initialization
// uses stream 7. A uniform draw maps the top 53 bits of one engine output to
// [0, 1) and then affinely onto [low, high).

#ifndef PGAMES_SAMPLING_HPP_
#define PGAMES_SAMPLING_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <vector>

#include "pgames/strategic.hpp"

namespace pgames::sampling {

inline constexpr std::uint64_t kTrainStream = 1;
inline constexpr std::uint64_t kTestStreamBase = 100;
inline constexpr std::uint64_t kKMeansStream = 7;

// splitmix64 of master + stream * golden gamma.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

struct PayoffRange {
  double low = -1.0;
  double high = 1.0;

  void validate() const;
  double width() const { return high - low; }
};

class Uniform {
 public:
  Uniform(std::uint64_t seed, PayoffRange range) : engine_(seed), range_(range) {}
  double operator()() {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return range_.low + (range_.high - range_.low) * u;
  }

 private:
  std::mt19937_64 engine_;
  PayoffRange range_;
};

// t games, one (a, c, e, g) column each, filled column by column.
Eigen::Matrix4Xd sample_zs_games(Eigen::Index t, std::uint64_t seed, PayoffRange range = {});

// Column of `train` closest to `query` in L2; the lowest index wins exact
// ties. Only the first `limit` columns are searched when limit >= 0.
template <typename TrainDerived, typename QueryDerived>
Eigen::Index nearest_index(const Eigen::MatrixBase<TrainDerived>& train,
                           const Eigen::MatrixBase<QueryDerived>& query, Eigen::Index limit = -1) {
  const Eigen::Index count = limit < 0 ? train.cols() : limit;
  if (count < 1 || count > train.cols()) throw DomainError("nearest-neighbor search needs training points");
  if (query.size() != train.rows()) {
    throw DimensionError("query has " + std::to_string(query.size()) + " coordinates, training set " +
                         std::to_string(train.rows()));
  }
  Eigen::Index best = 0;
  auto best_dist = (train.col(0) - query).squaredNorm();
  for (Eigen::Index i = 1; i < count; ++i) {
    const auto d = (train.col(i) - query).squaredNorm();
    if (d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  return best;
}

// Row-player payoffs of the game stored in one sample column.
inline TwoByTwoPayoffs<double> zs_payoffs(const Eigen::Ref<const Eigen::Vector4d>& v) {
  return TwoByTwoPayoffs<double>::zero_sum(v[0], v[1], v[2], v[3]);
}

struct SampleSet {
  Eigen::Matrix4Xd params;
  std::vector<StrategyProfile<double>> strategies;  // index-aligned with columns

  Eigen::Index size() const { return params.cols(); }
};

SampleSet solve_samples(const Eigen::Matrix4Xd& params);

// Mean of the row and column strategies' exploitabilities in `game`.
double profile_exploitability(const Eigen::Ref<const Eigen::Vector4d>& game,
                              const StrategyProfile<double>& profile);

struct ExperimentConfig {
  Eigen::Index n_train = 100000;
  std::vector<Eigen::Index> k_values = {1, 2, 3, 5, 10, 20, 100, 1000, 10000, 100000};
  Eigen::Index n_test = 10000;
  std::uint64_t seed = 42;
  PayoffRange range;

  // Throws ParameterError naming the field.
  void validate() const;
};

struct ExperimentRow {
  Eigen::Index k;
  double avg_exploitability;
  double std_err;  // sample standard deviation / sqrt(n_test)
  Eigen::Index n_test;
  std::uint64_t seed;
};

// For each k: a fresh test set, nearest lookup among the first k training
// games, exploitability of that game's equilibrium in the test game.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

// Same as run_experiment but with caller-supplied data; test_sets[i] belongs
// to k_values[i].
std::vector<ExperimentRow> run_experiment(const SampleSet& train,
                                          const std::vector<Eigen::Index>& k_values,
                                          const std::vector<Eigen::Matrix4Xd>& test_sets,
                                          std::uint64_t seed);

inline constexpr const char* kCsvHeader = "k,avg_exploitability,std_err,n_test,seed";

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

struct KMeansResult {
  Eigen::MatrixXd means;                   // one column per cluster
  std::vector<Eigen::Index> assignment;    // cluster of each sample
  std::vector<double> wcss_history;        // after each assignment step
  int iterations = 0;
};

// Lloyd's algorithm from k distinct samples picked with the seed. A cluster
// that empties is moved onto the sample farthest from its current mean.
KMeansResult kmeans_variant(const Eigen::MatrixXd& samples, Eigen::Index k, int max_iter,
                            std::uint64_t seed);

// Solves the game at each cluster mean.
SampleSet solve_at_means(const Eigen::Matrix4Xd& means);

// run_experiment with k read as a cluster count: the n_train games are
// clustered into k means and lookups go to the nearest mean.
std::vector<ExperimentRow> run_kmeans_experiment(const ExperimentConfig& config, int max_iter = 100);

// A family of 2x2 zero-sum games indexed by a parameter vector lambda drawn
// uniformly from range^dim.
struct ZeroSumFamily {
  Eigen::Index dim = 4;
  PayoffRange range;
  std::function<Eigen::Vector4d(const Eigen::VectorXd&)> game;

  // lambda is the payoff vector itself.
  static ZeroSumFamily uniform(PayoffRange range = {});
  // Every lambda maps to the same game.
  static ZeroSumFamily constant(const Eigen::Vector4d& game, Eigen::Index dim = 1);
};

struct ConvergenceRow {
  Eigen::Index t;
  double mean;                    // over seeds
  std::vector<double> per_seed;   // mean exploitability for each seed
};

// For each seed: t_max samples (stream 1), one test set of n_test (stream 2),
// lookups restricted to the first t samples for every t.
std::vector<ConvergenceRow> convergence_study(const ZeroSumFamily& family,
                                              const std::vector<Eigen::Index>& t_values,
                                              const std::vector<std::uint64_t>& seeds,
                                              Eigen::Index n_test);

}  // namespace pgames::sampling

#endif  // PGAMES_SAMPLING_HPP_
