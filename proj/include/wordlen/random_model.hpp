#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "wordlen/length_distribution.hpp"
#include "wordlen/power_series.hpp"
#include "wordlen/types.hpp"

namespace wordlen {

// Geometric word-length model: a word ends after each syllable with
// probability q, so word lengths follow q(1-q)^(n-1) and the mean word
// length is 1/q.
struct GeometricModel {
  double q = 0.0;
};

inline void require_q(double q) {
  if (!(q > 0.0) || q > 1.0)
    throw std::domain_error("q must lie in (0, 1]");
}

inline double geometric_pmf(const GeometricModel& model, int n) {
  require_q(model.q);
  if (n < 1) throw std::domain_error("word length must be >= 1");
  return model.q * std::pow(1.0 - model.q, n - 1);
}

inline double mean_word_length(const GeometricModel& model) {
  require_q(model.q);
  return 1.0 / model.q;
}

inline LengthDistribution geometric_distribution(double q, int n_max) {
  require_q(q);
  LengthDistribution dist;
  dist.probs.assign(n_max + 1, 0.0);
  for (int n = 1; n <= n_max; ++n) dist.probs[n] = q * std::pow(1.0 - q, n - 1);
  return dist;
}

// Moment estimator q = 1/<n>; for the geometric family this coincides
// with maximum likelihood.
inline GeometricModel fit_geometric(const LengthDistribution& p) {
  const double m = p.mean();
  if (!(m >= 1.0))
    throw std::invalid_argument("length distribution has mean < 1");
  return GeometricModel{1.0 / m};
}

// Distribution of the syllable total across k consecutive words when
// word lengths are drawn independently from p: the k-th power of p's
// generating series, truncated at n_max.
inline PowerSeries predict_window_distribution(const LengthDistribution& p,
                                               int k, int n_max) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  PowerSeries base = PowerSeries::from_distribution(p, n_max);
  PowerSeries out = base;
  for (int i = 1; i < k; ++i) out = out.convolved(base);
  return out;
}

// Expected frequency of complete-word runs summing to n under the
// independence assumption: Q = P/(1-P) as series, computed by the
// inversion recurrence Q_n = p_n + sum_{j<n} Q_j p_{n-j}.
inline PowerSeries predict_match_frequency(const LengthDistribution& p,
                                           int n_max) {
  PowerSeries q_series(n_max);
  for (int n = 1; n <= n_max; ++n) {
    double acc = p.at(n);
    for (int j = 1; j < n; ++j) acc += q_series.at(j) * p.at(n - j);
    q_series.coeff(n) = acc;
  }
  return q_series;
}

namespace detail {

// 53-bit uniform in [0, 1).
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse-CDF geometric draw on {1, 2, ...} with success probability q.
// Hand-rolled so the stream does not depend on the standard library's
// distribution implementation.
inline int geometric_draw(std::mt19937_64& rng, double q) {
  if (q >= 1.0) return 1;
  const double u = uniform01(rng);
  return 1 + static_cast<int>(std::log1p(-u) / std::log1p(-q));
}

}  // namespace detail

// Random segmentation: emits word_total i.i.d. geometric(q) word lengths.
// Fixed seed gives a fixed sequence.
inline SyllableSequence simulate_segmentation(double q, std::int64_t word_total,
                                              std::uint64_t seed) {
  require_q(q);
  if (word_total < 1) throw std::domain_error("word_total must be >= 1");
  std::mt19937_64 rng(seed);
  SyllableSequence seq;
  seq.counts.reserve(static_cast<std::size_t>(word_total));
  for (std::int64_t i = 0; i < word_total; ++i)
    seq.counts.push_back(detail::geometric_draw(rng, q));
  return seq;
}

}  // namespace wordlen
