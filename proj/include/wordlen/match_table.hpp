#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wordlen/length_distribution.hpp"
#include "wordlen/types.hpp"

namespace wordlen {

class EmptySequenceError : public std::invalid_argument {
 public:
  EmptySequenceError() : std::invalid_argument("syllable sequence is empty") {}
};

// Window counts L_{n,k}: the number of runs of exactly k consecutive
// complete words totaling n syllables, with marginals L_n summed over k.
struct MatchTable {
  int n_max = 0;
  int k_max = 0;
  std::int64_t word_total = 0;
  Boundary boundary = Boundary::periodic;
  std::vector<std::int64_t> cells;      // (n_max+1) * (k_max+1), row-major by n
  std::vector<std::int64_t> marginals;  // L_n, index 0 unused

  std::int64_t at(int n, int k) const {
    return cells[static_cast<std::size_t>(n) * (k_max + 1) + k];
  }
  std::int64_t& cell(int n, int k) {
    return cells[static_cast<std::size_t>(n) * (k_max + 1) + k];
  }
  std::int64_t marginal(int n) const { return marginals[n]; }
};

// Counts all k-word windows (k <= k_max) whose syllable sum is <= n_max.
// Periodic windows wrap past the end of the data; Dirichlet windows stop
// at it. One sliding sum per k keeps this O(I * k_max).
inline MatchTable count_matches(const SyllableSequence& seq, int n_max,
                                int k_max, Boundary boundary) {
  if (seq.empty()) throw EmptySequenceError();
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (k_max < 1 || k_max > n_max)
    throw std::invalid_argument("k_max must satisfy 1 <= k_max <= n_max");

  const std::vector<int>& v = seq.counts;
  const std::size_t word_count = v.size();

  MatchTable table;
  table.n_max = n_max;
  table.k_max = k_max;
  table.word_total = static_cast<std::int64_t>(word_count);
  table.boundary = boundary;
  table.cells.assign(static_cast<std::size_t>(n_max + 1) * (k_max + 1), 0);
  table.marginals.assign(n_max + 1, 0);

  for (int k = 1; k <= k_max; ++k) {
    const std::size_t width = static_cast<std::size_t>(k);
    if (boundary == Boundary::dirichlet && width > word_count) break;
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < width; ++j) sum += v[j % word_count];
    const std::size_t starts =
        boundary == Boundary::periodic ? word_count : word_count - width + 1;
    for (std::size_t s = 0; s < starts; ++s) {
      if (sum <= n_max) ++table.cell(static_cast<int>(sum), k);
      sum -= v[s];
      sum += v[(s + width) % word_count];
    }
  }

  for (int n = 1; n <= n_max; ++n) {
    std::int64_t total = 0;
    for (int k = 1; k <= std::min(n, k_max); ++k) total += table.at(n, k);
    table.marginals[n] = total;
  }
  return table;
}

// Size-independent view of a MatchTable: P_{n,k} = L_{n,k}/I and
// Q_n = L_n/I, with q the mean of Q_n over q_range.
struct FrequencyProfile {
  int n_max = 0;
  int k_max = 0;
  std::int64_t word_total = 0;
  std::pair<int, int> q_range{1, 1};
  std::vector<std::vector<double>> P;  // P[n][k], row/col 0 unused
  std::vector<double> Q;               // Q[n], index 0 unused
  double q = 0.0;
};

inline FrequencyProfile normalize(const MatchTable& table,
                                  std::pair<int, int> q_range) {
  if (table.word_total < 1)
    throw std::invalid_argument("match table has no words");
  if (q_range.first < 1 || q_range.second > table.n_max ||
      q_range.first > q_range.second)
    throw std::invalid_argument("q_range must lie within [1, n_max]");

  FrequencyProfile profile;
  profile.n_max = table.n_max;
  profile.k_max = table.k_max;
  profile.word_total = table.word_total;
  profile.q_range = q_range;
  const double inv_total = 1.0 / static_cast<double>(table.word_total);

  profile.P.assign(table.n_max + 1, std::vector<double>(table.k_max + 1, 0.0));
  profile.Q.assign(table.n_max + 1, 0.0);
  for (int n = 1; n <= table.n_max; ++n) {
    for (int k = 1; k <= table.k_max; ++k)
      profile.P[n][k] = static_cast<double>(table.at(n, k)) * inv_total;
    profile.Q[n] = static_cast<double>(table.marginal(n)) * inv_total;
  }

  double q_sum = 0.0;
  for (int n = q_range.first; n <= q_range.second; ++n) q_sum += profile.Q[n];
  profile.q = q_sum / (q_range.second - q_range.first + 1);
  return profile;
}

// Empirical single-word length distribution p_n = |{i : N_i = n}| / I.
inline LengthDistribution length_histogram(const SyllableSequence& seq) {
  if (seq.empty()) throw EmptySequenceError();
  const int longest = *std::max_element(seq.counts.begin(), seq.counts.end());
  LengthDistribution dist;
  dist.word_total = seq.word_total();
  dist.probs.assign(longest + 1, 0.0);
  for (int n : seq.counts) dist.probs[n] += 1.0;
  for (double& p : dist.probs) p /= static_cast<double>(seq.word_total());
  return dist;
}

}  // namespace wordlen
