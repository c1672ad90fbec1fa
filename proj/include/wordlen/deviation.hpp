#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordlen/length_distribution.hpp"
#include "wordlen/match_table.hpp"
#include "wordlen/random_model.hpp"
#include "wordlen/types.hpp"

namespace wordlen {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Binomial error band for a probability estimated from I words:
// P +- multiplier * sqrt(P(1-P)/I). The default multiplier 3 covers the
// true value with ~99.7% probability.
inline Interval probability_error_band(double p, std::int64_t word_total,
                                       double multiplier = 3.0) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
  if (word_total < 1) throw std::invalid_argument("word_total must be >= 1");
  const double s = std::sqrt(p * (1.0 - p) / static_cast<double>(word_total));
  return {p - multiplier * s, p + multiplier * s};
}

// Standard error of a frequency Q_n. The summands L_{n,k} are independent
// counts, so var(L_n) = L_n and sigma(Q_n) = sqrt(Q_n/I).
inline double frequency_sigma(double frequency, std::int64_t word_total) {
  if (frequency < 0.0) throw std::invalid_argument("frequency must be >= 0");
  if (word_total < 1) throw std::invalid_argument("word_total must be >= 1");
  return std::sqrt(frequency / static_cast<double>(word_total));
}

// Counts of n-syllable words immediately following m-syllable words.
// Dimensioned to cover every observed length so the cell total is exactly
// I (periodic) or I-1 (Dirichlet).
struct BigramMatrix {
  int dim = 0;
  Boundary boundary = Boundary::periodic;
  std::int64_t total = 0;
  std::vector<std::int64_t> cells;       // (dim+1)^2, row m, column n
  std::vector<std::int64_t> row_totals;  // index 0 unused

  std::int64_t at(int m, int n) const {
    return cells[static_cast<std::size_t>(m) * (dim + 1) + n];
  }
  std::int64_t& cell(int m, int n) {
    return cells[static_cast<std::size_t>(m) * (dim + 1) + n];
  }
  std::int64_t row_total(int m) const { return row_totals[m]; }

  // Conditional probability p_{n,m} of an n-syllable word after an
  // m-syllable word. Zero when the row is empty.
  double conditional(int m, int n) const {
    const std::int64_t row = row_totals[m];
    return row > 0 ? static_cast<double>(at(m, n)) / static_cast<double>(row)
                   : 0.0;
  }
};

inline BigramMatrix bigram_matrix(const SyllableSequence& seq, int n_max,
                                  Boundary boundary) {
  if (seq.empty()) throw EmptySequenceError();
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const std::vector<int>& v = seq.counts;
  const std::size_t count = v.size();
  const int longest = *std::max_element(v.begin(), v.end());

  BigramMatrix matrix;
  matrix.dim = std::max(n_max, longest);
  matrix.boundary = boundary;
  matrix.cells.assign(static_cast<std::size_t>(matrix.dim + 1) * (matrix.dim + 1), 0);
  matrix.row_totals.assign(matrix.dim + 1, 0);

  const std::size_t pairs = boundary == Boundary::periodic ? count : count - 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    const int m = v[i];
    const int n = v[(i + 1) % count];
    ++matrix.cell(m, n);
    ++matrix.row_totals[m];
    ++matrix.total;
  }
  return matrix;
}

// Deviations of the observed distributions from the flat / geometric /
// independence structure, with per-n 3-sigma significance flags.
struct DeviationReport {
  int n_max = 0;
  std::int64_t word_total = 0;
  double q = 0.0;
  double q_sigma = 0.0;                // sqrt(q/I)
  std::vector<double> delta_q;         // Q_n - q, index 0 unused
  std::vector<double> sigma_q;         // sqrt(Q_n/I)
  std::vector<bool> flags;             // |delta| > 3 sigma
  std::vector<double> p_resid_geom;    // p_n - geometric pmf
  std::vector<double> p_resid_order;   // p_{n,1} - geometric pmf

  // Signed significance of the deviation at n. Zero-sigma entries map to
  // +-infinity (or 0 when the deviation itself vanishes).
  double z(int n) const {
    const double d = delta_q[n];
    const double s = sigma_q[n];
    if (s > 0.0) return d / s;
    if (d == 0.0) return 0.0;
    return std::copysign(std::numeric_limits<double>::infinity(), d);
  }
};

inline DeviationReport deviation_report(const FrequencyProfile& profile,
                                        const LengthDistribution& p,
                                        const BigramMatrix& bigram,
                                        const GeometricModel& model) {
  const std::int64_t expected_pairs =
      bigram.boundary == Boundary::periodic ? profile.word_total
                                            : profile.word_total - 1;
  if (bigram.total != expected_pairs ||
      (p.word_total != 0 && p.word_total != profile.word_total))
    throw std::invalid_argument(
        "deviation_report: inputs were built from different sequences");

  DeviationReport report;
  report.n_max = profile.n_max;
  report.word_total = profile.word_total;
  report.q = profile.q;
  report.q_sigma = frequency_sigma(profile.q, profile.word_total);
  report.delta_q.assign(profile.n_max + 1, 0.0);
  report.sigma_q.assign(profile.n_max + 1, 0.0);
  report.flags.assign(profile.n_max + 1, false);
  report.p_resid_geom.assign(profile.n_max + 1, 0.0);
  report.p_resid_order.assign(profile.n_max + 1, 0.0);

  for (int n = 1; n <= profile.n_max; ++n) {
    report.delta_q[n] = profile.Q[n] - profile.q;
    report.sigma_q[n] = frequency_sigma(profile.Q[n], profile.word_total);
    report.flags[n] = std::abs(report.delta_q[n]) > 3.0 * report.sigma_q[n];
    const double pmf = geometric_pmf(model, n);
    report.p_resid_geom[n] = p.at(n) - pmf;
    report.p_resid_order[n] =
        (n <= bigram.dim ? bigram.conditional(1, n) : 0.0) - pmf;
  }
  return report;
}

// One labeled q estimate with its 3-sigma confidence interval.
struct QInterval {
  std::string label;
  double q = 0.0;
  std::int64_t word_total = 0;
  double sigma = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

struct QComparison {
  struct PairVerdict {
    std::size_t a = 0;
    std::size_t b = 0;
    bool overlap = false;
  };
  std::vector<QInterval> entries;
  std::vector<PairVerdict> pairs;
};

struct LabeledQ {
  std::string label;
  double q = 0.0;
  std::int64_t word_total = 0;
};

// Pairwise comparison of mean frequencies: non-overlapping 3-sigma
// intervals mark a significant difference in mean word length.
inline QComparison compare_q(const std::vector<LabeledQ>& inputs) {
  if (inputs.size() < 2)
    throw std::invalid_argument("compare_q needs at least two profiles");
  QComparison cmp;
  for (const LabeledQ& in : inputs) {
    QInterval iv;
    iv.label = in.label;
    iv.q = in.q;
    iv.word_total = in.word_total;
    iv.sigma = frequency_sigma(in.q, in.word_total);
    iv.lo = in.q - 3.0 * iv.sigma;
    iv.hi = in.q + 3.0 * iv.sigma;
    cmp.entries.push_back(iv);
  }
  for (std::size_t a = 0; a < cmp.entries.size(); ++a)
    for (std::size_t b = a + 1; b < cmp.entries.size(); ++b) {
      const bool overlap = cmp.entries[a].lo <= cmp.entries[b].hi &&
                           cmp.entries[b].lo <= cmp.entries[a].hi;
      cmp.pairs.push_back({a, b, overlap});
    }
  return cmp;
}

inline QComparison compare_q(
    const std::vector<std::pair<std::string, const FrequencyProfile*>>& profiles) {
  std::vector<LabeledQ> inputs;
  inputs.reserve(profiles.size());
  for (const auto& [label, profile] : profiles)
    inputs.push_back({label, profile->q, profile->word_total});
  return compare_q(inputs);
}

// Per-cell z-score of the conditional distribution p_{n,m} against the
// unconditional p_n under the hypothesis that a word's length does not
// depend on its predecessor's.
struct IndependenceCell {
  int m = 0;
  int n = 0;
  double z = 0.0;
  std::int64_t row_total = 0;
  bool well_populated = false;
};

struct IndependenceResult {
  std::vector<IndependenceCell> cells;
  double chi_square = 0.0;  // aggregate over cells with positive expectation
  std::int64_t chi_cells = 0;
};

inline IndependenceResult ordering_independence_test(
    const BigramMatrix& bigram, const LengthDistribution& p,
    std::int64_t well_populated_min = 30) {
  IndependenceResult result;
  for (int m = 1; m <= bigram.dim; ++m) {
    const std::int64_t row = bigram.row_total(m);
    if (row == 0) continue;
    for (int n = 1; n <= bigram.dim; ++n) {
      const double pn = p.at(n);
      if (pn <= 0.0 || pn >= 1.0) continue;
      IndependenceCell cell;
      cell.m = m;
      cell.n = n;
      cell.row_total = row;
      cell.well_populated = row >= well_populated_min;
      const double se = std::sqrt(pn * (1.0 - pn) / static_cast<double>(row));
      cell.z = (bigram.conditional(m, n) - pn) / se;
      result.cells.push_back(cell);

      const double expected = static_cast<double>(row) * pn;
      const double diff = static_cast<double>(bigram.at(m, n)) - expected;
      result.chi_square += diff * diff / expected;
      ++result.chi_cells;
    }
  }
  return result;
}

}  // namespace wordlen
