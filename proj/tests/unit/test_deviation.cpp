#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "wordlen/deviation.hpp"
#include "wordlen/match_table.hpp"
#include "wordlen/random_model.hpp"

using namespace wordlen;

TEST_CASE("error band at one half", "[deviation]") {
  Interval band = probability_error_band(0.5, 100);
  CHECK(band.lo == Catch::Approx(0.35));
  CHECK(band.hi == Catch::Approx(0.65));
}

TEST_CASE("error band at zero collapses", "[deviation]") {
  Interval band = probability_error_band(0.0, 12345);
  CHECK(band.lo == 0.0);
  CHECK(band.hi == 0.0);
}

TEST_CASE("error band half-width on the corpus numbers", "[deviation]") {
  Interval band = probability_error_band(0.720316, 1977676);
  const double half = (band.hi - band.lo) / 2.0;
  CHECK(half == Catch::Approx(0.000957).margin(2e-6));
}

TEST_CASE("error band validates its inputs", "[deviation]") {
  CHECK_THROWS_AS(probability_error_band(1.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(probability_error_band(-0.1, 10), std::invalid_argument);
  CHECK_THROWS_AS(probability_error_band(0.5, 0), std::invalid_argument);
}

TEST_CASE("frequency sigma fixtures", "[deviation]") {
  CHECK(std::abs(frequency_sigma(0.720316, 1977676) - 0.00060) < 5e-6);
  CHECK(frequency_sigma(0.0, 1000) == 0.0);
  CHECK(frequency_sigma(0.70649, 1977676) == Catch::Approx(0.000598).margin(2e-6));
}

TEST_CASE("three-word bigram example", "[deviation]") {
  SyllableSequence seq{{1, 2, 1}, {}};
  BigramMatrix b = bigram_matrix(seq, 4, Boundary::periodic);
  CHECK(b.at(1, 2) == 1);
  CHECK(b.at(2, 1) == 1);
  CHECK(b.at(1, 1) == 1);  // the wrap pair
  CHECK(b.total == 3);
  CHECK(b.row_total(1) == 2);
  CHECK(b.row_total(2) == 1);
  CHECK(b.conditional(1, 1) == Catch::Approx(0.5));
  CHECK(b.conditional(1, 2) == Catch::Approx(0.5));
  CHECK(b.conditional(2, 1) == Catch::Approx(1.0));

  BigramMatrix d = bigram_matrix(seq, 4, Boundary::dirichlet);
  CHECK(d.total == 2);
  CHECK(d.at(1, 1) == 0);  // no wrap pair
}

TEST_CASE("all-ones bigram", "[deviation]") {
  SyllableSequence seq{{1, 1, 1}, {}};
  BigramMatrix b = bigram_matrix(seq, 4, Boundary::periodic);
  CHECK(b.at(1, 1) == 3);
  CHECK(b.total == 3);
}

TEST_CASE("bigram dimension covers observed lengths past n_max", "[deviation]") {
  SyllableSequence seq{{1, 7, 1}, {}};
  BigramMatrix b = bigram_matrix(seq, 4, Boundary::periodic);
  CHECK(b.dim == 7);
  CHECK(b.at(1, 7) == 1);
  CHECK(b.at(7, 1) == 1);
  CHECK(b.total == 3);
}

TEST_CASE("bigram counts agree with brute force", "[deviation][oracle]") {
  std::mt19937_64 rng(20260815);
  for (int trial = 0; trial < 300; ++trial) {
    auto seq = fixtures::random_sequence(rng);
    for (Boundary bc : {Boundary::periodic, Boundary::dirichlet}) {
      BigramMatrix b = bigram_matrix(seq, 9, bc);
      auto expect = oracle::bigram_counts(seq.counts, b.dim, bc);
      for (int m = 1; m <= b.dim; ++m)
        for (int n = 1; n <= b.dim; ++n) {
          if (b.at(m, n) != expect[m][n]) {
            CAPTURE(trial, m, n, static_cast<int>(bc));
            REQUIRE(b.at(m, n) == expect[m][n]);
          }
        }
    }
  }
}

TEST_CASE("bigram conditional rows sum to one", "[deviation]") {
  std::mt19937_64 rng(4242);
  auto seq = fixtures::random_sequence(rng, 64);
  BigramMatrix b = bigram_matrix(seq, 9, Boundary::periodic);
  std::int64_t grand = 0;
  for (int m = 1; m <= b.dim; ++m) {
    grand += b.row_total(m);
    if (b.row_total(m) == 0) continue;
    double row = 0.0;
    for (int n = 1; n <= b.dim; ++n) row += b.conditional(m, n);
    CHECK(row == Catch::Approx(1.0).epsilon(1e-12));
  }
  CHECK(grand == seq.word_total());
}

static DeviationReport report_for(const SyllableSequence& seq, int n_max = 30) {
  MatchTable table = count_matches(seq, n_max, n_max, Boundary::periodic);
  FrequencyProfile profile = normalize(table, {1, n_max});
  LengthDistribution p = length_histogram(seq);
  BigramMatrix bigram = bigram_matrix(seq, n_max, Boundary::periodic);
  GeometricModel model = fit_geometric(p);
  return deviation_report(profile, p, bigram, model);
}

TEST_CASE("deviation report flags an artificial depression", "[deviation]") {
  auto seq = simulate_segmentation(0.72, 100000, 8);
  MatchTable table = count_matches(seq, 30, 30, Boundary::periodic);
  FrequencyProfile profile = normalize(table, {1, 30});
  LengthDistribution p = length_histogram(seq);
  BigramMatrix bigram = bigram_matrix(seq, 30, Boundary::periodic);
  GeometricModel model = fit_geometric(p);
  // depress Q_2 by ten sigma by hand
  profile.Q[2] -= 10.0 * frequency_sigma(profile.Q[2], profile.word_total);
  DeviationReport report = deviation_report(profile, p, bigram, model);
  CHECK(report.flags[2]);
  CHECK(report.delta_q[2] < 0.0);
}

TEST_CASE("deviation report rejects mismatched inputs", "[deviation]") {
  auto seq = simulate_segmentation(0.72, 1000, 9);
  auto other = simulate_segmentation(0.72, 999, 9);
  MatchTable table = count_matches(seq, 30, 30, Boundary::periodic);
  FrequencyProfile profile = normalize(table, {1, 30});
  LengthDistribution p = length_histogram(seq);
  BigramMatrix bigram = bigram_matrix(other, 30, Boundary::periodic);
  GeometricModel model = fit_geometric(p);
  CHECK_THROWS_AS(deviation_report(profile, p, bigram, model),
                  std::invalid_argument);
}

TEST_CASE("geometric data rarely trips the three sigma flags", "[deviation]") {
  // calibration: at most 2 of 30 flags in at least 95% of seeds
  int bad_seeds = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto seq = simulate_segmentation(0.72, 200000, seed);
    DeviationReport report = report_for(seq);
    int flags = 0;
    for (int n = 1; n <= 30; ++n) flags += report.flags[n] ? 1 : 0;
    if (flags > 2) ++bad_seeds;
  }
  CHECK(bad_seeds <= 1);
}

TEST_CASE("compare_q reproduces the published intervals", "[deviation]") {
  QComparison cmp = compare_q(
      std::vector<LabeledQ>{{"subset", 0.69844, 317827},
                            {"whole", 0.720316, 1977676}});
  CHECK(cmp.entries[0].lo == Catch::Approx(0.6940).margin(5e-5));
  CHECK(cmp.entries[0].hi == Catch::Approx(0.7029).margin(5e-5));
  CHECK(cmp.entries[1].lo == Catch::Approx(0.7185).margin(5e-5));
  CHECK(cmp.entries[1].hi == Catch::Approx(0.7221).margin(5e-5));
  REQUIRE(cmp.pairs.size() == 1);
  CHECK_FALSE(cmp.pairs[0].overlap);
}

TEST_CASE("identical profiles overlap", "[deviation]") {
  QComparison cmp = compare_q(
      std::vector<LabeledQ>{{"a", 0.71, 100000}, {"b", 0.71, 100000}});
  CHECK(cmp.pairs[0].overlap);
}

TEST_CASE("compare_q needs two profiles", "[deviation]") {
  CHECK_THROWS_AS(compare_q(std::vector<LabeledQ>{{"only", 0.7, 1000}}),
                  std::invalid_argument);
}

TEST_CASE("comparison intervals shrink like one over root I", "[deviation]") {
  QComparison cmp = compare_q(std::vector<LabeledQ>{{"half", 0.72, 500000},
                                                    {"full", 0.72, 1000000}});
  const double w_half = cmp.entries[0].hi - cmp.entries[0].lo;
  const double w_full = cmp.entries[1].hi - cmp.entries[1].lo;
  CHECK(w_half / w_full == Catch::Approx(std::sqrt(2.0)).epsilon(0.05));
}

TEST_CASE("independent data passes the independence test", "[deviation]") {
  auto seq = simulate_segmentation(0.72, 1000000, 12);
  LengthDistribution p = length_histogram(seq);
  BigramMatrix bigram = bigram_matrix(seq, 30, Boundary::periodic);
  IndependenceResult result = ordering_independence_test(bigram, p, 1000);
  int populated = 0, calm = 0;
  for (const IndependenceCell& cell : result.cells) {
    if (!cell.well_populated) continue;
    ++populated;
    if (std::abs(cell.z) < 4.0) ++calm;
  }
  REQUIRE(populated > 0);
  CHECK(static_cast<double>(calm) / populated >= 0.99);
}

TEST_CASE("alternating data fails the independence test", "[deviation]") {
  SyllableSequence seq;
  for (int i = 0; i < 5000; ++i) {
    seq.counts.push_back(1);
    seq.counts.push_back(2);
  }
  LengthDistribution p = length_histogram(seq);
  BigramMatrix bigram = bigram_matrix(seq, 4, Boundary::periodic);
  IndependenceResult result = ordering_independence_test(bigram, p);
  double z12 = 0.0;
  for (const IndependenceCell& cell : result.cells)
    if (cell.m == 1 && cell.n == 2) z12 = cell.z;
  // after a one-syllable word the next is always two syllables
  CHECK(z12 > 50.0);
  CHECK(result.chi_square > 1000.0);
}
