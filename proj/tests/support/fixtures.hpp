#pragma once

// Shared randomized fixtures. Everything is seeded so test runs are
// reproducible.

#include <cstdint>
#include <random>
#include <vector>

#include "wordlen/length_distribution.hpp"
#include "wordlen/random_model.hpp"
#include "wordlen/types.hpp"

namespace fixtures {

inline wordlen::SyllableSequence random_sequence(std::mt19937_64& rng,
                                                 int max_words = 64,
                                                 int max_length = 9) {
  std::uniform_int_distribution<int> words(1, max_words);
  std::uniform_int_distribution<int> length(1, max_length);
  wordlen::SyllableSequence seq;
  const int count = words(rng);
  seq.counts.reserve(count);
  for (int i = 0; i < count; ++i) seq.counts.push_back(length(rng));
  return seq;
}

inline wordlen::LengthDistribution random_distribution(std::mt19937_64& rng,
                                                       int n_max) {
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  wordlen::LengthDistribution p;
  p.probs.assign(n_max + 1, 0.0);
  double total = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    p.probs[n] = weight(rng);
    total += p.probs[n];
  }
  for (int n = 1; n <= n_max; ++n) p.probs[n] /= total;
  return p;
}

// One verse line: geometric word lengths conditioned on summing exactly
// to the target, via rejection.
inline void append_verse_line(std::mt19937_64& rng, double q, int target,
                              std::vector<int>& out) {
  std::vector<int> line;
  for (;;) {
    line.clear();
    int sum = 0;
    while (sum < target) {
      const int w = wordlen::detail::geometric_draw(rng, q);
      line.push_back(w);
      sum += w;
    }
    if (sum == target) break;
  }
  out.insert(out.end(), line.begin(), line.end());
}

// Synthetic blank-verse corpus: lines of 10/11/12 syllables drawn at
// 77.5/19.4/2.3 (renormalized), geometric word lengths inside each line,
// truncated to exactly word_total words. Conditioning a line on its exact
// total makes every interior syllable boundary an independent word break,
// so the only excess the detector can see is the forced breaks at line
// ends, worth (1-q)^2 per aligned pair. The default q is chosen low
// enough for that excess to clear 3 sigma at n = 10 and n = 20.
inline wordlen::SyllableSequence verse_fixture(std::uint64_t seed,
                                               std::int64_t word_total = 57570,
                                               double q = 0.60) {
  std::mt19937_64 rng(seed);
  std::vector<int> counts;
  counts.reserve(static_cast<std::size_t>(word_total) + 16);
  const double p10 = 77.5 / 99.2;
  const double p11 = 19.4 / 99.2;
  while (static_cast<std::int64_t>(counts.size()) < word_total) {
    const double u = wordlen::detail::uniform01(rng);
    const int target = u < p10 ? 10 : (u < p10 + p11 ? 11 : 12);
    append_verse_line(rng, q, target, counts);
  }
  counts.resize(static_cast<std::size_t>(word_total));
  wordlen::SyllableSequence seq;
  seq.counts = std::move(counts);
  return seq;
}

}  // namespace fixtures
