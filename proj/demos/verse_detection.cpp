// Builds a corpus written entirely in ten-syllable lines, then shows the
// detector picking the line length out of the deviation profile.

#include <cstdio>
#include <random>
#include <vector>

#include "wordlen/wordlen.hpp"

using namespace wordlen;

namespace {

// Draws geometric words until a line of exactly `target` syllables appears.
void append_line(std::mt19937_64& rng, double q, int target, std::vector<int>& out) {
  std::vector<int> line;
  for (;;) {
    line.clear();
    int total = 0;
    while (total < target) {
      const int word = detail::geometric_draw(rng, q);
      line.push_back(word);
      total += word;
    }
    if (total == target) break;
  }
  out.insert(out.end(), line.begin(), line.end());
}

}  // namespace

int main() {
  std::mt19937_64 rng(7);
  SyllableSequence seq;
  while (seq.counts.size() < 60000) append_line(rng, 0.60, 10, seq.counts);

  const auto table = count_matches(seq, 30, 30, Boundary::periodic);
  const auto profile = normalize(table, {1, 30});
  const auto p = length_histogram(seq);
  const auto model = fit_geometric(p);
  const auto bigram = bigram_matrix(seq, 30, Boundary::periodic);
  const auto report = deviation_report(profile, p, bigram, model);
  const auto lineation = detect_lineation(report);

  std::printf("verdict: %s", to_string(lineation.verdict));
  if (lineation.core_length) std::printf(", line length %d", *lineation.core_length);
  std::printf("\n\n%6s %10s %10s %10s %s\n", "L", "score", "z(L)", "z(2L)", "qualifies");
  for (const auto& cand : lineation.candidates)
    std::printf("%6d %10.3f %10.2f %10.2f %s\n", cand.length, cand.score,
                cand.z_at_length, cand.z_at_double, cand.qualifies ? "yes" : "");
  return 0;
}
