// Simulates a randomly segmented corpus and prints its frequency column:
// with geometric word lengths, Q_n stays flat at q for every n.

#include <cstdio>

#include "wordlen/wordlen.hpp"

using namespace wordlen;

int main() {
  const double q = 0.72;
  const auto seq = simulate_segmentation(q, 500000, 42);
  const auto table = count_matches(seq, 30, 30, Boundary::periodic);
  const auto profile = normalize(table, {1, 30});
  const auto p = length_histogram(seq);
  const auto model = fit_geometric(p);
  const auto bigram = bigram_matrix(seq, 30, Boundary::periodic);
  const auto report = deviation_report(profile, p, bigram, model);

  std::printf("words %lld, generator q %.3f, fitted q %.5f, measured q %.5f\n",
              static_cast<long long>(seq.word_total()), q, model.q, profile.q);
  std::printf("%4s %10s %11s %8s\n", "n", "Q_n", "delta", "z");
  for (int n = 1; n <= profile.n_max; ++n)
    std::printf("%4d %10.6f %+11.6f %8.2f%s\n", n, profile.Q[n], report.delta_q[n],
                report.z(n), report.flags[n] ? "  outside the 3-sigma band" : "");
  return 0;
}
