#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wordlen {

// Single-word length probabilities p_n, n >= 1. probs[0] is unused and
// kept at zero: there are no zero-syllable words.
struct LengthDistribution {
  std::vector<double> probs{0.0};
  std::int64_t word_total = 0;  // 0 for model-derived distributions

  int n_max() const { return static_cast<int>(probs.size()) - 1; }

  double at(int n) const {
    return (n >= 1 && n < static_cast<int>(probs.size())) ? probs[n] : 0.0;
  }

  double sum() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
  }

  double mean() const {
    double m = 0.0;
    for (int n = 1; n <= n_max(); ++n) m += n * probs[n];
    return m;
  }

  void require_valid(double eps = 1e-9) const {
    for (double p : probs)
      if (!(p >= 0.0))
        throw std::invalid_argument("length distribution has a negative entry");
    if (std::abs(sum() - 1.0) > eps)
      throw std::invalid_argument("length distribution does not sum to 1");
  }
};

}  // namespace wordlen
