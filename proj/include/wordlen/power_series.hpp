#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wordlen/length_distribution.hpp"

namespace wordlen {

// Truncated power series over x with zero constant term. Coefficient n
// lives at index n; index 0 is identically zero.
class PowerSeries {
 public:
  explicit PowerSeries(int n_max) : coeff_(static_cast<std::size_t>(n_max) + 1, 0.0) {
    if (n_max < 1) throw std::invalid_argument("series needs n_max >= 1");
  }

  static PowerSeries from_distribution(const LengthDistribution& p, int n_max) {
    PowerSeries s(n_max);
    for (int n = 1; n <= n_max; ++n) s.coeff_[n] = p.at(n);
    return s;
  }

  int n_max() const { return static_cast<int>(coeff_.size()) - 1; }

  double at(int n) const {
    return (n >= 1 && n < static_cast<int>(coeff_.size())) ? coeff_[n] : 0.0;
  }

  double& coeff(int n) { return coeff_.at(n); }

  const std::vector<double>& coefficients() const { return coeff_; }

  // Series value at x = 1, i.e. the retained mass.
  double value_at_one() const {
    double s = 0.0;
    for (double c : coeff_) s += c;
    return s;
  }

  // Truncated product. Both factors have zero constant term, so the
  // product's coefficient n only mixes indices 1..n-1.
  PowerSeries convolved(const PowerSeries& other) const {
    const int limit = n_max();
    PowerSeries out(limit);
    for (int a = 1; a < limit; ++a) {
      const double ca = coeff_[a];
      if (ca == 0.0) continue;
      const int b_hi = std::min(limit - a, other.n_max());
      for (int b = 1; b <= b_hi; ++b) out.coeff_[a + b] += ca * other.at(b);
    }
    return out;
  }

 private:
  std::vector<double> coeff_;
};

struct SeriesMoments {
  double mean = 0.0;
  double stddev = 0.0;
};

// Mean and standard deviation of the index under the series' weights,
// read off the derivatives at x = 1. Requires a normalized series.
inline SeriesMoments moments(const PowerSeries& series, double eps = 1e-9) {
  const double mass = series.value_at_one();
  if (std::abs(mass - 1.0) > eps)
    throw std::invalid_argument("series is not normalized; mass = " +
                                std::to_string(mass));
  double first = 0.0;   // P'(1)  = sum n c_n
  double second = 0.0;  // P''(1) = sum n(n-1) c_n
  for (int n = 1; n <= series.n_max(); ++n) {
    const double c = series.at(n);
    first += n * c;
    second += static_cast<double>(n) * (n - 1) * c;
  }
  const double variance = second + first - first * first;
  return {first, std::sqrt(std::max(variance, 0.0))};
}

}  // namespace wordlen
