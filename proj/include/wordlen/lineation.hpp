#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wordlen/deviation.hpp"

namespace wordlen {

enum class LineationVerdict { none, isometric, multi_length };

struct LineationOptions {
  int min_length = 4;
  int max_length = 14;
  double threshold = 3.0;  // z needed at L and 2L to qualify
};

struct LineationPeak {
  int n = 0;
  double z = 0.0;
  bool significant = false;
};

struct LineationCandidate {
  int length = 0;
  double score = 0.0;
  double z_at_length = 0.0;
  double z_at_double = 0.0;
  bool qualifies = false;
  std::vector<LineationPeak> peaks;  // multiples of length up to n_max
};

struct LineationReport {
  LineationVerdict verdict = LineationVerdict::none;
  std::optional<int> core_length;
  std::vector<LineationCandidate> candidates;
};

// A lineated text leaves excess frequency at the line length and its
// multiples (line pairs, triples, ...). Each candidate length is scored
// by its positive z-scores across multiples, down-weighted by the
// multiple order; a candidate qualifies only when both the length and
// its double deviate past the threshold, which filters the echoes that
// a length's own multiples produce at 2L, 3L, ...
inline LineationReport detect_lineation(const DeviationReport& report,
                                        const LineationOptions& options = {}) {
  if (options.min_length < 2 || options.max_length < options.min_length)
    throw std::invalid_argument("invalid candidate length range");
  // Nearly all of the candidate range needs z evaluable at 2L; with the
  // default range 4..14 this requires n_max >= 24.
  if (report.n_max < 2 * (options.max_length - 2))
    throw std::invalid_argument(
        "n_max too small to score the candidate range");

  LineationReport result;
  for (int length = options.min_length; length <= options.max_length; ++length) {
    LineationCandidate candidate;
    candidate.length = length;
    for (int multiple = 1; length * multiple <= report.n_max; ++multiple) {
      const int n = length * multiple;
      LineationPeak peak;
      peak.n = n;
      peak.z = report.z(n);
      peak.significant = peak.z > options.threshold;
      candidate.peaks.push_back(peak);
      candidate.score += std::max(0.0, peak.z) / multiple;
      if (multiple == 1) candidate.z_at_length = peak.z;
      if (multiple == 2) candidate.z_at_double = peak.z;
    }
    candidate.qualifies = candidate.z_at_length > options.threshold &&
                          candidate.z_at_double > options.threshold;
    result.candidates.push_back(candidate);
  }

  std::vector<const LineationCandidate*> qualifiers;
  for (const LineationCandidate& candidate : result.candidates)
    if (candidate.qualifies) qualifiers.push_back(&candidate);

  if (qualifiers.empty()) {
    result.verdict = LineationVerdict::none;
    return result;
  }

  // Two qualifying lengths where neither is a multiple of the other
  // indicate a mix of line lengths rather than one isometric form.
  bool mixed = false;
  for (std::size_t a = 0; a < qualifiers.size() && !mixed; ++a)
    for (std::size_t b = a + 1; b < qualifiers.size() && !mixed; ++b) {
      const int la = qualifiers[a]->length;
      const int lb = qualifiers[b]->length;
      if (la % lb != 0 && lb % la != 0) mixed = true;
    }
  if (mixed) {
    result.verdict = LineationVerdict::multi_length;
    return result;
  }

  const LineationCandidate* best = *std::max_element(
      qualifiers.begin(), qualifiers.end(),
      [](const LineationCandidate* a, const LineationCandidate* b) {
        return a->score < b->score;
      });
  result.verdict = LineationVerdict::isometric;
  result.core_length = best->length;
  return result;
}

}  // namespace wordlen
