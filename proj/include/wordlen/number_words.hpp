#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wordlen/types.hpp"

namespace wordlen {

class NumberRangeError : public std::out_of_range {
 public:
  explicit NumberRangeError(const std::string& what) : std::out_of_range(what) {}
};

namespace detail {

// Syllable counts of the English number words.
inline constexpr int kOnes[10] = {2, 1, 1, 1, 1, 1, 1, 2, 1, 1};
// ten .. nineteen
inline constexpr int kTeens[10] = {1, 3, 1, 2, 2, 2, 2, 3, 2, 2};
// twenty .. ninety (index by tens digit, 2..9)
inline constexpr int kTens[10] = {0, 0, 2, 2, 2, 2, 2, 3, 2, 2};
inline constexpr int kHundred = 2;
// thousand, million, billion, trillion
inline constexpr int kScales[4] = {2, 2, 2, 2};

inline int two_digit_syllables(int v) {
  if (v < 10) return kOnes[v];
  if (v < 20) return kTeens[v - 10];
  return kTens[v / 10] + (v % 10 ? kOnes[v % 10] : 0);
}

inline int three_digit_syllables(int v) {
  int s = 0;
  if (v >= 100) s += kOnes[v / 100] + kHundred;
  if (int rest = v % 100) s += two_digit_syllables(rest);
  return s;
}

}  // namespace detail

// Syllables in the spoken long-form reading of a cardinal number:
// 1920 -> "one thousand nine hundred twenty" -> 8. Supported below 10^15.
inline int number_syllables(std::uint64_t value) {
  if (value >= 1'000'000'000'000'000ULL)
    throw NumberRangeError("number too large to read aloud: " +
                           std::to_string(value));
  if (value == 0) return detail::kOnes[0];
  int syllables = 0;
  int group[5] = {0, 0, 0, 0, 0};  // units, thousands, millions, ...
  int n_groups = 0;
  while (value > 0) {
    group[n_groups++] = static_cast<int>(value % 1000);
    value /= 1000;
  }
  for (int g = n_groups - 1; g >= 0; --g) {
    if (group[g] == 0) continue;
    syllables += detail::three_digit_syllables(group[g]);
    if (g > 0) syllables += detail::kScales[g - 1];
  }
  return syllables;
}

// Syllables in the paired two-digit reading of a year:
// 1920 -> "nineteen twenty" -> 4, 1906 -> "nineteen oh six",
// 1900 -> "nineteen hundred", 2000 -> "two thousand",
// 2009 -> "two thousand nine".
inline int year_syllables(int year) {
  if (year < 1000 || year > 9999)
    throw NumberRangeError("year out of range: " + std::to_string(year));
  int hi = year / 100;
  int lo = year % 100;
  if (lo == 0) {
    if (hi % 10 == 0) return detail::kOnes[hi / 10] + detail::kScales[0];
    return detail::two_digit_syllables(hi) + detail::kHundred;
  }
  if (hi % 10 == 0 && lo <= 9)  // "two thousand five"
    return detail::kOnes[hi / 10] + detail::kScales[0] + detail::kOnes[lo];
  if (lo <= 9)  // "nineteen oh six"
    return detail::two_digit_syllables(hi) + 1 + detail::kOnes[lo];
  return detail::two_digit_syllables(hi) + detail::two_digit_syllables(lo);
}

// Syllable count for a numeric token, following its classification.
inline int syllabify_number(const Token& token) {
  if (token.kind != TokenKind::number && token.kind != TokenKind::year)
    throw std::invalid_argument("syllabify_number: token is not numeric: '" +
                                token.surface + "'");
  std::uint64_t value = 0;
  try {
    value = std::stoull(token.normalized);
  } catch (const std::exception&) {
    throw NumberRangeError("cannot parse digits: '" + token.normalized + "'");
  }
  if (token.kind == TokenKind::year) return year_syllables(static_cast<int>(value));
  return number_syllables(value);
}

}  // namespace wordlen
