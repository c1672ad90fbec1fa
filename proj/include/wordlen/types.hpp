#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wordlen {

enum class TokenKind { word, number, year, abbreviation };

struct Token {
  std::string surface;     // exact slice of input this token came from
  std::string normalized;  // case-folded lookup key; bare digits for numbers/years
  TokenKind kind = TokenKind::word;
};

struct UnknownWord {
  std::size_t position = 0;  // index into the token list
  std::string surface;
};

// Ordered per-word syllable counts N_i, every count >= 1.
struct SyllableSequence {
  std::vector<int> counts;
  std::vector<UnknownWord> unknown_log;

  std::int64_t word_total() const { return static_cast<std::int64_t>(counts.size()); }
  bool empty() const { return counts.empty(); }
};

// Whether windows wrap from the end of the sequence back to its start.
enum class Boundary { periodic, dirichlet };

}  // namespace wordlen
