#pragma once

#include <cctype>
#include <string>
#include <string_view>

namespace wordlen {
namespace detail {

// UTF-8 punctuation that may cling to token edges in printed text.
// Curly quotes, dashes, ellipsis, guillemets and the degree/section signs.
inline constexpr std::string_view kWidePunct[] = {
    "‘", "’", "“", "”", "–", "—",
    "…", "«", "»", "§", "°", "·",
};

inline bool is_ascii_edge_punct(unsigned char c) {
  return c < 0x80 && std::ispunct(c) != 0;
}

// Length of a wide punctuation mark starting at s[pos], or 0.
inline std::size_t wide_punct_len(std::string_view s, std::size_t pos) {
  for (std::string_view p : kWidePunct) {
    if (s.compare(pos, p.size(), p) == 0) return p.size();
  }
  return 0;
}

// Length of a wide punctuation mark ending at s[pos] (exclusive), or 0.
inline std::size_t wide_punct_len_before(std::string_view s, std::size_t end) {
  for (std::string_view p : kWidePunct) {
    if (end >= p.size() && s.compare(end - p.size(), p.size(), p) == 0) return p.size();
  }
  return 0;
}

}  // namespace detail

// Removes punctuation clinging to either edge of a token. Interior
// characters (apostrophes in contractions, digits' commas) are untouched.
inline std::string_view strip_edge_punct(std::string_view s) {
  for (;;) {
    if (s.empty()) return s;
    if (detail::is_ascii_edge_punct(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
      continue;
    }
    if (std::size_t w = detail::wide_punct_len(s, 0)) {
      s.remove_prefix(w);
      continue;
    }
    break;
  }
  for (;;) {
    if (s.empty()) return s;
    if (detail::is_ascii_edge_punct(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
      continue;
    }
    if (std::size_t w = detail::wide_punct_len_before(s, s.size())) {
      s.remove_suffix(w);
      continue;
    }
    break;
  }
  return s;
}

// ASCII lowercase; replaces the curly apostrophe U+2019 with '\''.
// Other non-ASCII bytes pass through unchanged.
inline std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (s.compare(i, 3, "’") == 0) {
      out.push_back('\'');
      i += 3;
    } else {
      out.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(s[i]))));
      ++i;
    }
  }
  return out;
}

// Canonical lexicon key: case-folded with surrounding punctuation removed.
// Idempotent: normalize(normalize(s)) == normalize(s).
inline std::string normalize_wordform(std::string_view s) {
  std::string folded = fold_case(s);
  return std::string(strip_edge_punct(folded));
}

}  // namespace wordlen
