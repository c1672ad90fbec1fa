#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wordlen/text.hpp"
#include "wordlen/types.hpp"

namespace wordlen {

// Abbreviation -> expansion words, applied during tokenization. Format is
// UTF-8 TSV: `abbreviation<TAB>expansion words`, '#' comments. Keys are
// normalized like lexicon wordforms, so "Mr." and "mr" share an entry.
class AbbreviationTable {
 public:
  AbbreviationTable() = default;

  static AbbreviationTable parse(std::istream& in) {
    AbbreviationTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos)
        throw std::runtime_error("abbreviations: expected key<TAB>expansion (line " +
                                 std::to_string(line_no) + ")");
      std::string key = normalize_wordform(line.substr(0, tab));
      std::istringstream words(line.substr(tab + 1));
      std::vector<std::string> expansion;
      std::string w;
      while (words >> w) expansion.push_back(normalize_wordform(w));
      if (key.empty() || expansion.empty())
        throw std::runtime_error("abbreviations: empty key or expansion (line " +
                                 std::to_string(line_no) + ")");
      table.entries_[std::move(key)] = std::move(expansion);
    }
    return table;
  }

  static AbbreviationTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open abbreviation file: " + path);
    return parse(in);
  }

  const std::vector<std::string>* find(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// "1,920" or "12,345,678": digit groups joined by thousands separators.
inline bool grouped_digits(std::string_view s) {
  std::size_t first = s.find(',');
  if (first == std::string_view::npos || first == 0 || first > 3) return false;
  if (!all_digits(s.substr(0, first))) return false;
  for (std::size_t i = first; i < s.size(); i += 4) {
    if (s[i] != ',' || i + 3 >= s.size() || !all_digits(s.substr(i + 1, 3)))
      return false;
    if (i + 4 != s.size() && s[i + 4] != ',') return false;
  }
  return true;
}

inline std::string strip_commas(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (c != ',') out.push_back(c);
  return out;
}

inline bool is_dash_split_point(std::string_view s, std::size_t pos,
                                std::size_t* len) {
  if (s[pos] == '-') {
    *len = 1;
    return true;
  }
  if (s.compare(pos, 3, "—") == 0 || s.compare(pos, 3, "–") == 0) {
    *len = 3;
    return true;
  }
  return false;
}

}  // namespace detail

// Splits text into word/number/year tokens. Whitespace separates chunks;
// hyphenated forms split into their parts; surrounding punctuation is
// stripped; internal apostrophes survive. A bare 4-digit integer in
// 1000..2099 is a year, digit strings with thousands separators or any
// other shape are numbers.
inline std::vector<Token> tokenize(std::string_view text,
                                   const AbbreviationTable& abbreviations) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) continue;
    std::string_view chunk = text.substr(start, i - start);

    // split hyphenated/dashed forms into their parts
    std::size_t part_start = 0;
    for (std::size_t j = 0; j <= chunk.size();) {
      std::size_t dash_len = 0;
      bool at_end = j == chunk.size();
      if (!at_end && !detail::is_dash_split_point(chunk, j, &dash_len)) {
        ++j;
        continue;
      }
      std::string_view part = chunk.substr(part_start, j - part_start);
      part_start = j + (at_end ? 0 : dash_len);
      j = part_start + (at_end ? 1 : 0);

      std::string_view core = strip_edge_punct(part);
      if (core.empty()) continue;

      if (detail::all_digits(core) || detail::grouped_digits(core)) {
        Token tok;
        tok.surface = std::string(part);
        bool grouped = core.find(',') != std::string_view::npos;
        tok.normalized = detail::strip_commas(core);
        long value = -1;
        if (tok.normalized.size() <= 9) value = std::stol(tok.normalized);
        tok.kind = (!grouped && core.size() == 4 && value >= 1000 && value <= 2099)
                       ? TokenKind::year
                       : TokenKind::number;
        tokens.push_back(std::move(tok));
        continue;
      }

      std::string normalized = normalize_wordform(core);
      if (normalized.empty()) continue;
      if (const auto* expansion = abbreviations.find(normalized)) {
        for (const std::string& word : *expansion)
          tokens.push_back({word, word, TokenKind::abbreviation});
        continue;
      }
      tokens.push_back({std::string(part), std::move(normalized), TokenKind::word});
    }
  }
  return tokens;
}

inline std::vector<Token> tokenize(std::string_view text) {
  static const AbbreviationTable empty;
  return tokenize(text, empty);
}

// Joins token surfaces with single spaces. tokenize(detokenize(tokens))
// preserves the surface sequence.
inline std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

}  // namespace wordlen
