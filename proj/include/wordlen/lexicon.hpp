#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wordlen/text.hpp"

namespace wordlen {

// Malformed lexicon line; line numbers are 1-based.
class LexiconParseError : public std::runtime_error {
 public:
  LexiconParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LexiconConflict {
  std::string wordform;
  int existing = 0;
  int incoming = 0;
};

// Same wordform mapped to two different counts.
class LexiconConflictError : public std::runtime_error {
 public:
  explicit LexiconConflictError(std::vector<LexiconConflict> conflicts)
      : std::runtime_error(describe(conflicts)), conflicts_(std::move(conflicts)) {}
  const std::vector<LexiconConflict>& conflicts() const { return conflicts_; }

 private:
  static std::string describe(const std::vector<LexiconConflict>& cs) {
    std::string msg = "conflicting syllable counts:";
    for (const auto& c : cs) {
      msg += " '" + c.wordform + "' " + std::to_string(c.existing) + " vs " +
             std::to_string(c.incoming) + ";";
    }
    return msg;
  }
  std::vector<LexiconConflict> conflicts_;
};

// Wordform -> syllable count map, immutable once loaded. File format is
// UTF-8 TSV: `wordform<TAB>count`, one entry per line, '#' comments.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon parse(std::istream& in) {
    Lexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      auto [form, count] = parse_line(line, line_no);
      lex.insert_checked(std::move(form), count);
    }
    return lex;
  }

  static Lexicon load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    return parse(in);
  }

  std::optional<int> lookup(std::string_view normalized) const {
    auto it = entries_.find(std::string(normalized));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  // Normalizes the wordform; throws LexiconConflictError on a count clash.
  void add(std::string_view wordform, int syllables) {
    if (syllables < 1)
      throw std::invalid_argument("syllable count must be >= 1 for '" +
                                  std::string(wordform) + "'");
    insert_checked(normalize_wordform(wordform), syllables);
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::unordered_map<std::string, int>& entries() const { return entries_; }

  // Union of two lexicons. Conflicts are collected into `conflicts` when
  // given, otherwise thrown.
  static Lexicon merged(const Lexicon& a, const Lexicon& b,
                        std::vector<LexiconConflict>* conflicts = nullptr) {
    Lexicon out = a;
    std::vector<LexiconConflict> found;
    for (const auto& [form, count] : b.entries_) {
      auto it = out.entries_.find(form);
      if (it == out.entries_.end()) {
        out.entries_.emplace(form, count);
      } else if (it->second != count) {
        found.push_back({form, it->second, count});
      }
    }
    if (!found.empty()) {
      if (!conflicts) throw LexiconConflictError(std::move(found));
      *conflicts = std::move(found);
    }
    return out;
  }

  // Count of entries per syllable length -- the lexicon's own length
  // distribution, as opposed to the running text's.
  std::map<int, std::int64_t> length_histogram() const {
    std::map<int, std::int64_t> hist;
    for (const auto& [form, count] : entries_) ++hist[count];
    return hist;
  }

 private:
  static std::pair<std::string, int> parse_line(const std::string& line,
                                                std::size_t line_no) {
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw LexiconParseError("expected wordform<TAB>count", line_no);
    if (line.find('\t', tab + 1) != std::string::npos)
      throw LexiconParseError("too many columns", line_no);
    std::string form = normalize_wordform(line.substr(0, tab));
    if (form.empty()) throw LexiconParseError("empty wordform", line_no);
    std::string count_str = line.substr(tab + 1);
    int count = 0;
    try {
      std::size_t used = 0;
      count = std::stoi(count_str, &used);
      if (used != count_str.size()) throw std::invalid_argument(count_str);
    } catch (const std::exception&) {
      throw LexiconParseError("syllable count is not an integer: '" +
                                  count_str + "'",
                              line_no);
    }
    if (count < 1)
      throw LexiconParseError("syllable count must be >= 1", line_no);
    return {std::move(form), count};
  }

  void insert_checked(std::string form, int count) {
    auto [it, inserted] = entries_.emplace(std::move(form), count);
    if (!inserted && it->second != count)
      throw LexiconConflictError({{it->first, it->second, count}});
  }

  std::unordered_map<std::string, int> entries_;
};

// Non-throwing lint pass over a lexicon stream; used by the CLI validator.
struct LexiconDiagnostic {
  std::size_t line = 0;
  std::string message;
};

inline std::vector<LexiconDiagnostic> lint_lexicon(std::istream& in) {
  std::vector<LexiconDiagnostic> diags;
  std::unordered_map<std::string, std::pair<int, std::size_t>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    Lexicon probe;
    try {
      std::istringstream single(line + "\n");
      probe = Lexicon::parse(single);
    } catch (const LexiconParseError& e) {
      diags.push_back({line_no, e.what()});
      continue;
    }
    for (const auto& [form, count] : probe.entries()) {
      auto it = seen.find(form);
      if (it == seen.end()) {
        seen.emplace(form, std::make_pair(count, line_no));
      } else if (it->second.first != count) {
        diags.push_back({line_no, "'" + form + "' already has count " +
                                      std::to_string(it->second.first) +
                                      " at line " +
                                      std::to_string(it->second.second) +
                                      ", here " + std::to_string(count)});
      }
    }
  }
  return diags;
}

}  // namespace wordlen
