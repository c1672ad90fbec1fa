#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordlen/lexicon.hpp"
#include "wordlen/number_words.hpp"
#include "wordlen/types.hpp"

namespace wordlen {

enum class UnknownPolicy { error, log_skip, interactive };

class UnknownWordError : public std::runtime_error {
 public:
  UnknownWordError(std::size_t position, const std::string& surface)
      : std::runtime_error("unknown word '" + surface + "' at token " +
                           std::to_string(position)),
        position_(position),
        surface_(surface) {}
  std::size_t position() const { return position_; }
  const std::string& surface() const { return surface_; }

 private:
  std::size_t position_;
  std::string surface_;
};

// Supplies a syllable count for a token the lexicon cannot resolve.
// Returning nullopt leaves the token unresolved (it is then logged).
using SyllableResolver = std::function<std::optional<int>(const Token&)>;

struct AnnotateOptions {
  UnknownPolicy policy = UnknownPolicy::log_skip;
  SyllableResolver resolver;         // consulted under interactive
  Lexicon* merged_lexicon = nullptr; // interactive: receives lexicon + answers
};

// Maps tokens to their syllable counts: words through the lexicon,
// numbers and years through their spoken readings. Unknown handling
// follows options.policy; resolver answers are remembered for the rest
// of the run and exported via merged_lexicon when requested.
inline SyllableSequence annotate(const std::vector<Token>& tokens,
                                 const Lexicon& lexicon,
                                 const AnnotateOptions& options = {}) {
  SyllableSequence seq;
  seq.counts.reserve(tokens.size());
  Lexicon working;
  const bool interactive = options.policy == UnknownPolicy::interactive;
  if (interactive) working = lexicon;
  const Lexicon& lookup_lexicon = interactive ? working : lexicon;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& token = tokens[i];
    std::optional<int> count;
    if (token.kind == TokenKind::number || token.kind == TokenKind::year) {
      try {
        count = syllabify_number(token);
      } catch (const NumberRangeError&) {
        if (options.policy == UnknownPolicy::error) throw;
      }
    } else {
      count = lookup_lexicon.lookup(token.normalized);
    }

    if (!count && interactive && options.resolver) {
      if (std::optional<int> answer = options.resolver(token)) {
        if (*answer < 1)
          throw std::invalid_argument("resolver returned count < 1 for '" +
                                      token.surface + "'");
        working.add(token.normalized, *answer);
        count = answer;
      }
    }

    if (!count) {
      if (options.policy == UnknownPolicy::error)
        throw UnknownWordError(i, token.surface);
      seq.unknown_log.push_back({i, token.surface});
      continue;
    }
    seq.counts.push_back(*count);
  }

  if (interactive && options.merged_lexicon)
    *options.merged_lexicon = std::move(working);
  return seq;
}

}  // namespace wordlen
