#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "wordlen/wordlen.hpp"

namespace fs = std::filesystem;
using namespace wordlen;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Boundary parse_boundary(const std::string& s) {
  return s == "dirichlet" ? Boundary::dirichlet : Boundary::periodic;
}

UnknownPolicy parse_policy(const std::string& s) {
  if (s == "error") return UnknownPolicy::error;
  if (s == "interactive") return UnknownPolicy::interactive;
  return UnknownPolicy::log_skip;
}

std::pair<int, int> parse_q_range(const std::string& s, int n_max) {
  const std::size_t dots = s.find("..");
  int lo = 0, hi = 0;
  try {
    if (dots == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    lo = std::stoi(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(s);
    const std::string tail = s.substr(dots + 2);
    hi = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw ConfigError("--q-range expects A..B with integers A <= B, got '" +
                      s + "'");
  }
  if (lo < 1 || hi > n_max || lo > hi)
    throw ConfigError("--q-range " + s + " must lie within 1.." +
                      std::to_string(n_max));
  return {lo, hi};
}

std::string sanitize_label(const std::string& label) {
  if (label.empty()) throw ConfigError("labels must not be empty");
  for (char c : label) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
    if (!ok)
      throw ConfigError("label '" + label +
                        "' may only use letters, digits, '_', '-', '.'");
  }
  return label;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string lexicon_tsv(const Lexicon& lexicon) {
  std::vector<std::pair<std::string, int>> rows(lexicon.entries().begin(),
                                                lexicon.entries().end());
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [form, count] : rows) {
    out += form;
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

// Every knob shared by the corpus-consuming subcommands.
struct RunConfig {
  std::vector<std::string> inputs;
  std::vector<std::string> labels;
  std::string lexicon_path;
  std::string abbrev_path;
  std::string boundary_name = "periodic";
  std::string unknown_name = "log-skip";
  std::string q_range_text = "1..30";
  std::string out_dir;
  int n_max = 30;
  int k_max = 30;
  bool counts_input = false;

  Boundary boundary() const { return parse_boundary(boundary_name); }
  UnknownPolicy policy() const { return parse_policy(unknown_name); }
  std::pair<int, int> q_range() const {
    return parse_q_range(q_range_text, n_max);
  }

  void validate_shape() const {
    if (n_max < 1) throw ConfigError("--n-max must be >= 1");
    if (k_max < 1 || k_max > n_max)
      throw ConfigError("--k-max must satisfy 1 <= k_max <= n_max");
    q_range();
    if (!labels.empty() && labels.size() != inputs.size())
      throw ConfigError("--label must be given once per input");
    if (!counts_input && lexicon_path.empty())
      throw ConfigError("text inputs need --lexicon");
  }

  std::string label_for(std::size_t i) const {
    if (i < labels.size()) return sanitize_label(labels[i]);
    return sanitize_label(fs::path(inputs[i]).stem().string());
  }
};

void add_analysis_options(CLI::App* cmd, RunConfig& config, bool with_inputs) {
  if (with_inputs) {
    cmd->add_option("inputs", config.inputs, "corpus files to analyze")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--label", config.labels,
                    "output label per input (repeatable)");
    cmd->add_option("--lexicon", config.lexicon_path,
                    "TSV lexicon of wordform<TAB>syllables")
        ->check(CLI::ExistingFile);
    cmd->add_option("--abbrev", config.abbrev_path,
                    "TSV abbreviation expansions")
        ->check(CLI::ExistingFile);
    cmd->add_flag("--counts", config.counts_input,
                  "inputs are syllable-count files, one integer per line");
    cmd->add_option("--unknown", config.unknown_name,
                    "unknown-word policy (default log-skip)")
        ->check(CLI::IsMember({"error", "log-skip", "interactive"}));
  }
  cmd->add_option("--boundary", config.boundary_name,
                  "window boundary mode (default periodic)")
      ->check(CLI::IsMember({"periodic", "dirichlet"}));
  cmd->add_option("--n-max", config.n_max, "largest syllable total tracked");
  cmd->add_option("--k-max", config.k_max, "largest window word count");
  cmd->add_option("--q-range", config.q_range_text,
                  "n range averaged into q, as A..B");
  cmd->add_option("--out", config.out_dir, "output directory")->required();
}

struct Analysis {
  SyllableSequence seq;
  MatchTable table;
  FrequencyProfile profile;
  LengthDistribution p;
  BigramMatrix bigram;
  GeometricModel model;
  DeviationReport report;
  std::vector<double> q_pred;
  Lexicon merged;  // interactive answers folded in
  bool have_merged = false;
};

SyllableSequence ingest(const RunConfig& config, const std::string& path,
                        const Lexicon& lexicon,
                        const AbbreviationTable& abbreviations,
                        Lexicon* merged, bool* have_merged) {
  if (config.counts_input) return load_sequence(path);
  const std::string text = read_file(path);
  const std::vector<Token> tokens = tokenize(text, abbreviations);
  AnnotateOptions options;
  options.policy = config.policy();
  if (options.policy == UnknownPolicy::interactive) {
    options.resolver = [](const Token& token) -> std::optional<int> {
      std::cerr << "syllables for '" << token.surface << "'? " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) return std::nullopt;
      try {
        const int v = std::stoi(line);
        return v >= 1 ? std::optional<int>(v) : std::nullopt;
      } catch (const std::exception&) {
        return std::nullopt;
      }
    };
    options.merged_lexicon = merged;
    *have_merged = true;
  }
  return annotate(tokens, lexicon, options);
}

Analysis analyze_sequence(SyllableSequence seq, const RunConfig& config) {
  if (seq.empty())
    throw std::runtime_error("input produced no countable words");
  Analysis a;
  a.seq = std::move(seq);
  a.table = count_matches(a.seq, config.n_max, config.k_max, config.boundary());
  a.profile = normalize(a.table, config.q_range());
  a.p = length_histogram(a.seq);
  a.bigram = bigram_matrix(a.seq, config.n_max, config.boundary());
  a.model = fit_geometric(a.p);
  a.report = deviation_report(a.profile, a.p, a.bigram, a.model);
  a.q_pred = predict_match_frequency(
                 geometric_distribution(a.model.q, config.n_max), config.n_max)
                 .coefficients();
  return a;
}

void write_analysis(const fs::path& dir, const Analysis& a) {
  fs::create_directories(dir);
  write_text_file(dir / "match_table.csv", match_table_csv(a.table));
  write_json_file(dir / "match_table.json", match_table_json(a.table));
  write_json_file(dir / "profile.json",
                  profile_json(a.profile, a.p, a.model, a.q_pred));
  write_text_file(dir / "deviation.csv", deviation_csv(a.report));
  write_json_file(dir / "deviation.json", deviation_json(a.report));
  write_text_file(dir / "bigram.csv", bigram_csv(a.bigram, a.p));
  write_json_file(dir / "unknowns.json", unknowns_json(a.seq.unknown_log));
  if (a.have_merged)
    write_text_file(dir / "lexicon_merged.tsv", lexicon_tsv(a.merged));
}

int cmd_analyze(const RunConfig& config) {
  config.validate_shape();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < config.inputs.size(); ++i)
    labels.push_back(config.label_for(i));
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ConfigError("labels must be unique");
  }

  Lexicon lexicon;
  if (!config.lexicon_path.empty()) lexicon = Lexicon::load(config.lexicon_path);
  AbbreviationTable abbreviations;
  if (!config.abbrev_path.empty())
    abbreviations = AbbreviationTable::load(config.abbrev_path);

  std::vector<Analysis> analyses;
  for (std::size_t i = 0; i < config.inputs.size(); ++i) {
    Lexicon merged;
    bool have_merged = false;
    SyllableSequence seq = ingest(config, config.inputs[i], lexicon,
                                  abbreviations, &merged, &have_merged);
    Analysis a = analyze_sequence(std::move(seq), config);
    a.merged = std::move(merged);
    a.have_merged = have_merged;
    analyses.push_back(std::move(a));
  }

  const fs::path out(config.out_dir);
  const bool multi = analyses.size() > 1;
  for (std::size_t i = 0; i < analyses.size(); ++i) {
    const fs::path dir = multi ? out / labels[i] : out;
    write_analysis(dir, analyses[i]);
    std::cout << labels[i] << ": words=" << analyses[i].profile.word_total
              << " q=" << format_real(analyses[i].profile.q) << '\n';
  }

  if (multi) {
    std::vector<LabeledQ> inputs;
    for (std::size_t i = 0; i < analyses.size(); ++i)
      inputs.push_back(
          {labels[i], analyses[i].profile.q, analyses[i].profile.word_total});
    std::sort(inputs.begin(), inputs.end(),
              [](const LabeledQ& a, const LabeledQ& b) { return a.label < b.label; });
    QComparison cmp = compare_q(inputs);
    write_json_file(out / "q_comparison.json", q_comparison_json(cmp));
    write_text_file(out / "q_comparison.csv", q_comparison_csv(cmp));
  }
  return 0;
}

int cmd_simulate(const RunConfig& base, double q, std::int64_t words,
                 std::uint64_t seed) {
  RunConfig config = base;
  config.counts_input = true;  // no lexicon involved
  config.validate_shape();
  require_q(q);
  if (words < 1) throw ConfigError("--words must be >= 1");

  Analysis a = analyze_sequence(simulate_segmentation(q, words, seed), config);
  const fs::path out(config.out_dir);
  fs::create_directories(out);
  write_sequence(out / "sequence.txt", a.seq);
  write_analysis(out, a);
  std::cout << "simulated: words=" << words << " q=" << format_real(q)
            << " seed=" << seed << " fitted_q=" << format_real(a.model.q)
            << '\n';
  return 0;
}

int cmd_lineation(const RunConfig& config, int min_length, int max_length) {
  config.validate_shape();
  LineationOptions options;
  options.min_length = min_length;
  options.max_length = max_length;
  if (min_length < 2 || max_length < min_length)
    throw ConfigError("--min-length/--max-length form an invalid range");
  if (config.n_max < 2 * (options.max_length - 2))
    throw ConfigError("--n-max " + std::to_string(config.n_max) +
                      " is too small to score line lengths up to " +
                      std::to_string(options.max_length) +
                      " (need at least " +
                      std::to_string(2 * (options.max_length - 2)) + ")");
  if (config.inputs.size() != 1)
    throw ConfigError("lineation takes exactly one input");

  Lexicon lexicon;
  if (!config.lexicon_path.empty()) lexicon = Lexicon::load(config.lexicon_path);
  AbbreviationTable abbreviations;
  if (!config.abbrev_path.empty())
    abbreviations = AbbreviationTable::load(config.abbrev_path);

  Lexicon merged;
  bool have_merged = false;
  Analysis a = analyze_sequence(
      ingest(config, config.inputs[0], lexicon, abbreviations, &merged,
             &have_merged),
      config);
  LineationReport report = detect_lineation(a.report, options);

  const fs::path out(config.out_dir);
  fs::create_directories(out);
  write_json_file(out / "lineation.json", lineation_json(report));
  write_text_file(out / "lineation.csv", lineation_csv(report));
  std::cout << "verdict=" << to_string(report.verdict);
  if (report.core_length) std::cout << " core_length=" << *report.core_length;
  std::cout << '\n';
  return 0;
}

int cmd_lexicon_validate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  const auto diagnostics = lint_lexicon(in);
  for (const auto& d : diagnostics)
    std::cerr << path << ':' << d.line << ": " << d.message << '\n';
  if (diagnostics.empty()) {
    std::cout << "ok\n";
    return 0;
  }
  std::cerr << diagnostics.size() << " problem(s)\n";
  return 1;
}

int cmd_lexicon_merge(const std::string& a_path, const std::string& b_path,
                      const std::string& out_path) {
  Lexicon a = Lexicon::load(a_path);
  Lexicon b = Lexicon::load(b_path);
  std::vector<LexiconConflict> conflicts;
  Lexicon merged = Lexicon::merged(a, b, &conflicts);
  if (!conflicts.empty()) {
    for (const auto& c : conflicts)
      std::cerr << "conflict: " << c.wordform << " has " << c.existing
                << " vs " << c.incoming << " syllables\n";
    std::cerr << conflicts.size() << " conflict(s); nothing written\n";
    return 1;
  }
  write_text_file(out_path, lexicon_tsv(merged));
  std::cout << "entries=" << merged.size() << '\n';
  return 0;
}

int cmd_lexicon_stats(const std::string& path) {
  Lexicon lexicon = Lexicon::load(path);
  std::cout << "entries\t" << lexicon.size() << '\n';
  for (const auto& [length, count] : lexicon.length_histogram())
    std::cout << length << '\t' << count << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syllable-count statistics for English text"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI file");

  RunConfig analyze_config;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "full match-statistics analysis of one or more corpora");
  add_analysis_options(analyze, analyze_config, true);

  RunConfig simulate_config;
  double sim_q = 0.72;
  std::int64_t sim_words = 0;
  std::uint64_t sim_seed = 1;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "generate a random-segmentation corpus and analyze it");
  add_analysis_options(simulate, simulate_config, false);
  simulate->add_option("--q", sim_q, "per-syllable termination probability")
      ->required();
  simulate->add_option("--words", sim_words, "number of words to draw")
      ->required();
  simulate->add_option("--seed", sim_seed, "random seed (default 1)");

  RunConfig lineation_config;
  int min_length = 4;
  int max_length = 14;
  CLI::App* lineation = app.add_subcommand(
      "lineation", "test a corpus for isometric lineation");
  add_analysis_options(lineation, lineation_config, true);
  lineation->add_option("--min-length", min_length,
                        "smallest candidate line length (default 4)");
  lineation->add_option("--max-length", max_length,
                        "largest candidate line length (default 14)");

  CLI::App* lexicon = app.add_subcommand("lexicon", "lexicon maintenance");
  lexicon->require_subcommand(1);
  std::string lex_file, merge_a, merge_b, merge_out;
  CLI::App* validate = lexicon->add_subcommand("validate", "lint a lexicon TSV");
  validate->add_option("file", lex_file, "lexicon to check")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::App* merge = lexicon->add_subcommand("merge", "merge two lexicons");
  merge->add_option("a", merge_a)->required()->check(CLI::ExistingFile);
  merge->add_option("b", merge_b)->required()->check(CLI::ExistingFile);
  merge->add_option("--out-file", merge_out, "path for the merged TSV")
      ->required();
  CLI::App* stats = lexicon->add_subcommand("stats", "entry count and length histogram");
  stats->add_option("file", lex_file, "lexicon to describe")
      ->required()
      ->check(CLI::ExistingFile);

  int exit_code = 0;
  analyze->callback([&] { exit_code = cmd_analyze(analyze_config); });
  simulate->callback(
      [&] { exit_code = cmd_simulate(simulate_config, sim_q, sim_words, sim_seed); });
  lineation->callback([&] {
    exit_code = cmd_lineation(lineation_config, min_length, max_length);
  });
  validate->callback([&] { exit_code = cmd_lexicon_validate(lex_file); });
  merge->callback(
      [&] { exit_code = cmd_lexicon_merge(merge_a, merge_b, merge_out); });
  stats->callback([&] { exit_code = cmd_lexicon_stats(lex_file); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
