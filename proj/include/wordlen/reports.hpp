#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "wordlen/deviation.hpp"
#include "wordlen/length_distribution.hpp"
#include "wordlen/lineation.hpp"
#include "wordlen/match_table.hpp"
#include "wordlen/random_model.hpp"
#include "wordlen/types.hpp"

namespace wordlen {

using json = nlohmann::ordered_json;

// Fixed-width shortest formatting so identical runs emit identical bytes.
inline std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

inline const char* to_string(Boundary boundary) {
  return boundary == Boundary::periodic ? "periodic" : "dirichlet";
}

inline const char* to_string(LineationVerdict verdict) {
  switch (verdict) {
    case LineationVerdict::isometric: return "isometric";
    case LineationVerdict::multi_length: return "multi-length";
    default: return "none";
  }
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline void write_json_file(const std::filesystem::path& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

// ---- sequences ------------------------------------------------------

// One syllable count per line; blank lines ignored.
inline SyllableSequence read_sequence(std::istream& in) {
  SyllableSequence seq;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(line, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != line.size() || value < 1)
      throw std::runtime_error("sequence line " + std::to_string(line_no) +
                               ": expected a positive integer, got \"" + line +
                               "\"");
    seq.counts.push_back(value);
  }
  return seq;
}

inline SyllableSequence load_sequence(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open sequence file: " + path.string());
  return read_sequence(in);
}

inline void write_sequence(const std::filesystem::path& path,
                           const SyllableSequence& seq) {
  std::string body;
  body.reserve(seq.counts.size() * 2);
  for (int n : seq.counts) {
    body += std::to_string(n);
    body += '\n';
  }
  write_text_file(path, body);
}

// ---- match table ----------------------------------------------------

inline std::string match_table_csv(const MatchTable& table) {
  std::ostringstream out;
  out << "n";
  for (int k = 1; k <= table.k_max; ++k) out << ",k" << k;
  out << ",Ln\n";
  for (int n = 1; n <= table.n_max; ++n) {
    out << n;
    for (int k = 1; k <= table.k_max; ++k) out << ',' << table.at(n, k);
    out << ',' << table.marginal(n) << '\n';
  }
  return out.str();
}

inline json match_table_json(const MatchTable& table) {
  json j;
  j["n_max"] = table.n_max;
  j["k_max"] = table.k_max;
  j["word_total"] = table.word_total;
  j["boundary"] = to_string(table.boundary);
  json counts = json::array();
  json marginals = json::array();
  for (int n = 1; n <= table.n_max; ++n) {
    json row = json::array();
    for (int k = 1; k <= table.k_max; ++k) row.push_back(table.at(n, k));
    counts.push_back(std::move(row));
    marginals.push_back(table.marginal(n));
  }
  j["counts"] = std::move(counts);
  j["marginals"] = std::move(marginals);
  return j;
}

// ---- frequency profile + model --------------------------------------

inline json model_json(const GeometricModel& model, int n_max,
                       const std::vector<double>& q_pred) {
  json j;
  j["q"] = model.q;
  j["n_max"] = n_max;
  json p = json::array();
  for (int n = 1; n <= n_max; ++n) p.push_back(geometric_pmf(model, n));
  j["p"] = std::move(p);
  json qp = json::array();
  for (int n = 1; n <= n_max && n < static_cast<int>(q_pred.size()); ++n)
    qp.push_back(q_pred[n]);
  j["Q_pred"] = std::move(qp);
  return j;
}

inline json profile_json(const FrequencyProfile& profile,
                         const LengthDistribution& p,
                         const GeometricModel& model,
                         const std::vector<double>& q_pred) {
  json j;
  j["word_total"] = profile.word_total;
  j["n_max"] = profile.n_max;
  j["k_max"] = profile.k_max;
  j["q_range"] = {profile.q_range.first, profile.q_range.second};
  j["q"] = profile.q;
  json q = json::array();
  for (int n = 1; n <= profile.n_max; ++n) q.push_back(profile.Q[n]);
  j["Q"] = std::move(q);
  json big_p = json::array();
  for (int n = 1; n <= profile.n_max; ++n) {
    json row = json::array();
    for (int k = 1; k <= profile.k_max; ++k) row.push_back(profile.P[n][k]);
    big_p.push_back(std::move(row));
  }
  j["P"] = std::move(big_p);
  json small_p = json::array();
  for (int n = 1; n <= profile.n_max; ++n) small_p.push_back(p.at(n));
  j["p"] = std::move(small_p);
  j["model"] = model_json(model, profile.n_max, q_pred);
  return j;
}

// ---- deviation report -----------------------------------------------

inline std::string deviation_csv(const DeviationReport& report) {
  std::ostringstream out;
  out << "n,Q_n,q,delta,sigma,flag\n";
  for (int n = 1; n <= report.n_max; ++n) {
    out << n << ',' << format_real(report.q + report.delta_q[n]) << ','
        << format_real(report.q) << ',' << format_real(report.delta_q[n])
        << ',' << format_real(report.sigma_q[n]) << ','
        << (report.flags[n] ? 1 : 0) << '\n';
  }
  return out.str();
}

inline json deviation_json(const DeviationReport& report) {
  json j;
  j["n_max"] = report.n_max;
  j["word_total"] = report.word_total;
  j["q"] = report.q;
  j["q_sigma"] = report.q_sigma;
  json rows = json::array();
  for (int n = 1; n <= report.n_max; ++n) {
    json row;
    row["n"] = n;
    row["Q"] = report.q + report.delta_q[n];
    row["delta"] = report.delta_q[n];
    row["sigma"] = report.sigma_q[n];
    row["flag"] = static_cast<bool>(report.flags[n]);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  json geom = json::array();
  json order = json::array();
  for (int n = 1; n <= report.n_max; ++n) {
    geom.push_back(report.p_resid_geom[n]);
    order.push_back(report.p_resid_order[n]);
  }
  j["p_resid_geom"] = std::move(geom);
  j["p_resid_order"] = std::move(order);
  return j;
}

// ---- bigram matrix ---------------------------------------------------

// Conditional distributions by preceding length, one row per m, with the
// unconditional distribution in an "all" row on top.
inline std::string bigram_csv(const BigramMatrix& bigram,
                              const LengthDistribution& p) {
  std::ostringstream out;
  out << "m";
  for (int n = 1; n <= bigram.dim; ++n) out << ",n" << n;
  out << ",count\n";
  out << "all";
  for (int n = 1; n <= bigram.dim; ++n) out << ',' << format_real(p.at(n));
  out << ',' << bigram.total << '\n';
  for (int m = 1; m <= bigram.dim; ++m) {
    if (bigram.row_total(m) == 0) continue;
    out << m;
    for (int n = 1; n <= bigram.dim; ++n)
      out << ',' << format_real(bigram.conditional(m, n));
    out << ',' << bigram.row_total(m) << '\n';
  }
  return out.str();
}

// ---- lineation --------------------------------------------------------

inline json lineation_json(const LineationReport& report) {
  json j;
  j["verdict"] = to_string(report.verdict);
  if (report.core_length)
    j["core_length"] = *report.core_length;
  else
    j["core_length"] = nullptr;
  json candidates = json::array();
  for (const LineationCandidate& candidate : report.candidates) {
    json c;
    c["length"] = candidate.length;
    c["score"] = candidate.score;
    c["z_at_length"] = candidate.z_at_length;
    c["z_at_double"] = candidate.z_at_double;
    c["qualifies"] = candidate.qualifies;
    json peaks = json::array();
    for (const LineationPeak& peak : candidate.peaks) {
      json pk;
      pk["n"] = peak.n;
      pk["z"] = peak.z;
      pk["significant"] = peak.significant;
      peaks.push_back(std::move(pk));
    }
    c["peaks"] = std::move(peaks);
    candidates.push_back(std::move(c));
  }
  j["candidates"] = std::move(candidates);
  return j;
}

inline std::string lineation_csv(const LineationReport& report) {
  std::ostringstream out;
  out << "L,score,z_at_L,z_at_2L\n";
  for (const LineationCandidate& candidate : report.candidates)
    out << candidate.length << ',' << format_real(candidate.score) << ','
        << format_real(candidate.z_at_length) << ','
        << format_real(candidate.z_at_double) << '\n';
  return out.str();
}

// ---- unknown words ----------------------------------------------------

inline json unknowns_json(const std::vector<UnknownWord>& unknowns) {
  json j = json::array();
  for (const UnknownWord& u : unknowns) {
    json entry;
    entry["position"] = u.position;
    entry["surface"] = u.surface;
    j.push_back(std::move(entry));
  }
  return j;
}

// ---- q comparison -----------------------------------------------------

inline json q_comparison_json(const QComparison& cmp) {
  json j;
  json entries = json::array();
  for (const QInterval& e : cmp.entries) {
    json entry;
    entry["label"] = e.label;
    entry["q"] = e.q;
    entry["word_total"] = e.word_total;
    entry["sigma"] = e.sigma;
    entry["lo"] = e.lo;
    entry["hi"] = e.hi;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  json pairs = json::array();
  for (const QComparison::PairVerdict& pv : cmp.pairs) {
    json pair;
    pair["a"] = cmp.entries[pv.a].label;
    pair["b"] = cmp.entries[pv.b].label;
    pair["overlap"] = pv.overlap;
    pair["significant_difference"] = !pv.overlap;
    pairs.push_back(std::move(pair));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

inline std::string q_comparison_csv(const QComparison& cmp) {
  std::ostringstream out;
  out << "label,q,word_total,sigma,lo,hi\n";
  for (const QInterval& e : cmp.entries)
    out << e.label << ',' << format_real(e.q) << ',' << e.word_total << ','
        << format_real(e.sigma) << ',' << format_real(e.lo) << ','
        << format_real(e.hi) << '\n';
  return out.str();
}

}  // namespace wordlen
