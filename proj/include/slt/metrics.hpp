#pragma once

// Corpus BLEU, stop-word-reduced BLEU and checkpoint selection by reduced BLEU.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "slt/corpus.hpp"
#include "slt/error.hpp"
#include "slt/stoplist.hpp"
#include "slt/unicode.hpp"

namespace slt {

inline constexpr int kMaxOrder = 4;

/// NONE: classic definition, any zero precision gives 0.
/// EXP: the k-th zero-match order (k = 1, 2, ...) gets precision 1 / (2^k * total n-grams).
enum class Smoothing { NONE, EXP };

struct BleuScore {
  double score = 0.0;  // 0..100
  std::array<double, kMaxOrder> precisions{};
  double brevity_penalty = 0.0;
  std::int64_t hyp_len = 0;
  std::int64_t ref_len = 0;
  std::array<std::int64_t, kMaxOrder> matches{};
  std::array<std::int64_t, kMaxOrder> totals{};

  bool operator==(const BleuScore&) const = default;
};

inline nlohmann::json to_json(const BleuScore& b) {
  return {{"score", b.score},
          {"precisions", b.precisions},
          {"bp", b.brevity_penalty},
          {"hyp_len", b.hyp_len},
          {"ref_len", b.ref_len},
          {"matches", b.matches},
          {"totals", b.totals}};
}

/// sacrebleu-style one-line summary with 2-decimal score.
inline std::string format_bleu(const BleuScore& b) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "BLEU = %.2f %.1f/%.1f/%.1f/%.1f (BP = %.3f, hyp_len = %lld, ref_len = %lld)",
                b.score, 100 * b.precisions[0], 100 * b.precisions[1], 100 * b.precisions[2],
                100 * b.precisions[3], b.brevity_penalty, static_cast<long long>(b.hyp_len),
                static_cast<long long>(b.ref_len));
  return buf;
}

/// Sufficient statistics: per-order clipped matches and hypothesis n-gram totals, plus lengths.
struct BleuStats {
  std::array<std::int64_t, kMaxOrder> matches{};
  std::array<std::int64_t, kMaxOrder> totals{};
  std::int64_t hyp_len = 0;
  std::int64_t ref_len = 0;

  BleuStats& operator+=(const BleuStats& o) {
    for (int n = 0; n < kMaxOrder; ++n) {
      matches[n] += o.matches[n];
      totals[n] += o.totals[n];
    }
    hyp_len += o.hyp_len;
    ref_len += o.ref_len;
    return *this;
  }
};

namespace detail {

using NgramCounts = std::map<std::vector<std::string_view>, std::int64_t>;

inline NgramCounts count_ngrams(const std::vector<std::string_view>& toks, std::size_t n) {
  NgramCounts counts;
  for (std::size_t i = 0; i + n <= toks.size(); ++i)
    ++counts[std::vector<std::string_view>(toks.begin() + static_cast<std::ptrdiff_t>(i),
                                           toks.begin() + static_cast<std::ptrdiff_t>(i + n))];
  return counts;
}

}  // namespace detail

inline BleuStats segment_stats(std::string_view hyp, std::string_view ref) {
  const auto h = unicode::split_ws(hyp);
  const auto r = unicode::split_ws(ref);
  BleuStats st;
  st.hyp_len = static_cast<std::int64_t>(h.size());
  st.ref_len = static_cast<std::int64_t>(r.size());
  for (int n = 1; n <= kMaxOrder; ++n) {
    const auto hc = detail::count_ngrams(h, static_cast<std::size_t>(n));
    const auto rc = detail::count_ngrams(r, static_cast<std::size_t>(n));
    std::int64_t matched = 0;
    for (const auto& [gram, c] : hc) {
      auto it = rc.find(gram);
      if (it != rc.end()) matched += std::min(c, it->second);
    }
    st.matches[n - 1] = matched;
    st.totals[n - 1] = h.size() >= static_cast<std::size_t>(n) ? static_cast<std::int64_t>(h.size()) - n + 1 : 0;
  }
  return st;
}

inline BleuScore score_from_stats(const BleuStats& st, Smoothing smoothing = Smoothing::NONE) {
  BleuScore b;
  b.hyp_len = st.hyp_len;
  b.ref_len = st.ref_len;
  b.matches = st.matches;
  b.totals = st.totals;
  const double c = static_cast<double>(st.hyp_len);
  const double r = static_cast<double>(st.ref_len);
  // An empty hypothesis against a nonempty reference has no defined ratio; reported as 0.
  b.brevity_penalty = c >= r ? 1.0 : (st.hyp_len == 0 ? 0.0 : std::exp(1.0 - r / c));

  double log_sum = 0.0;
  bool zero = false;
  int zero_orders = 0;
  for (int n = 0; n < kMaxOrder; ++n) {
    double p = 0.0;
    if (st.totals[n] > 0) {
      if (st.matches[n] > 0) {
        p = static_cast<double>(st.matches[n]) / static_cast<double>(st.totals[n]);
      } else if (smoothing == Smoothing::EXP) {
        ++zero_orders;
        p = 1.0 / (std::ldexp(1.0, zero_orders) * static_cast<double>(st.totals[n]));
      }
    }
    if (p <= 0.0) {
      zero = true;
    } else {
      log_sum += std::log(p);
    }
    // Reported precisions stay the raw ratios; smoothing only feeds the geometric mean.
    b.precisions[n] = st.totals[n] > 0 ? static_cast<double>(st.matches[n]) / static_cast<double>(st.totals[n]) : 0.0;
  }
  b.score = (zero || st.hyp_len == 0) ? 0.0 : 100.0 * b.brevity_penalty * std::exp(log_sum / kMaxOrder);
  if (b.score > 100.0) b.score = 100.0;
  return b;
}

inline void check_aligned(const SegmentFile& hyps, const SegmentFile& refs, std::string_view what = "hypothesis") {
  if (refs.size() == 0) throw DataError("empty reference corpus");
  if (hyps.size() != refs.size())
    throw DataError("segment count mismatch: " + std::string(what) + " has " + std::to_string(hyps.size()) +
                    " lines, reference has " + std::to_string(refs.size()));
}

inline BleuStats corpus_stats(const SegmentFile& hyps, const SegmentFile& refs) {
  check_aligned(hyps, refs);
  BleuStats total;
  for (std::size_t i = 0; i < hyps.size(); ++i) total += segment_stats(hyps.lines[i], refs.lines[i]);
  return total;
}

/// Corpus-level BLEU-4 over whitespace tokens, one reference per segment.
inline BleuScore bleu(const SegmentFile& hyps, const SegmentFile& refs, Smoothing smoothing = Smoothing::NONE) {
  return score_from_stats(corpus_stats(hyps, refs), smoothing);
}

inline std::string remove_stopwords(std::string_view segment, const StopList& stops) {
  std::vector<std::string_view> kept;
  for (auto tok : unicode::split_ws(segment))
    if (!stops.contains(tok)) kept.push_back(tok);
  return unicode::join(kept);
}

inline SegmentFile remove_stopwords(const SegmentFile& segs, const StopList& stops) {
  SegmentFile out;
  out.lines.reserve(segs.size());
  for (const auto& l : segs.lines) out.lines.push_back(remove_stopwords(l, stops));
  return out;
}

/// Which side of the evaluation the blacklist is applied to.
enum class ReducedSide { BOTH, HYP };

inline BleuScore reduced_bleu(const SegmentFile& hyps, const SegmentFile& refs, const StopList& stops,
                              Smoothing smoothing = Smoothing::NONE, ReducedSide side = ReducedSide::BOTH) {
  check_aligned(hyps, refs);
  const SegmentFile h = remove_stopwords(hyps, stops);
  if (side == ReducedSide::HYP) return bleu(h, refs, smoothing);
  return bleu(h, remove_stopwords(refs, stops), smoothing);
}

struct StopwordCount {
  std::int64_t count = 0;
  double fraction = 0.0;
  bool operator==(const StopwordCount&) const = default;
};

inline StopwordCount count_stopwords(const SegmentFile& hyps, const StopList& stops) {
  std::int64_t total = 0;
  StopwordCount out;
  for (const auto& l : hyps.lines) {
    for (auto tok : unicode::split_ws(l)) {
      ++total;
      if (stops.contains(tok)) ++out.count;
    }
  }
  out.fraction = total == 0 ? 0.0 : static_cast<double>(out.count) / static_cast<double>(total);
  return out;
}

struct Candidate {
  std::string name;
  SegmentFile hyps;
};

struct CandidateReport {
  std::string name;
  BleuScore standard;
  BleuScore reduced;
  StopwordCount stopwords;
};

struct SelectionReport {
  std::vector<CandidateReport> candidates;  // input order
  std::string winner;
};

/// Picks the candidate with the highest reduced BLEU; ties go to fewer stop words, then to
/// the lexicographically smaller name.
inline SelectionReport select_checkpoint(const std::vector<Candidate>& candidates, const SegmentFile& refs,
                                         const StopList& stops, Smoothing smoothing = Smoothing::NONE,
                                         ReducedSide side = ReducedSide::BOTH) {
  if (candidates.empty()) throw DataError("select_checkpoint needs at least one candidate");
  SelectionReport report;
  for (const auto& c : candidates) {
    if (c.hyps.size() != refs.size())
      throw DataError("candidate '" + c.name + "' has " + std::to_string(c.hyps.size()) +
                      " lines, reference has " + std::to_string(refs.size()));
    report.candidates.push_back({c.name, bleu(c.hyps, refs, smoothing), reduced_bleu(c.hyps, refs, stops, smoothing, side),
                                 count_stopwords(c.hyps, stops)});
  }
  const auto better = [](const CandidateReport& a, const CandidateReport& b) {
    return std::make_tuple(-a.reduced.score, a.stopwords.count, std::string_view(a.name)) <
           std::make_tuple(-b.reduced.score, b.stopwords.count, std::string_view(b.name));
  };
  report.winner = std::min_element(report.candidates.begin(), report.candidates.end(), better)->name;
  return report;
}

inline nlohmann::json to_json(const SelectionReport& r) {
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : r.candidates)
    cands.push_back({{"name", c.name},
                     {"bleu", c.standard.score},
                     {"reduced_bleu", c.reduced.score},
                     {"stopwords", c.stopwords.count},
                     {"stopword_fraction", c.stopwords.fraction}});
  return {{"schema_version", 1}, {"candidates", std::move(cands)}, {"winner", r.winner}};
}

}  // namespace slt
