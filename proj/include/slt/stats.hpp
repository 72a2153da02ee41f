#pragma once

// Vocabulary, singleton and duration accounting per corpus source and in total.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "slt/corpus.hpp"
#include "slt/unicode.hpp"

namespace slt {

struct SliceStats {
  std::int64_t utterances = 0;
  std::int64_t tokens = 0;
  std::int64_t video_count = 0;
  double hours = 0.0;
  std::int64_t vocabulary = 0;
  std::int64_t singletons = 0;

  bool operator==(const SliceStats&) const = default;
};

struct CorpusStats {
  std::map<Source, SliceStats> per_source;  // only sources present in the corpus
  SliceStats total;

  bool operator==(const CorpusStats&) const = default;
};

using FrequencyMap = std::unordered_map<std::string, std::int64_t>;

inline void add_frequencies(FrequencyMap& freq, std::string_view text) {
  for (auto tok : unicode::split_ws(text)) ++freq[std::string(tok)];
}

/// Associative merge of per-shard maps.
inline void merge_frequencies(FrequencyMap& into, const FrequencyMap& from) {
  for (const auto& [w, c] : from) into[w] += c;
}

namespace detail {

struct SliceAccumulator {
  FrequencyMap freq;
  std::set<std::string> videos;
  double seconds = 0.0;
  std::int64_t utterances = 0;
  std::int64_t tokens = 0;

  void add(const Utterance& u) {
    ++utterances;
    for (auto tok : unicode::split_ws(u.text)) {
      ++freq[std::string(tok)];
      ++tokens;
    }
    if (u.duration_s) seconds += *u.duration_s;
    if (u.video && !u.video->empty()) videos.insert(*u.video);
  }

  SliceStats finish() const {
    SliceStats s;
    s.utterances = utterances;
    s.tokens = tokens;
    s.video_count = static_cast<std::int64_t>(videos.size());
    s.hours = seconds / 3600.0;
    s.vocabulary = static_cast<std::int64_t>(freq.size());
    for (const auto& [w, c] : freq)
      if (c == 1) ++s.singletons;
    return s;
  }
};

}  // namespace detail

/// Whitespace tokens. Totals are computed on the union, so a type shared between sources
/// counts once in the total vocabulary and is never a total singleton if it occurs twice.
inline CorpusStats vocab_stats(const Corpus& corpus) {
  std::map<Source, detail::SliceAccumulator> slices;
  detail::SliceAccumulator total;
  for (const auto& u : corpus.utterances) {
    slices[u.source].add(u);
    total.add(u);
  }
  CorpusStats out;
  for (const auto& [src, acc] : slices) out.per_source[src] = acc.finish();
  out.total = total.finish();
  return out;
}

inline nlohmann::json to_json(const SliceStats& s) {
  return {{"utterances", s.utterances}, {"tokens", s.tokens},         {"videos", s.video_count},
          {"hours", s.hours},           {"vocabulary", s.vocabulary}, {"singletons", s.singletons}};
}

inline nlohmann::json to_json(const CorpusStats& st) {
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [src, s] : st.per_source) per[std::string(to_string(src))] = to_json(s);
  return {{"schema_version", 1}, {"per_source", std::move(per)}, {"total", to_json(st.total)}};
}

namespace detail {

inline std::string fmt_int(std::int64_t v) { return std::to_string(v); }

inline std::string fmt_hours(double h) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", h);
  return buf;
}

inline std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

inline std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace detail

/// Rows Videos/Hours/Vocabulary/Singletons, one column per source plus Total.
inline std::string format_stats_table(const CorpusStats& st) {
  std::vector<std::string> header{""};
  std::vector<const SliceStats*> cols;
  for (const auto& [src, s] : st.per_source) {
    header.emplace_back(to_string(src));
    cols.push_back(&s);
  }
  header.emplace_back("Total");
  cols.push_back(&st.total);

  std::vector<std::vector<std::string>> rows{header};
  const auto row = [&](const std::string& label, auto get) {
    std::vector<std::string> r{label};
    for (const auto* c : cols) r.push_back(get(*c));
    rows.push_back(std::move(r));
  };
  row("Videos", [](const SliceStats& s) { return detail::fmt_int(s.video_count); });
  row("Hours", [](const SliceStats& s) { return detail::fmt_hours(s.hours); });
  row("Vocabulary", [](const SliceStats& s) { return detail::fmt_int(s.vocabulary); });
  row("Singletons", [](const SliceStats& s) { return detail::fmt_int(s.singletons); });

  std::string out;
  for (const auto& r : rows) {
    out += detail::pad_right(r[0], 12);
    for (std::size_t i = 1; i < r.size(); ++i) out += detail::pad_left(r[i], 10);
    out += '\n';
  }
  return out;
}

struct FieldDelta {
  std::string slice;  // source name or "Total"
  std::string field;  // videos, hours, vocabulary, singletons
  double raw = 0.0;
  double clean = 0.0;
  double delta = 0.0;
  std::optional<double> percent;  // empty when raw is 0 and clean is not
  bool increased = false;         // a negative reduction

  bool operator==(const FieldDelta&) const = default;
};

struct ReductionReport {
  std::vector<FieldDelta> rows;
};

inline FieldDelta make_delta(std::string slice, std::string field, double raw, double clean) {
  FieldDelta d{std::move(slice), std::move(field), raw, clean, clean - raw, std::nullopt, clean > raw};
  if (raw != 0.0)
    d.percent = 100.0 * (clean - raw) / raw;
  else if (clean == 0.0)
    d.percent = 0.0;
  return d;
}

inline ReductionReport compare_stats(const CorpusStats& raw, const CorpusStats& clean) {
  ReductionReport rep;
  std::set<Source> sources;
  for (const auto& [s, _] : raw.per_source) sources.insert(s);
  for (const auto& [s, _] : clean.per_source) sources.insert(s);
  const auto add_slice = [&](const std::string& name, const SliceStats& r, const SliceStats& c) {
    rep.rows.push_back(make_delta(name, "videos", static_cast<double>(r.video_count), static_cast<double>(c.video_count)));
    rep.rows.push_back(make_delta(name, "hours", r.hours, c.hours));
    rep.rows.push_back(make_delta(name, "vocabulary", static_cast<double>(r.vocabulary), static_cast<double>(c.vocabulary)));
    rep.rows.push_back(make_delta(name, "singletons", static_cast<double>(r.singletons), static_cast<double>(c.singletons)));
  };
  const SliceStats empty{};
  for (Source s : sources) {
    auto r = raw.per_source.find(s);
    auto c = clean.per_source.find(s);
    add_slice(std::string(to_string(s)), r == raw.per_source.end() ? empty : r->second,
              c == clean.per_source.end() ? empty : c->second);
  }
  add_slice("Total", raw.total, clean.total);
  return rep;
}

/// "+2 (+20.0%)", "-11943 (-34.3%)"; hours keep one decimal.
inline std::string format_delta(const FieldDelta& d) {
  char buf[96];
  if (d.field == "hours")
    std::snprintf(buf, sizeof buf, "%+.1f", d.delta);
  else
    std::snprintf(buf, sizeof buf, "%+lld", static_cast<long long>(std::llround(d.delta)));
  std::string out = buf;
  if (d.percent) {
    std::snprintf(buf, sizeof buf, " (%+.1f%%)", *d.percent);
    out += buf;
  } else {
    out += " (n/a)";
  }
  return out;
}

inline std::string format_reduction_table(const ReductionReport& rep) {
  std::string out = detail::pad_right("slice", 8) + detail::pad_right("field", 12) + detail::pad_left("raw", 10) +
                    detail::pad_left("clean", 10) + "  delta\n";
  for (const auto& d : rep.rows) {
    const bool hours = d.field == "hours";
    const auto num = [&](double v) {
      return hours ? detail::fmt_hours(v) : detail::fmt_int(static_cast<std::int64_t>(std::llround(v)));
    };
    out += detail::pad_right(d.slice, 8) + detail::pad_right(d.field, 12) + detail::pad_left(num(d.raw), 10) +
           detail::pad_left(num(d.clean), 10) + "  " + format_delta(d);
    if (d.increased) out += "  [increase]";
    out += '\n';
  }
  return out;
}

inline nlohmann::json to_json(const ReductionReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& d : rep.rows) {
    nlohmann::json r{{"slice", d.slice}, {"field", d.field}, {"raw", d.raw},
                     {"clean", d.clean}, {"delta", d.delta}, {"increased", d.increased}};
    r["percent"] = d.percent ? nlohmann::json(*d.percent) : nlohmann::json(nullptr);
    rows.push_back(std::move(r));
  }
  return {{"schema_version", 1}, {"rows", std::move(rows)}};
}

}  // namespace slt
