#pragma once

// Utterance corpora (JSON Lines) and plain-text segment files.

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "slt/error.hpp"
#include "slt/unicode.hpp"

namespace slt {

enum class Source { SRF, FN, LEX, OTHER };

inline constexpr Source kAllSources[] = {Source::SRF, Source::FN, Source::LEX, Source::OTHER};

inline std::string_view to_string(Source s) {
  switch (s) {
    case Source::SRF: return "SRF";
    case Source::FN: return "FN";
    case Source::LEX: return "LEX";
    case Source::OTHER: return "OTHER";
  }
  return "OTHER";
}

inline std::optional<Source> parse_source(std::string_view s) {
  for (Source src : kAllSources)
    if (to_string(src) == s) return src;
  return std::nullopt;
}

struct Utterance {
  std::string id;
  std::string text;
  Source source = Source::OTHER;
  std::optional<double> duration_s;
  // Video the segment was cut from; only used for per-source video counts.
  std::optional<std::string> video;

  bool operator==(const Utterance&) const = default;
};

struct Corpus {
  std::vector<Utterance> utterances;

  std::size_t size() const { return utterances.size(); }
  bool empty() const { return utterances.empty(); }
  bool operator==(const Corpus&) const = default;
};

/// One segment per line, as used for hypothesis and reference files.
struct SegmentFile {
  std::vector<std::string> lines;

  std::size_t size() const { return lines.size(); }
  bool operator==(const SegmentFile&) const = default;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("write failed for '" + path + "'");
}

/// Splits on LF, dropping a trailing CR per line; a final terminator does not start a new line.
inline std::vector<std::string> split_lines(std::string_view content) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t nl = content.find('\n', start);
    const bool last = nl == std::string_view::npos;
    if (last) nl = content.size();
    std::string_view line = content.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = nl + 1;
  }
  return lines;
}

inline void require_utf8(std::string_view content, std::string_view what) {
  const std::size_t bad = unicode::find_invalid_utf8(content);
  if (bad == std::string_view::npos) return;
  const std::size_t line = 1 + static_cast<std::size_t>(
      std::count(content.begin(), content.begin() + static_cast<std::ptrdiff_t>(bad), '\n'));
  throw DataError(std::string(what) + ": invalid UTF-8 at line " + std::to_string(line) +
                  " (byte offset " + std::to_string(bad) + ")");
}

}  // namespace detail

inline Utterance utterance_from_json(const nlohmann::json& j, std::size_t line_no) {
  const auto where = [&] { return "line " + std::to_string(line_no); };
  if (!j.is_object()) throw DataError(where() + ": expected a JSON object");
  Utterance u;
  const auto id = j.find("id");
  if (id == j.end() || !id->is_string() || id->get_ref<const std::string&>().empty())
    throw DataError(where() + ": missing or empty string field 'id'");
  u.id = id->get<std::string>();
  const auto text = j.find("text");
  if (text == j.end() || !text->is_string())
    throw DataError(where() + ": missing string field 'text'");
  u.text = text->get<std::string>();
  if (auto s = j.find("source"); s != j.end() && !s->is_null()) {
    if (!s->is_string()) throw DataError(where() + ": 'source' must be a string");
    auto parsed = parse_source(s->get<std::string>());
    if (!parsed) throw DataError(where() + ": unknown source '" + s->get<std::string>() + "'");
    u.source = *parsed;
  }
  if (auto d = j.find("duration_s"); d != j.end() && !d->is_null()) {
    if (!d->is_number()) throw DataError(where() + ": 'duration_s' must be a number");
    const double v = d->get<double>();
    if (!(v >= 0.0)) throw DataError(where() + ": 'duration_s' must be non-negative");
    u.duration_s = v;
  }
  if (auto v = j.find("video"); v != j.end() && !v->is_null()) {
    if (!v->is_string()) throw DataError(where() + ": 'video' must be a string");
    u.video = v->get<std::string>();
  }
  return u;
}

inline nlohmann::json to_json(const Utterance& u) {
  nlohmann::json j;
  j["id"] = u.id;
  j["text"] = u.text;
  j["source"] = std::string(to_string(u.source));
  if (u.duration_s) j["duration_s"] = *u.duration_s;
  if (u.video) j["video"] = *u.video;
  return j;
}

/// Parses JSONL content. Blank lines are skipped; ids must be unique.
inline Corpus parse_corpus(std::string_view content) {
  detail::require_utf8(content, "corpus");
  Corpus corpus;
  std::map<std::string, std::size_t, std::less<>> seen;
  const auto lines = detail::split_lines(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (unicode::trim(lines[i]).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(lines[i]);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError("line " + std::to_string(line_no) + ": malformed JSON (" + e.what() + ")");
    }
    Utterance u = utterance_from_json(j, line_no);
    auto [it, inserted] = seen.emplace(u.id, line_no);
    if (!inserted)
      throw DataError("duplicate id '" + u.id + "' at lines " + std::to_string(it->second) +
                      " and " + std::to_string(line_no));
    corpus.utterances.push_back(std::move(u));
  }
  return corpus;
}

inline Corpus load_corpus(const std::string& path) { return parse_corpus(detail::read_file(path)); }

inline std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const auto& u : corpus.utterances) {
    out += to_json(u).dump();
    out += '\n';
  }
  return out;
}

inline void write_corpus(const std::string& path, const Corpus& corpus) {
  detail::write_file(path, serialize_corpus(corpus));
}

inline SegmentFile parse_segments(std::string_view content) {
  detail::require_utf8(content, "segments");
  return SegmentFile{detail::split_lines(content)};
}

inline SegmentFile load_segments(const std::string& path) {
  return parse_segments(detail::read_file(path));
}

inline std::string serialize_segments(const SegmentFile& segs) {
  std::string out;
  for (const auto& l : segs.lines) {
    out += l;
    out += '\n';
  }
  return out;
}

inline void write_segments(const std::string& path, const SegmentFile& segs) {
  detail::write_file(path, serialize_segments(segs));
}

}  // namespace slt
