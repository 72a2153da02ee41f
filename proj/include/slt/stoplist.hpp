#pragma once

// German stop/function-word blacklist used by reduced BLEU and language detection.

#include <array>
#include <cstdlib>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slt/corpus.hpp"
#include "slt/unicode.hpp"

namespace slt {

/// The default blacklist exactly as published, duplicates included (146 lines).
inline constexpr std::array<std::string_view, 146> kDefaultStopWordLines = {
    "ab", "als", "als", "also", "am", "am", "an", "an", "andere", "auf", "aus", "beim", "bin",
    "bist", "da", "darauf", "das", "dass", "davon", "dazu", "dem", "den", "denen", "der",
    "des", "des", "deshalb", "dessen", "die", "dies", "diese", "diesen", "dieser", "dieses",
    "doch", "dort", "ein", "eine", "einem", "einen", "einen", "einer", "eines", "eines", "er",
    "es", "es", "für", "gar", "gegen", "geht's", "genau", "gibt", "habe", "haben", "habt",
    "hast", "hast", "hat", "hat", "hatte", "hätte", "hatten", "hätten", "her", "hin", "ihm",
    "ihre", "ihre", "im", "in", "ins", "ist", "könne", "könnte", "könnten", "man", "mehr",
    "mit", "noch", "nun", "ob", "oder", "quasi", "schon", "sehr", "sei", "seid", "seien",
    "sein", "seit", "sich", "sie", "sie", "sind", "so", "solchen", "soll", "somit", "sowie",
    "sowohl", "statt", "über", "um", "und", "vom", "von", "vor", "war", "war", "wäre", "war's",
    "wars", "warst", "wart", "wegen", "weiteren", "weiterhin", "wem", "wen", "wenn", "werde",
    "werden", "werdet", "weshalb", "wie", "will", "wir", "wird", "wirst", "wo", "wohl",
    "wolle", "wollte", "wollten", "worauf", "wurde", "würde", "würden", "zu", "zudem", "zum",
    "zur", "zur", "zur", "zwar"
};

class StopList {
 public:
  StopList() = default;

  /// Lowercases, trims and dedupes. Entries with an apostrophe also register their
  /// apostrophe-free spelling, since normalization deletes apostrophes before scoring.
  template <typename Range>
  static StopList from_lines(const Range& lines) {
    StopList list;
    for (const auto& raw : lines) {
      const std::string_view line = unicode::trim(std::string_view(raw));
      if (line.empty() || line.front() == '#') continue;
      std::string w = unicode::to_lower(line);
      if (w.find_first_of(" \t") != std::string::npos)
        throw DataError("stop list entry contains whitespace: '" + w + "'");
      const std::string stripped = strip_apostrophes(w);
      if (stripped != w && !stripped.empty()) list.words_.insert(stripped);
      list.words_.insert(std::move(w));
    }
    return list;
  }

  static StopList defaults() { return from_lines(kDefaultStopWordLines); }

  static StopList load(const std::string& path) {
    return from_lines(load_segments(path).lines);
  }

  /// `path` if nonempty, else $SLT_STOPLIST if set, else the built-in list.
  static StopList resolve(const std::string& path = {}) {
    if (!path.empty()) return load(path);
    if (const char* env = std::getenv("SLT_STOPLIST"); env && *env) return load(env);
    return defaults();
  }

  /// Case-insensitive membership.
  bool contains(std::string_view token) const {
    if (words_.contains(token)) return true;
    return words_.contains(unicode::to_lower(token));
  }

  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

  static std::string strip_apostrophes(std::string_view w) {
    std::string out;
    for (std::size_t pos = 0; pos < w.size();) {
      const char32_t c = unicode::next_codepoint(w, pos);
      if (c == U'\'' || c == U'\u2019' || c == U'\u02BC') continue;
      unicode::append_utf8(out, c);
    }
    return out;
  }

 private:
  std::set<std::string, std::less<>> words_;
};

}  // namespace slt
