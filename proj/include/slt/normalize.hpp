#pragma once

// Target-text normalization: abbreviations, dates, numbers, punctuation, case.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "slt/corpus.hpp"
#include "slt/error.hpp"
#include "slt/numbers_de.hpp"
#include "slt/unicode.hpp"

namespace slt {

/// Built-in abbreviation table, same content as data/abbrev_de.tsv.
inline constexpr std::string_view kDefaultAbbrevTsv = R"tsv(# German subtitle abbreviations: <abbreviation> TAB <expansion>
# Keys always carry a dot, a capital or a symbol so already-normalized text never matches.
Mrd.	Milliarden
Mia.	Milliarden
Mio.	Millionen
Tsd.	Tausend
z.B.	zum Beispiel
z. B.	zum Beispiel
bzw.	beziehungsweise
d.h.	das heisst
d. h.	das heisst
u.a.	unter anderem
usw.	und so weiter
etc.	et cetera
ca.	circa
Dr.	Doktor
Prof.	Professor
Nr.	Nummer
St.	Sankt
Str.	Strasse
evtl.	eventuell
ggf.	gegebenenfalls
inkl.	inklusive
bzgl.	bezüglich
z.T.	zum Teil
u.U.	unter Umständen
v.a.	vor allem
o.ä.	oder ähnlich
vgl.	vergleiche
Std.	Stunden
Min.	Minuten
Jh.	Jahrhundert
CHF	Franken
km/h	Kilometer pro Stunde
°C	Grad Celsius
%	Prozent
&	und
)tsv";

class AbbrevTable {
 public:
  AbbrevTable() = default;

  void add(std::string key, std::string expansion) {
    if (key.empty() || expansion.empty()) throw DataError("abbreviation key and value must be nonempty");
    auto [it, inserted] = entries_.emplace(std::move(key), std::move(expansion));
    if (!inserted) throw DataError("duplicate abbreviation '" + it->first + "'");
    by_length_.assign(entries_.begin(), entries_.end());
    std::stable_sort(by_length_.begin(), by_length_.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  }

  /// Two tab-separated columns; blank lines and '#' comments skipped.
  static AbbrevTable parse_tsv(std::string_view content) {
    AbbrevTable table;
    const auto lines = detail::split_lines(content);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const std::string& line = lines[i];
      if (unicode::trim(line).empty() || line.front() == '#') continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
        throw DataError("abbreviation table line " + std::to_string(i + 1) + ": expected two tab-separated columns");
      try {
        table.add(line.substr(0, tab), line.substr(tab + 1));
      } catch (const DataError& e) {
        throw DataError("abbreviation table line " + std::to_string(i + 1) + ": " + e.what());
      }
    }
    return table;
  }

  static AbbrevTable load(const std::string& path) {
    const std::string content = detail::read_file(path);
    detail::require_utf8(content, "abbreviation table");
    return parse_tsv(content);
  }

  static AbbrevTable defaults() { return parse_tsv(kDefaultAbbrevTsv); }

  const std::map<std::string, std::string>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Entries ordered longest key first, for longest-match lookup.
  const std::vector<std::pair<std::string, std::string>>& by_length() const { return by_length_; }

 private:
  std::map<std::string, std::string> entries_;
  std::vector<std::pair<std::string, std::string>> by_length_;
};

struct NormConfig {
  bool expand_abbrev = true;
  bool strip_punct = true;
  bool lowercase = true;
  bool expand_numbers = true;
  bool expand_dates = true;
};

enum class NumericKind { INTEGER, DECIMAL, DATE };

inline std::string_view to_string(NumericKind k) {
  switch (k) {
    case NumericKind::INTEGER: return "INTEGER";
    case NumericKind::DECIMAL: return "DECIMAL";
    case NumericKind::DATE: return "DATE";
  }
  return "INTEGER";
}

/// Byte range [begin, end) of the input plus its text.
struct NumericSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string text;
  NumericKind kind = NumericKind::INTEGER;

  bool operator==(const NumericSpan&) const = default;
};

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline std::size_t digit_run(std::string_view s, std::size_t i) {
  std::size_t j = i;
  while (j < s.size() && is_digit(s[j])) ++j;
  return j - i;
}

/// Length in bytes of a thousands separator at s[i]: '.', apostrophes, thin spaces.
inline std::size_t thousands_sep(std::string_view s, std::size_t i) {
  if (i >= s.size()) return 0;
  if (s[i] == '.' || s[i] == '\'') return 1;
  for (std::string_view sep : {"\u2009", "\u202F", "\u2019"})
    if (s.substr(i).starts_with(sep)) return sep.size();
  return 0;
}

/// Digits with optional thousands groups starting at i; returns end offset, or i if none.
inline std::size_t match_integer(std::string_view s, std::size_t i) {
  const std::size_t head = digit_run(s, i);
  if (head == 0) return i;
  std::size_t end = i + head;
  if (head > 3) return end;
  while (true) {
    const std::size_t sep = thousands_sep(s, end);
    if (sep == 0) break;
    if (digit_run(s, end + sep) != 3) break;
    end += sep + 3;
  }
  return end;
}

inline std::size_t match_date(std::string_view s, std::size_t i) {
  std::size_t j = i;
  const std::size_t d = digit_run(s, j);
  if (d < 1 || d > 2) return i;
  j += d;
  if (j >= s.size() || s[j] != '.') return i;
  ++j;
  const std::size_t m = digit_run(s, j);
  if (m < 1 || m > 2) return i;
  j += m;
  if (j >= s.size() || s[j] != '.') return i;
  ++j;
  if (digit_run(s, j) != 4) return i;
  j += 4;
  const int day = std::stoi(std::string(s.substr(i, d)));
  const int month = std::stoi(std::string(s.substr(i + d + 1, m)));
  const int year = std::stoi(std::string(s.substr(j - 4, 4)));
  if (!de::is_valid_date(day, month, year)) return i;
  return j;
}

inline std::size_t match_decimal(std::string_view s, std::size_t i) {
  const std::size_t int_end = match_integer(s, i);
  if (int_end == i || int_end >= s.size() || s[int_end] != ',') return i;
  const std::size_t frac = digit_run(s, int_end + 1);
  if (frac == 0) return i;
  return int_end + 1 + frac;
}

}  // namespace detail

/// Non-overlapping numeric spans, left to right. At each digit run, DATE is tried first
/// (calendar-valid D.M.YYYY / DD.MM.YYYY), then DECIMAL (comma fraction), then INTEGER.
inline std::vector<NumericSpan> find_numeric_spans(std::string_view text, bool with_dates = true) {
  std::vector<NumericSpan> spans;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!detail::is_digit(text[i]) || (i > 0 && detail::is_digit(text[i - 1]))) {
      ++i;
      continue;
    }
    NumericKind kind = NumericKind::DATE;
    std::size_t end = with_dates ? detail::match_date(text, i) : i;
    if (end == i) {
      kind = NumericKind::DECIMAL;
      end = detail::match_decimal(text, i);
    }
    if (end == i) {
      kind = NumericKind::INTEGER;
      end = detail::match_integer(text, i);
    }
    spans.push_back({i, end, std::string(text.substr(i, end - i)), kind});
    i = end;
  }
  return spans;
}

namespace detail {

inline std::string only_digits(std::string_view s) {
  std::string out;
  for (char c : s)
    if (is_digit(c)) out += c;
  return out;
}

/// Digit string (any length) as words; beyond the speller's range each thousands group
/// is spelled on its own.
inline std::string spell_digits(std::string_view digits) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return "null";
  digits.remove_prefix(first);
  if (digits.size() <= 12) return de::spell_number_de(std::stoll(std::string(digits)));
  std::string out;
  std::size_t head = digits.size() % 3;
  if (head == 0) head = 3;
  for (std::size_t pos = 0; pos < digits.size(); pos = (pos == 0 ? head : pos + 3)) {
    const std::size_t len = pos == 0 ? head : 3;
    if (!out.empty()) out += ' ';
    out += de::spell_number_de(std::stoll(std::string(digits.substr(pos, len))));
  }
  return out;
}

inline std::string spell_span(const NumericSpan& span) {
  switch (span.kind) {
    case NumericKind::DATE: {
      const auto p1 = span.text.find('.');
      const auto p2 = span.text.find('.', p1 + 1);
      return de::spell_date_de(std::stoi(span.text.substr(0, p1)),
                               std::stoi(span.text.substr(p1 + 1, p2 - p1 - 1)),
                               std::stoll(span.text.substr(p2 + 1)));
    }
    case NumericKind::DECIMAL: {
      const auto comma = span.text.find(',');
      std::string out = spell_digits(only_digits(span.text.substr(0, comma))) + " komma";
      for (char c : span.text.substr(comma + 1)) {
        out += ' ';
        out += de::spell_number_de(c - '0');
      }
      return out;
    }
    case NumericKind::INTEGER:
      return spell_digits(only_digits(span.text));
  }
  return span.text;
}

inline bool is_alnum_at_start(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  return unicode::is_alnum(unicode::next_codepoint(s, pos));
}

inline bool is_alnum_at_end(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = s.size() - 1;
  while (start > 0 && (static_cast<unsigned char>(s[start]) & 0xC0) == 0x80) --start;
  std::size_t pos = start;
  return unicode::is_alnum(unicode::next_codepoint(s, pos));
}

}  // namespace detail

/// Longest-match abbreviation expansion. Alphanumeric key edges must sit on word boundaries.
inline std::string expand_abbreviations(std::string_view text, const AbbrevTable& table) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const bool left_boundary = !detail::is_alnum_at_end(text.substr(0, i));
    const std::pair<std::string, std::string>* hit = nullptr;
    for (const auto& entry : table.by_length()) {
      const std::string& key = entry.first;
      if (!text.substr(i).starts_with(key)) continue;
      if (detail::is_alnum_at_start(key) && !left_boundary) continue;
      if (detail::is_alnum_at_end(key) && detail::is_alnum_at_start(text.substr(i + key.size()))) continue;
      hit = &entry;
      break;
    }
    if (hit) {
      out += ' ';
      out += hit->second;
      out += ' ';
      i += hit->first.size();
      continue;
    }
    const std::size_t start = i;
    unicode::next_codepoint(text, i);
    out.append(text.substr(start, i - start));
  }
  return out;
}

inline std::string expand_numerics(std::string_view text, bool dates, bool numbers) {
  std::string out;
  std::size_t last = 0;
  for (const auto& span : find_numeric_spans(text, dates)) {
    if (span.kind != NumericKind::DATE && !numbers) continue;
    out.append(text.substr(last, span.begin - last));
    out += ' ';
    out += detail::spell_span(span);
    out += ' ';
    last = span.end;
  }
  out.append(text.substr(last));
  return out;
}

/// Deletes punctuation, symbols and invisible format characters. Deleting rather than
/// splitting keeps this a many-to-one map on tokens ("Live-Ticker" -> "LiveTicker").
inline std::string strip_punctuation(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const char32_t c = unicode::next_codepoint(text, pos);
    if (unicode::is_punct_or_symbol(c) || unicode::is_invisible(c)) continue;
    unicode::append_utf8(out, c);
  }
  return out;
}

/// abbreviations, dates, numbers, punctuation, lowercase, whitespace collapse.
inline std::string normalize_text(std::string_view text, const AbbrevTable& table,
                                  const NormConfig& cfg = {}) {
  std::string s(text);
  if (cfg.expand_abbrev) s = expand_abbreviations(s, table);
  if (cfg.expand_dates || cfg.expand_numbers) s = expand_numerics(s, cfg.expand_dates, cfg.expand_numbers);
  if (cfg.strip_punct) s = strip_punctuation(s);
  if (cfg.lowercase) s = unicode::to_lower(s);
  return unicode::collapse_spaces(s);
}

inline Corpus normalize_corpus(const Corpus& corpus, const AbbrevTable& table, const NormConfig& cfg = {}) {
  Corpus out = corpus;
  for (auto& u : out.utterances) u.text = normalize_text(u.text, table, cfg);
  return out;
}

}  // namespace slt
