#pragma once

// Rule-based inverse text normalization: number words back to digits, sentence-initial
// capitals and a terminal period. An approximation of what a commercial display-format
// service does, not a replica.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slt/numbers_de.hpp"
#include "slt/unicode.hpp"

namespace slt::itn {

namespace detail {

inline bool consume(std::string_view& s, std::string_view prefix) {
  if (!s.starts_with(prefix)) return false;
  s.remove_prefix(prefix.size());
  return true;
}

inline std::optional<int> parse_unit_stem(std::string_view s) {
  for (int u = 1; u <= 9; ++u)
    if (s == de::detail::kUnitStem[static_cast<std::size_t>(u)]) return u;
  return std::nullopt;
}

/// 1..99, whole string. `one` lists the accepted spellings of a bare 1.
inline std::optional<int> parse_below_hundred(std::string_view s, std::initializer_list<de::OneForm> one) {
  if (s.empty()) return std::nullopt;
  for (de::OneForm f : one)
    if (s == de::one_word(f)) return 1;
  for (int n = 2; n < 20; ++n)
    if (s == de::detail::kBelowTwenty[static_cast<std::size_t>(n)]) return n;
  for (int t = 2; t <= 9; ++t) {
    const std::string_view tens = de::detail::kTens[static_cast<std::size_t>(t)];
    if (s == tens) return t * 10;
    if (s.ends_with(tens)) {
      std::string_view head = s.substr(0, s.size() - tens.size());
      if (!head.ends_with("und")) continue;
      head.remove_suffix(3);
      if (auto u = parse_unit_stem(head)) return t * 10 + *u;
    }
  }
  return std::nullopt;
}

/// 1..999 as one compound, whole string. A bare "hundert" counts as 100.
inline std::optional<int> parse_group(std::string_view s, std::initializer_list<de::OneForm> one) {
  if (s.empty()) return std::nullopt;
  int value = 0;
  if (const auto pos = s.find("hundert"); pos != std::string_view::npos) {
    const std::string_view head = s.substr(0, pos);
    int h = 1;
    if (!head.empty()) {
      auto u = parse_unit_stem(head);
      if (!u) return std::nullopt;
      h = *u;
    }
    value = h * 100;
    s.remove_prefix(pos + 7);
    if (s.empty()) return value;
  }
  auto low = parse_below_hundred(s, one);
  if (!low) return std::nullopt;
  return value + *low;
}

/// A single word below one million ("null", "zweiundvierzig", "eintausendeins").
inline std::optional<std::int64_t> parse_low_word(std::string_view w) {
  if (w == "null") return 0;
  std::int64_t value = 0;
  std::string_view rest = w;
  if (const auto pos = w.find("tausend"); pos != std::string_view::npos) {
    const std::string_view head = w.substr(0, pos);
    std::int64_t k = 1;
    if (!head.empty()) {
      auto g = parse_group(head, {de::OneForm::Ein});
      if (!g) return std::nullopt;
      k = *g;
    }
    value = k * 1000;
    rest = w.substr(pos + 7);
    if (rest.empty()) return value;
  }
  auto g = parse_group(rest, {de::OneForm::Eins});
  if (!g) return std::nullopt;
  return value + *g;
}

/// Multiplier word in front of "million(en)"/"milliarde(n)"; 1 only as "eine".
inline std::optional<int> parse_multiplier(std::string_view w) {
  return parse_group(w, {de::OneForm::Eine});
}

struct Scale {
  std::string_view singular;
  std::string_view plural;
  std::int64_t factor;
};

inline constexpr Scale kScales[] = {{"milliarde", "milliarden", 1'000'000'000},
                                    {"million", "millionen", 1'000'000}};

}  // namespace detail

/// Longest parse of a number phrase at `tokens[start]`. Returns (value, tokens used).
inline std::optional<std::pair<std::int64_t, std::size_t>> parse_number_at(
    const std::vector<std::string_view>& tokens, std::size_t start) {
  std::int64_t value = 0;
  std::size_t i = start;
  bool any = false;
  for (const auto& scale : detail::kScales) {
    if (i + 1 >= tokens.size()) break;
    auto m = detail::parse_multiplier(tokens[i]);
    if (!m) continue;
    const bool singular = *m == 1;
    if (tokens[i + 1] != (singular ? scale.singular : scale.plural)) continue;
    value += static_cast<std::int64_t>(*m) * scale.factor;
    i += 2;
    any = true;
  }
  if (i < tokens.size()) {
    // "ein"/"eine" are articles on their own, never numbers.
    const std::string_view w = tokens[i];
    if (w != "ein" && w != "eine") {
      if (auto low = detail::parse_low_word(w); low && !(any && *low == 0)) {
        value += *low;
        ++i;
        any = true;
      }
    }
  }
  if (!any) return std::nullopt;
  return std::make_pair(value, i - start);
}

/// Replaces maximal runs of German number words with digits, scanning greedily left to right.
inline std::string contract_numbers_de(std::string_view text) {
  const auto tokens = unicode::split_ws(text);
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size();) {
    if (auto parsed = parse_number_at(tokens, i)) {
      out.push_back(std::to_string(parsed->first));
      i += parsed->second;
    } else {
      out.emplace_back(tokens[i]);
      ++i;
    }
  }
  std::string joined;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i) joined += ' ';
    joined += out[i];
  }
  return joined;
}

namespace detail {

inline bool is_terminal(char32_t c) { return c == U'.' || c == U'!' || c == U'?' || c == U'…'; }

inline std::string capitalize_sentences(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 1);
  bool at_start = true;
  char32_t prev = 0;
  for (std::size_t pos = 0; pos < s.size();) {
    char32_t c = unicode::next_codepoint(s, pos);
    if (at_start && unicode::is_letter(c)) {
      c = unicode::to_upper(c);
      at_start = false;
    } else if (at_start && !unicode::is_space(c)) {
      at_start = false;
    }
    if (unicode::is_space(c) && is_terminal(prev)) at_start = true;
    unicode::append_utf8(out, c);
    prev = c;
  }
  return out;
}

}  // namespace detail

/// Display form: numbers contracted, segment and sentence starts capitalized, terminal period
/// added when missing. Nouns are not recased.
inline std::string restore_display(std::string_view text) {
  std::string s = contract_numbers_de(text);
  if (s.empty()) return s;
  s = detail::capitalize_sentences(s);
  const auto cps = unicode::decode(s);
  if (!detail::is_terminal(cps.back())) s += '.';
  return s;
}

}  // namespace slt::itn
