#pragma once

// Sentence-level filtering of subtitle noise: sound annotations in asterisks, hashtag lines,
// subtitling-agency status messages and foreign-language sentences.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "slt/corpus.hpp"
#include "slt/error.hpp"
#include "slt/stoplist.hpp"
#include "slt/unicode.hpp"

namespace slt {

enum class RuleName { FOREIGN_SENTENCE, HASHTAG_START, STATUS_MESSAGE, ASTERISK_SOUND, EMPTY_TEXT };
enum class RuleAction { DROP_UTTERANCE, STRIP_SPAN };

inline std::string_view to_string(RuleName r) {
  switch (r) {
    case RuleName::FOREIGN_SENTENCE: return "FOREIGN_SENTENCE";
    case RuleName::HASHTAG_START: return "HASHTAG_START";
    case RuleName::STATUS_MESSAGE: return "STATUS_MESSAGE";
    case RuleName::ASTERISK_SOUND: return "ASTERISK_SOUND";
    case RuleName::EMPTY_TEXT: return "EMPTY_TEXT";
  }
  return "";
}

inline std::optional<RuleName> parse_rule_name(std::string_view s) {
  for (RuleName r : {RuleName::FOREIGN_SENTENCE, RuleName::HASHTAG_START, RuleName::STATUS_MESSAGE,
                     RuleName::ASTERISK_SOUND, RuleName::EMPTY_TEXT})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

/// EMPTY_TEXT is implicit: it fires whenever nothing is left of a line.
inline constexpr RuleAction action_of(RuleName r) {
  return r == RuleName::ASTERISK_SOUND ? RuleAction::STRIP_SPAN : RuleAction::DROP_UTTERANCE;
}

struct CleanRule {
  RuleName name;
  RuleAction action;

  explicit constexpr CleanRule(RuleName n) : name(n), action(action_of(n)) {}
  bool operator==(const CleanRule&) const = default;
};

inline std::vector<CleanRule> default_rules() {
  return {CleanRule(RuleName::ASTERISK_SOUND), CleanRule(RuleName::FOREIGN_SENTENCE),
          CleanRule(RuleName::HASHTAG_START), CleanRule(RuleName::STATUS_MESSAGE)};
}

enum class Verdict { KEPT, DROPPED, EDITED };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::KEPT: return "KEPT";
    case Verdict::DROPPED: return "DROPPED";
    case Verdict::EDITED: return "EDITED";
  }
  return "";
}

struct RuleHit {
  RuleName rule;
  std::string span;
  bool operator==(const RuleHit&) const = default;
};

struct CleanOutcome {
  std::string id;
  Verdict verdict = Verdict::KEPT;
  std::vector<RuleHit> hits;
  bool operator==(const CleanOutcome&) const = default;
};

inline nlohmann::json to_json(const CleanOutcome& o) {
  nlohmann::json hits = nlohmann::json::array();
  for (const auto& h : o.hits)
    hits.push_back({{"rule", std::string(to_string(h.rule))}, {"span", h.span}});
  return {{"id", o.id}, {"verdict", std::string(to_string(o.verdict))}, {"hits", std::move(hits)}};
}

// ---------------------------------------------------------------------------
// Language profiles

enum class Language { DE, FR, EN };

inline std::string_view to_string(Language l) {
  switch (l) {
    case Language::DE: return "DE";
    case Language::FR: return "FR";
    case Language::EN: return "EN";
  }
  return "";
}

struct LanguageProfile {
  Language language;
  std::set<std::string, std::less<>> function_words;
};

// FR and EN lists leave out every word of the German list ("in", "an", "so", "am", "die",
// "des", "es", "her", "will", ...) so that shared tokens never vote for a foreign language.
inline constexpr std::string_view kFrenchFunctionWords[] = {
    "le",   "la",    "les",   "un",   "une",  "du",    "de",    "et",    "est",   "sont",
    "ce",   "cette", "ces",   "que",  "qui",  "quoi",  "dans",  "pour",  "par",   "sur",
    "avec", "sans",  "mais",  "ou",   "où",   "ne",    "pas",   "plus",  "il",    "elle",
    "ils",  "elles", "nous",  "vous", "je",   "tu",    "au",    "aux",   "son",   "sa",
    "ses",  "leur",  "leurs", "mon",  "ma",   "mes",   "été",   "être",  "avoir", "y",
    "en",   "très",  "aussi", "comme", "bien", "tout", "tous",  "se",    "lui",   "c'est"};

inline constexpr std::string_view kEnglishFunctionWords[] = {
    "the",   "a",     "of",    "and",   "to",    "is",    "are",    "was",   "were",  "be",
    "been",  "it",    "that",  "this",  "these", "those", "with",   "for",   "on",    "at",
    "by",    "from",  "as",    "or",    "but",   "not",   "no",     "yes",   "you",   "he",
    "she",   "they",  "we",    "i",     "my",    "your",  "his",    "their", "our",   "have",
    "has",   "had",   "do",    "does",  "did",   "would", "can",    "could", "should", "there",
    "here",  "what",  "which", "who",   "when",  "where", "why",    "how",   "if",    "then",
    "than",  "all",   "some",  "any",   "it's",  "i'm"};

inline LanguageProfile german_profile() {
  return {Language::DE, StopList::defaults().words()};
}

template <typename Range>
LanguageProfile make_profile(Language lang, const Range& words) {
  LanguageProfile p{lang, {}};
  for (const auto& w : words) p.function_words.insert(unicode::to_lower(w));
  return p;
}

inline std::vector<LanguageProfile> default_profiles() {
  return {german_profile(), make_profile(Language::FR, kFrenchFunctionWords),
          make_profile(Language::EN, kEnglishFunctionWords)};
}

struct LanguageGuess {
  Language language = Language::DE;
  std::vector<std::pair<Language, double>> scores;  // one per profile, in profile order

  double score(Language l) const {
    for (const auto& [lang, s] : scores)
      if (lang == l) return s;
    return 0.0;
  }
};

namespace detail {

/// Strips leading/trailing punctuation so "mat." still counts as "mat".
inline std::string_view trim_punct(std::string_view tok) {
  std::size_t b = 0;
  while (b < tok.size()) {
    std::size_t pos = b;
    if (!unicode::is_punct_or_symbol(unicode::next_codepoint(tok, pos))) break;
    b = pos;
  }
  std::size_t e = tok.size();
  while (e > b) {
    std::size_t start = e - 1;
    while (start > b && (static_cast<unsigned char>(tok[start]) & 0xC0) == 0x80) --start;
    std::size_t pos = start;
    if (!unicode::is_punct_or_symbol(unicode::next_codepoint(tok, pos))) break;
    e = start;
  }
  return tok.substr(b, e - b);
}

}  // namespace detail

/// Share of whitespace tokens that are function words of each profile; argmax wins,
/// ties go to DE (then to the earlier profile).
inline LanguageGuess detect_language(std::string_view text, const std::vector<LanguageProfile>& profiles) {
  LanguageGuess guess;
  const std::string lower = unicode::to_lower(text);
  const auto tokens = unicode::split_ws(lower);
  double best = -1.0;
  for (const auto& p : profiles) {
    std::size_t hits = 0;
    for (auto tok : tokens)
      if (p.function_words.contains(detail::trim_punct(tok))) ++hits;
    const double s = tokens.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(tokens.size());
    guess.scores.emplace_back(p.language, s);
  }
  for (const auto& [lang, s] : guess.scores) {
    if (lang == Language::DE && s >= best) {
      best = s;
      guess.language = lang;
    }
  }
  for (const auto& [lang, s] : guess.scores) {
    if (s > best) {
      best = s;
      guess.language = lang;
    }
  }
  return guess;
}

// ---------------------------------------------------------------------------
// Rules

inline constexpr std::string_view kDefaultStatusPatterns[] = {
    "1:1-Untertitelung.", "Livepassagen können Fehler enthalten.", "Mit Live-Untertiteln von SWISS TXT"};

/// True when the trimmed text is a pattern, or a pattern followed only by punctuation/whitespace.
inline bool match_status_message(std::string_view text, const std::vector<std::string>& patterns) {
  const std::string_view t = unicode::trim(text);
  for (const auto& pat : patterns) {
    if (pat.empty() || !t.starts_with(pat)) continue;
    const std::string_view tail = t.substr(pat.size());
    bool only_punct = true;
    for (std::size_t pos = 0; pos < tail.size() && only_punct;) {
      const char32_t c = unicode::next_codepoint(tail, pos);
      only_punct = unicode::is_space(c) || unicode::is_punct_or_symbol(c);
    }
    if (only_punct) return true;
  }
  return false;
}

/// Removes every `*...*` pair (non-greedy, left to right); an unpaired `*` stays.
/// Returns the stripped text (whitespace collapsed) and the removed spans.
inline std::pair<std::string, std::vector<std::string>> strip_asterisk_spans(std::string_view text) {
  std::string out;
  std::vector<std::string> spans;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t open = text.find('*', i);
    if (open == std::string_view::npos) break;
    const std::size_t close = text.find('*', open + 1);
    if (close == std::string_view::npos) break;
    out.append(text.substr(i, open - i));
    out += ' ';
    spans.emplace_back(text.substr(open, close - open + 1));
    i = close + 1;
  }
  out.append(text.substr(i));
  if (spans.empty()) return {std::string(text), spans};
  return {unicode::collapse_spaces(out), spans};
}

inline bool starts_with_hashtag(std::string_view text) {
  const std::string_view t = unicode::trim(text);
  return t.starts_with('#') || t.starts_with("＃");
}

struct CleanConfig {
  std::vector<std::string> status_patterns{std::begin(kDefaultStatusPatterns), std::end(kDefaultStatusPatterns)};
  double foreign_threshold = 0.3;
  std::map<RuleName, bool> enabled;  // missing entries count as enabled

  bool is_enabled(RuleName r) const {
    auto it = enabled.find(r);
    return it == enabled.end() || it->second;
  }

  /// {"status_patterns": [...], "extra_status_patterns": [...], "foreign_threshold": 0.3,
  ///  "rules": {"HASHTAG_START": false, ...}}
  static CleanConfig from_json(const nlohmann::json& j) {
    CleanConfig cfg;
    if (!j.is_object()) throw DataError("cleaning config must be a JSON object");
    try {
      if (j.contains("status_patterns")) cfg.status_patterns = j.at("status_patterns").get<std::vector<std::string>>();
      if (j.contains("extra_status_patterns"))
        for (auto& p : j.at("extra_status_patterns").get<std::vector<std::string>>()) cfg.status_patterns.push_back(p);
      if (j.contains("foreign_threshold")) cfg.foreign_threshold = j.at("foreign_threshold").get<double>();
      if (j.contains("rules")) {
        for (const auto& [key, value] : j.at("rules").items()) {
          auto r = parse_rule_name(key);
          if (!r || *r == RuleName::EMPTY_TEXT) throw DataError("unknown cleaning rule '" + key + "'");
          cfg.enabled[*r] = value.get<bool>();
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("cleaning config: ") + e.what());
    }
    return cfg;
  }

  static CleanConfig load(const std::string& path) {
    try {
      return from_json(nlohmann::json::parse(detail::read_file(path)));
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError("cleaning config '" + path + "': " + e.what());
    }
  }

  std::vector<CleanRule> rules() const {
    std::vector<CleanRule> out;
    for (const auto& r : default_rules())
      if (is_enabled(r.name)) out.push_back(r);
    return out;
  }
};

struct CleanResult {
  Corpus corpus;
  std::vector<CleanOutcome> outcomes;
};

/// Cleans one utterance text. Stripping runs first; drop rules see the stripped text and are
/// evaluated in the given order, all hits logged.
inline std::pair<std::string, CleanOutcome> clean_text(const Utterance& u, const std::vector<CleanRule>& rules,
                                                       const std::vector<LanguageProfile>& profiles,
                                                       const CleanConfig& cfg) {
  CleanOutcome outcome{u.id, Verdict::KEPT, {}};
  std::string text = u.text;
  bool stripped = false;
  const bool strip_enabled = std::any_of(rules.begin(), rules.end(),
                                         [](const CleanRule& r) { return r.name == RuleName::ASTERISK_SOUND; });
  if (strip_enabled) {
    auto [out, spans] = strip_asterisk_spans(text);
    for (auto& s : spans) outcome.hits.push_back({RuleName::ASTERISK_SOUND, std::move(s)});
    if (!spans.empty()) {
      text = std::move(out);
      stripped = true;
    }
  }
  bool dropped = false;
  if (unicode::collapse_spaces(text).empty()) {
    outcome.hits.push_back({RuleName::EMPTY_TEXT, ""});
    dropped = true;
  }
  for (const auto& rule : rules) {
    if (dropped) break;
    switch (rule.name) {
      case RuleName::HASHTAG_START:
        if (starts_with_hashtag(text)) {
          outcome.hits.push_back({rule.name, std::string(unicode::trim(text))});
          dropped = true;
        }
        break;
      case RuleName::STATUS_MESSAGE:
        if (match_status_message(text, cfg.status_patterns)) {
          outcome.hits.push_back({rule.name, std::string(unicode::trim(text))});
          dropped = true;
        }
        break;
      case RuleName::FOREIGN_SENTENCE: {
        const auto guess = detect_language(text, profiles);
        const double de = guess.score(Language::DE);
        for (const auto& [lang, s] : guess.scores) {
          if (lang != Language::DE && s > de && s >= cfg.foreign_threshold) {
            outcome.hits.push_back({rule.name, std::string(to_string(lang))});
            dropped = true;
            break;
          }
        }
        break;
      }
      case RuleName::ASTERISK_SOUND:
      case RuleName::EMPTY_TEXT:
        break;
    }
  }
  if (dropped)
    outcome.verdict = Verdict::DROPPED;
  else if (stripped)
    outcome.verdict = Verdict::EDITED;
  return {std::move(text), std::move(outcome)};
}

/// One outcome per input utterance; the output corpus keeps KEPT and EDITED utterances in order.
inline CleanResult clean_corpus(const Corpus& corpus, const std::vector<CleanRule>& rules,
                                const std::vector<LanguageProfile>& profiles, const CleanConfig& cfg = {}) {
  if (rules.empty()) throw DataError("clean_corpus needs at least one rule");
  CleanResult result;
  result.outcomes.reserve(corpus.size());
  for (const auto& u : corpus.utterances) {
    auto [text, outcome] = clean_text(u, rules, profiles, cfg);
    if (outcome.verdict != Verdict::DROPPED) {
      Utterance kept = u;
      kept.text = std::move(text);
      result.corpus.utterances.push_back(std::move(kept));
    }
    result.outcomes.push_back(std::move(outcome));
  }
  return result;
}

inline CleanResult clean_corpus(const Corpus& corpus, const CleanConfig& cfg = {}) {
  return clean_corpus(corpus, cfg.rules(), default_profiles(), cfg);
}

}  // namespace slt
