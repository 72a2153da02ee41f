#pragma once

// Test-only reference implementations. Deliberately naive and independent of the library
// code paths they check.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<std::string> tokenize(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline std::vector<std::vector<std::string>> ngrams(const std::vector<std::string>& toks, std::size_t n) {
  std::vector<std::vector<std::string>> out;
  if (toks.size() < n) return out;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) out.emplace_back(toks.begin() + i, toks.begin() + i + n);
  return out;
}

inline std::int64_t occurrences(const std::vector<std::vector<std::string>>& list, const std::vector<std::string>& g) {
  std::int64_t c = 0;
  for (const auto& x : list)
    if (x == g) ++c;
  return c;
}

struct Bleu {
  double score = 0;
  std::array<double, 4> precisions{};
  double bp = 0;
  std::int64_t c = 0, r = 0;
};

/// Brute-force corpus BLEU-4, no smoothing: quadratic n-gram matching by linear scans.
inline Bleu brute_force_bleu(const std::vector<std::string>& hyps, const std::vector<std::string>& refs) {
  std::array<std::int64_t, 4> match{}, total{};
  Bleu b;
  for (std::size_t s = 0; s < hyps.size(); ++s) {
    const auto h = tokenize(hyps[s]);
    const auto r = tokenize(refs[s]);
    b.c += static_cast<std::int64_t>(h.size());
    b.r += static_cast<std::int64_t>(r.size());
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto hg = ngrams(h, n);
      const auto rg = ngrams(r, n);
      total[n - 1] += static_cast<std::int64_t>(hg.size());
      std::vector<std::vector<std::string>> seen;
      for (const auto& g : hg) {
        if (occurrences(seen, g)) continue;
        seen.push_back(g);
        match[n - 1] += std::min(occurrences(hg, g), occurrences(rg, g));
      }
    }
  }
  bool any_zero = false;
  double logsum = 0;
  for (int n = 0; n < 4; ++n) {
    b.precisions[n] = total[n] ? static_cast<double>(match[n]) / static_cast<double>(total[n]) : 0.0;
    if (b.precisions[n] == 0) any_zero = true;
    else logsum += std::log(b.precisions[n]);
  }
  if (b.c == 0) {
    b.bp = b.r == 0 ? 1.0 : 0.0;
  } else {
    b.bp = b.c >= b.r ? 1.0 : std::exp(1.0 - static_cast<double>(b.r) / static_cast<double>(b.c));
  }
  b.score = (any_zero || b.c == 0) ? 0.0 : 100.0 * b.bp * std::exp(logsum / 4.0);
  return b;
}

/// Random corpus: up to `max_segs` segments of up to `max_toks` tokens over `vocab` words.
inline std::vector<std::string> random_corpus(std::mt19937& rng, std::size_t segs, int max_toks, int vocab) {
  std::uniform_int_distribution<int> len(0, max_toks);
  std::uniform_int_distribution<int> word(0, vocab - 1);
  std::vector<std::string> out;
  for (std::size_t s = 0; s < segs; ++s) {
    std::string line;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      if (i) line += ' ';
      line += "w" + std::to_string(word(rng));
    }
    out.push_back(line);
  }
  return out;
}

/// German cardinals 0..100 written out by hand.
inline const std::array<std::string, 101> kGermanNumerals = {
    "null", "eins", "zwei", "drei", "vier", "fünf", "sechs", "sieben", "acht", "neun",
    "zehn", "elf", "zwölf", "dreizehn", "vierzehn", "fünfzehn", "sechzehn", "siebzehn", "achtzehn", "neunzehn",
    "zwanzig", "einundzwanzig", "zweiundzwanzig", "dreiundzwanzig", "vierundzwanzig",
    "fünfundzwanzig", "sechsundzwanzig", "siebenundzwanzig", "achtundzwanzig", "neunundzwanzig",
    "dreißig", "einunddreißig", "zweiunddreißig", "dreiunddreißig", "vierunddreißig",
    "fünfunddreißig", "sechsunddreißig", "siebenunddreißig", "achtunddreißig", "neununddreißig",
    "vierzig", "einundvierzig", "zweiundvierzig", "dreiundvierzig", "vierundvierzig",
    "fünfundvierzig", "sechsundvierzig", "siebenundvierzig", "achtundvierzig", "neunundvierzig",
    "fünfzig", "einundfünfzig", "zweiundfünfzig", "dreiundfünfzig", "vierundfünfzig",
    "fünfundfünfzig", "sechsundfünfzig", "siebenundfünfzig", "achtundfünfzig", "neunundfünfzig",
    "sechzig", "einundsechzig", "zweiundsechzig", "dreiundsechzig", "vierundsechzig",
    "fünfundsechzig", "sechsundsechzig", "siebenundsechzig", "achtundsechzig", "neunundsechzig",
    "siebzig", "einundsiebzig", "zweiundsiebzig", "dreiundsiebzig", "vierundsiebzig",
    "fünfundsiebzig", "sechsundsiebzig", "siebenundsiebzig", "achtundsiebzig", "neunundsiebzig",
    "achtzig", "einundachtzig", "zweiundachtzig", "dreiundachtzig", "vierundachtzig",
    "fünfundachtzig", "sechsundachtzig", "siebenundachtzig", "achtundachtzig", "neunundachtzig",
    "neunzig", "einundneunzig", "zweiundneunzig", "dreiundneunzig", "vierundneunzig",
    "fünfundneunzig", "sechsundneunzig", "siebenundneunzig", "achtundneunzig", "neunundneunzig",
    "einhundert"};

/// Masculine ordinals 1..31 written out by hand (index 0 unused).
inline const std::array<std::string, 32> kGermanOrdinals = {
    "", "erster", "zweiter", "dritter", "vierter", "fünfter", "sechster", "siebter", "achter",
    "neunter", "zehnter", "elfter", "zwölfter", "dreizehnter", "vierzehnter", "fünfzehnter",
    "sechzehnter", "siebzehnter", "achtzehnter", "neunzehnter", "zwanzigster", "einundzwanzigster",
    "zweiundzwanzigster", "dreiundzwanzigster", "vierundzwanzigster", "fünfundzwanzigster",
    "sechsundzwanzigster", "siebenundzwanzigster", "achtundzwanzigster", "neunundzwanzigster",
    "dreißigster", "einunddreißigster"};

/// Composition rules on top of the hand table: a final "eins" becomes "ein" in front of a
/// multiplier word; hundreds and thousands are prefixed compounds.
inline std::string compound_form(int n) {
  std::string w = kGermanNumerals[static_cast<std::size_t>(n)];
  if (n % 100 == 1 && w.size() >= 4 && w.substr(w.size() - 4) == "eins") w.pop_back();
  return w;
}

inline std::string below_thousand(int n) {  // 1..999
  if (n <= 100) return kGermanNumerals[static_cast<std::size_t>(n)];
  std::string w = compound_form(n / 100) + "hundert";
  if (n % 100) w += kGermanNumerals[static_cast<std::size_t>(n % 100)];
  return w;
}

inline std::string german_cardinal_below_million(int n) {
  if (n == 0) return "null";
  std::string w;
  if (n >= 1000) {
    const int k = n / 1000;
    std::string head = below_thousand(k);
    if (k % 100 == 1) head.pop_back();  // ...eins -> ...ein
    w = head + "tausend";
  }
  if (n % 1000) w += below_thousand(n % 1000);
  return w;
}

/// Window starts by exhaustive scan of every candidate start frame.
inline std::vector<std::int64_t> enumerate_starts(std::int64_t frames, std::int64_t window, std::int64_t stride) {
  std::vector<std::int64_t> out;
  for (std::int64_t s = 0; s < frames; ++s)
    if (s % stride == 0 && s + window <= frames) out.push_back(s);
  return out;
}

/// Word frequencies with std::map, no shortcuts.
inline std::map<std::string, std::int64_t> frequencies(const std::vector<std::string>& texts) {
  std::map<std::string, std::int64_t> f;
  for (const auto& t : texts)
    for (const auto& w : tokenize(t)) f[w] += 1;
  return f;
}

}  // namespace oracle
