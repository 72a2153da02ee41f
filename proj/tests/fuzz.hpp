#pragma once

// Random mixed-script strings for normalization fuzzing, and a glibc-based widening helper
// so the checks can use <cwctype> classes instead of ICU.

#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<std::string> fuzz_inputs(std::size_t n) {
  static const std::vector<std::string> pieces = {
      "A", "b", "Z", "q", "ä", "Ä", "ö", "Ö", "ü", "Ü", "ß", "ẞ", "É", "é", "Ç", "Ñ",
      "0", "1", "2", "5", "9", "42", "1.000", "3,5", "3.10.2022", "29.02.2021", "12'500",
      ".", ",", ";", ":", "!", "?", "-", "–", "—", "(", ")", "[", "]", "\"", "'", "’", "„", "“", "”",
      "«", "»", "…", "/", "\\", "*", "#", "@", "&", "%", "$", "€", "£", "+", "=", "<", ">", "|", "~",
      "^", "`", "_", "°", "§", "¿", "¡", "·", "×", "÷", "±", "©", "®", "™", "→", "•", "♥", "😀",
      " ", "\u00A0", "\u2009", "\t", "\u202F", "\u3000", "\u200B", "\u00AD", "\uFE0F",
      "Mrd.", "Mio.", "z.B.", "bzw.", "Dr.", "CHF", "km/h", "°C", "Geht's", "SWISS TXT", "Live-Ticker"};
  std::mt19937 rng(20221203);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> len(0, 24);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    const int k = len(rng);
    for (int j = 0; j < k; ++j) s += pieces[pick(rng)];
    out.push_back(std::move(s));
  }
  return out;
}

inline std::wstring widen(const std::string& s) {
  std::wstring w(s.size() + 1, L'\0');
  const std::size_t n = std::mbstowcs(w.data(), s.c_str(), w.size());
  if (n == static_cast<std::size_t>(-1)) throw std::runtime_error("not valid UTF-8 in the current locale");
  w.resize(n);
  return w;
}

}  // namespace oracle
