#pragma once

// German cardinal numbers, day ordinals and dates as spoken-form words.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "slt/error.hpp"

namespace slt::de {

inline constexpr std::int64_t kMaxSpelled = 999'999'999'999;

namespace detail {

inline constexpr std::array<std::string_view, 20> kBelowTwenty = {
    "null",   "eins",   "zwei",     "drei",     "vier",     "fünf",     "sechs",
    "sieben", "acht",   "neun",     "zehn",     "elf",      "zwölf",    "dreizehn",
    "vierzehn", "fünfzehn", "sechzehn", "siebzehn", "achtzehn", "neunzehn"};

inline constexpr std::array<std::string_view, 10> kTens = {
    "", "", "zwanzig", "dreißig", "vierzig", "fünfzig", "sechzig", "siebzig", "achtzig", "neunzig"};

// Unit stems inside "<unit>und<tens>" and before "hundert"/"tausend": sechs, sieben stay whole.
inline constexpr std::array<std::string_view, 10> kUnitStem = {
    "", "ein", "zwei", "drei", "vier", "fünf", "sechs", "sieben", "acht", "neun"};

}  // namespace detail

/// How a trailing 1 is written: standalone "eins", compound "ein" (eintausend),
/// or feminine "eine" (eine million).
enum class OneForm { Eins, Ein, Eine };

inline std::string_view one_word(OneForm f) {
  switch (f) {
    case OneForm::Eins: return "eins";
    case OneForm::Ein: return "ein";
    case OneForm::Eine: return "eine";
  }
  return "eins";
}

/// 1..999 as one compound word.
inline std::string spell_group(int n, OneForm final_one) {
  std::string out;
  if (n >= 100) {
    out += detail::kUnitStem[static_cast<std::size_t>(n / 100)];
    out += "hundert";
    n %= 100;
  }
  if (n == 0) return out;
  if (n == 1) {
    out += one_word(final_one);
  } else if (n < 20) {
    out += detail::kBelowTwenty[static_cast<std::size_t>(n)];
  } else {
    if (n % 10) {
      out += detail::kUnitStem[static_cast<std::size_t>(n % 10)];
      out += "und";
    }
    out += detail::kTens[static_cast<std::size_t>(n / 10)];
  }
  return out;
}

/// Standard German cardinal for n in [0, 999 999 999 999]. Everything below a million is a
/// single compound word; "million(en)" and "milliarde(n)" are separate words.
inline std::string spell_number_de(std::int64_t n) {
  if (n < 0 || n > kMaxSpelled)
    throw DataError("number out of range for spelling: " + std::to_string(n));
  if (n == 0) return "null";

  const auto billions = static_cast<int>(n / 1'000'000'000);
  const auto millions = static_cast<int>(n / 1'000'000 % 1000);
  const auto thousands = static_cast<int>(n / 1000 % 1000);
  const auto rest = static_cast<int>(n % 1000);

  std::string out;
  const auto add_word = [&out](std::string_view w) {
    if (!out.empty()) out += ' ';
    out += w;
  };
  const auto big = [&](int count, std::string_view singular, std::string_view plural) {
    if (count == 0) return;
    if (count == 1) {
      add_word("eine");
      add_word(singular);
    } else {
      add_word(spell_group(count, OneForm::Eine));
      add_word(plural);
    }
  };
  big(billions, "milliarde", "milliarden");
  big(millions, "million", "millionen");

  std::string low;
  if (thousands) low += spell_group(thousands, OneForm::Ein) + "tausend";
  if (rest) low += spell_group(rest, OneForm::Eins);
  if (!low.empty()) add_word(low);
  return out;
}

inline bool is_leap_year(std::int64_t y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

inline int days_in_month(int month, std::int64_t year) {
  static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap_year(year)) return 29;
  return kDays[static_cast<std::size_t>(month - 1)];
}

inline bool is_valid_date(int day, int month, std::int64_t year) {
  return year >= 0 && month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(month, year);
}

inline constexpr std::array<std::string_view, 12> kMonthNames = {
    "januar", "februar", "märz",      "april",   "mai",      "juni",
    "juli",   "august",  "september", "oktober", "november", "dezember"};

/// Masculine nominative ordinal for 1..31 ("erster", "dritter", "zwanzigster").
inline std::string spell_day_ordinal(int day) {
  if (day < 1 || day > 31) throw DataError("day out of range: " + std::to_string(day));
  switch (day) {
    case 1: return "erster";
    case 3: return "dritter";
    case 7: return "siebter";
    case 8: return "achter";
    default: break;
  }
  if (day < 20) return std::string(detail::kBelowTwenty[static_cast<std::size_t>(day)]) + "ter";
  return spell_group(day, OneForm::Ein) + "ster";
}

/// Years 1100..1999 are read in hundreds ("neunzehnhundertvierundachtzig").
inline std::string spell_year(std::int64_t year) {
  if (year >= 1100 && year <= 1999) {
    const int hundreds = static_cast<int>(year / 100);
    const int rest = static_cast<int>(year % 100);
    std::string out = std::string(detail::kBelowTwenty[static_cast<std::size_t>(hundreds)]) + "hundert";
    if (rest) out += spell_group(rest, OneForm::Eins);
    return out;
  }
  return spell_number_de(year);
}

inline std::string spell_date_de(int day, int month, std::int64_t year) {
  if (!is_valid_date(day, month, year))
    throw DataError("invalid date: " + std::to_string(day) + "." + std::to_string(month) + "." +
                    std::to_string(year));
  return spell_day_ordinal(day) + " " + std::string(kMonthNames[static_cast<std::size_t>(month - 1)]) +
         " " + spell_year(year);
}

}  // namespace slt::de
