#include <gtest/gtest.h>

#include "slt/itn.hpp"
#include "slt/numbers_de.hpp"
#include "slt/unicode.hpp"

using slt::itn::contract_numbers_de;
using slt::itn::restore_display;

TEST(ContractNumbers, SpecExamples) {
  EXPECT_EQ(contract_numbers_de("zweiundvierzig"), "42");
  EXPECT_EQ(contract_numbers_de("hallo welt"), "hallo welt");
  EXPECT_EQ(contract_numbers_de("eintausendeins gäste"), "1001 gäste");
}

TEST(ContractNumbers, RoundTripsEverySpelledNumberBelowHundredThousand) {
  for (std::int64_t n = 0; n <= 100'000; ++n)
    ASSERT_EQ(contract_numbers_de(slt::de::spell_number_de(n)), std::to_string(n)) << n;
}

TEST(ContractNumbers, RoundTripsLargeMultiWordNumbers) {
  for (std::int64_t n : {1'000'000LL, 1'000'001LL, 2'300'000LL, 101'000'000LL, 21'000'021LL, 1'000'000'000LL,
                         3'500'000'000LL, 999'999'999'999LL, 7'000'000'007LL})
    EXPECT_EQ(contract_numbers_de(slt::de::spell_number_de(n)), std::to_string(n)) << n;
}

TEST(ContractNumbers, ArticlesStayWords) {
  EXPECT_EQ(contract_numbers_de("ein hund und eine katze"), "ein hund und eine katze");
  EXPECT_EQ(contract_numbers_de("eins"), "1");
  EXPECT_EQ(contract_numbers_de("eine million menschen"), "1000000 menschen");
}

TEST(ContractNumbers, MalformedRunsStayWords) {
  EXPECT_EQ(contract_numbers_de("zweiundzwei"), "zweiundzwei");
  EXPECT_EQ(contract_numbers_de("hundertelf"), "111");
  EXPECT_EQ(contract_numbers_de("millionen"), "millionen");
  EXPECT_EQ(contract_numbers_de("zwei million"), "2 million");
}

TEST(ContractNumbers, AdjacentNumbersContractSeparately) {
  EXPECT_EQ(contract_numbers_de("drei vier"), "3 4");
  EXPECT_EQ(contract_numbers_de("drei komma fünf prozent"), "3 komma 5 prozent");
}

TEST(ContractNumbers, KeepsNonNumberTokenCount) {
  const std::string text = "am dritter oktober kamen eintausend gäste und zwei millionen franken";
  const auto before = slt::unicode::split_ws(text);
  const auto after = slt::unicode::split_ws(contract_numbers_de(text));
  auto non_numbers = [](const std::vector<std::string_view>& toks) {
    std::size_t n = 0;
    for (auto t : toks)
      if (!t.empty() && !(t[0] >= '0' && t[0] <= '9')) ++n;
    return n;
  };
  // "millionen" is absorbed as part of the number phrase
  EXPECT_EQ(non_numbers(after), non_numbers(before) - 3);
  EXPECT_EQ(contract_numbers_de(text), "am dritter oktober kamen 1000 gäste und 2000000 franken");
}

TEST(RestoreDisplay, SpecExamples) {
  EXPECT_EQ(restore_display("das kostet zweiundvierzig franken"), "Das kostet 42 franken.");
  EXPECT_EQ(restore_display(""), "");
  EXPECT_EQ(restore_display("hallo"), "Hallo.");
}

TEST(RestoreDisplay, UmlautAndDigitStarts) {
  EXPECT_EQ(restore_display("über den berg"), "Über den berg.");
  EXPECT_EQ(restore_display("zwölf gäste"), "12 gäste.");
  EXPECT_EQ(restore_display("ist das so?"), "Ist das so?");
}

TEST(RestoreDisplay, CapitalizesAfterSentenceBoundaries) {
  EXPECT_EQ(restore_display("guten abend. heute regnet es"), "Guten abend. Heute regnet es.");
}

TEST(RestoreDisplay, Idempotent) {
  for (const char* s : {"das kostet zweiundvierzig franken", "hallo", "", "guten abend. heute zwei gäste",
                        "eine million menschen", "über eins"}) {
    const std::string once = restore_display(s);
    EXPECT_EQ(restore_display(once), once) << s;
  }
}
