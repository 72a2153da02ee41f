#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "slt/stats.hpp"

using namespace slt;

namespace {

Corpus corpus_of(const std::vector<std::pair<Source, std::string>>& rows) {
  Corpus c;
  int i = 0;
  for (const auto& [src, text] : rows) c.utterances.push_back({"u" + std::to_string(i++), text, src});
  return c;
}

}  // namespace

TEST(VocabStats, Example) {
  const auto st = vocab_stats(corpus_of({{Source::SRF, "a b a"}, {Source::SRF, "c"}}));
  EXPECT_EQ(st.total.vocabulary, 3);
  EXPECT_EQ(st.total.singletons, 2);
  EXPECT_EQ(st.total.tokens, 4);
  EXPECT_EQ(st.per_source.at(Source::SRF), st.total);
}

TEST(VocabStats, EmptyCorpus) {
  const auto st = vocab_stats(Corpus{});
  EXPECT_TRUE(st.per_source.empty());
  EXPECT_EQ(st.total, SliceStats{});
}

TEST(VocabStats, SharedTypeCountsOnceInTotal) {
  const auto st = vocab_stats(corpus_of({{Source::SRF, "x y"}, {Source::FN, "x z"}}));
  EXPECT_EQ(st.per_source.at(Source::SRF).vocabulary, 2);
  EXPECT_EQ(st.per_source.at(Source::FN).vocabulary, 2);
  EXPECT_EQ(st.total.vocabulary, 3);
  // x is a singleton in each source but not in the total
  EXPECT_EQ(st.per_source.at(Source::SRF).singletons, 2);
  EXPECT_EQ(st.total.singletons, 2);
}

TEST(VocabStats, HoursAndVideos) {
  Corpus c;
  c.utterances.push_back({"a", "x", Source::SRF, 1800.0, "v1"});
  c.utterances.push_back({"b", "y", Source::SRF, 1800.0, "v1"});
  c.utterances.push_back({"c", "z", Source::FN, 3600.0, "v2"});
  const auto st = vocab_stats(c);
  EXPECT_DOUBLE_EQ(st.total.hours, 2.0);
  EXPECT_EQ(st.total.video_count, 2);
  EXPECT_EQ(st.per_source.at(Source::SRF).video_count, 1);
}

TEST(VocabStats, MatchesFrequencyOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Corpus c;
    std::map<Source, std::vector<std::string>> by_src;
    std::vector<std::string> all;
    const std::size_t n = rng() % 15;
    const auto texts = oracle::random_corpus(rng, n, 8, 20);
    for (std::size_t i = 0; i < n; ++i) {
      const Source s = static_cast<Source>(rng() % 4);
      c.utterances.push_back({std::to_string(i), texts[i], s});
      by_src[s].push_back(texts[i]);
      all.push_back(texts[i]);
    }
    const auto st = vocab_stats(c);
    const auto check = [](const SliceStats& got, const std::vector<std::string>& t) {
      const auto f = oracle::frequencies(t);
      std::int64_t singles = 0;
      for (const auto& [w, k] : f) singles += k == 1;
      EXPECT_EQ(got.vocabulary, static_cast<std::int64_t>(f.size()));
      EXPECT_EQ(got.singletons, singles);
    };
    check(st.total, all);
    std::int64_t sum = 0;
    for (const auto& [s, t] : by_src) {
      check(st.per_source.at(s), t);
      sum += st.per_source.at(s).vocabulary;
    }
    EXPECT_LE(st.total.vocabulary, sum);
  }
}

TEST(Frequencies, ShardMergeIsAssociative) {
  FrequencyMap a, b, c, whole;
  add_frequencies(a, "x y z");
  add_frequencies(b, "x x w");
  add_frequencies(c, "w q");
  for (auto t : {"x y z", "x x w", "w q"}) add_frequencies(whole, t);
  FrequencyMap left = a;
  merge_frequencies(left, b);
  merge_frequencies(left, c);
  FrequencyMap bc = b;
  merge_frequencies(bc, c);
  FrequencyMap right = a;
  merge_frequencies(right, bc);
  EXPECT_EQ(left, whole);
  EXPECT_EQ(right, whole);
}

TEST(CompareStats, ReductionAndIncrease) {
  const auto d = make_delta("Total", "vocabulary", 34783, 22840);
  EXPECT_EQ(d.delta, -11943);
  EXPECT_NEAR(*d.percent, -34.3, 0.05);
  EXPECT_EQ(format_delta(d), "-11943 (-34.3%)");
  EXPECT_FALSE(d.increased);
  const auto up = make_delta("SRF", "singletons", 10, 12);
  EXPECT_EQ(format_delta(up), "+2 (+20.0%)");
  EXPECT_TRUE(up.increased);
  EXPECT_FALSE(make_delta("FN", "videos", 0, 3).percent);
}

TEST(CompareStats, RowsCoverEverySliceAndTable) {
  const auto raw = vocab_stats(corpus_of({{Source::SRF, "a b"}, {Source::FN, "c"}}));
  const auto clean = vocab_stats(corpus_of({{Source::SRF, "a"}}));
  const auto rep = compare_stats(raw, clean);
  EXPECT_EQ(rep.rows.size(), 12u);  // SRF, FN, Total x 4 fields
  const auto table = format_reduction_table(rep);
  EXPECT_NE(table.find("vocabulary"), std::string::npos);
  EXPECT_NE(format_stats_table(raw).find("Singletons"), std::string::npos);
  EXPECT_EQ(to_json(rep)["rows"].size(), 12u);
}
