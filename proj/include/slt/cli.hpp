#pragma once

// The `slt` command line: one subcommand per toolkit stage, composed through files.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "slt/cleaning.hpp"
#include "slt/corpus.hpp"
#include "slt/error.hpp"
#include "slt/frameplan.hpp"
#include "slt/itn.hpp"
#include "slt/metrics.hpp"
#include "slt/normalize.hpp"
#include "slt/stats.hpp"
#include "slt/stoplist.hpp"

namespace slt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

namespace detail {

inline void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    out << content;
  else
    slt::detail::write_file(path, content);
}

inline std::string jsonl(const nlohmann::json& j) { return j.dump() + "\n"; }

inline const std::map<std::string, Smoothing> kSmoothing{{"none", Smoothing::NONE}, {"exp", Smoothing::EXP}};
inline const std::map<std::string, ReducedSide> kSide{{"both", ReducedSide::BOTH}, {"hyp", ReducedSide::HYP}};

struct Options {
  // shared
  bool json = false;
  std::string out;
  // clean
  std::string corpus, report, config;
  // normalize
  std::string segments, abbrev;
  bool no_abbrev = false, no_punct = false, no_lower = false, no_numbers = false, no_dates = false;
  // stats
  std::string clean_corpus;
  // bleu family
  std::string hyp, ref, stoplist;
  Smoothing smoothing = Smoothing::NONE;
  ReducedSide side = ReducedSide::BOTH;
  std::vector<std::string> candidates;
  // itn
  std::string in;
  bool contract_only = false;
  // plan
  std::string manifest, id = "video";
  std::optional<std::int64_t> frames, width, height;
  std::int64_t window = 64, stride = 8;
  double pad_lr = 0.20, pad_tb = 0.075;
  int target = 224;
};

inline void add_smoothing(CLI::App* sub, Options& o) {
  sub->add_option("--smoothing", o.smoothing, "none | exp")
      ->transform(CLI::CheckedTransformer(kSmoothing, CLI::ignore_case));
}

inline std::string run_clean(const Options& o, std::ostream& out) {
  const Corpus corpus = load_corpus(o.corpus);
  const CleanConfig cfg = o.config.empty() ? CleanConfig{} : CleanConfig::load(o.config);
  const CleanResult result = clean_corpus(corpus, cfg);
  emit(out, o.out, serialize_corpus(result.corpus));
  if (!o.report.empty()) {
    std::string rep;
    for (const auto& oc : result.outcomes) rep += jsonl(to_json(oc));
    slt::detail::write_file(o.report, rep);
  }
  std::map<Verdict, std::int64_t> counts{{Verdict::KEPT, 0}, {Verdict::EDITED, 0}, {Verdict::DROPPED, 0}};
  for (const auto& oc : result.outcomes) ++counts[oc.verdict];
  if (o.json)
    return jsonl({{"kept", counts[Verdict::KEPT]}, {"edited", counts[Verdict::EDITED]},
                  {"dropped", counts[Verdict::DROPPED]}});
  return "kept " + std::to_string(counts[Verdict::KEPT]) + ", edited " + std::to_string(counts[Verdict::EDITED]) +
         ", dropped " + std::to_string(counts[Verdict::DROPPED]) + "\n";
}

inline void run_normalize(const Options& o, std::ostream& out) {
  const AbbrevTable table = o.abbrev.empty() ? AbbrevTable::defaults() : AbbrevTable::load(o.abbrev);
  NormConfig cfg;
  cfg.expand_abbrev = !o.no_abbrev;
  cfg.strip_punct = !o.no_punct;
  cfg.lowercase = !o.no_lower;
  cfg.expand_numbers = !o.no_numbers;
  cfg.expand_dates = !o.no_dates;
  if (!o.corpus.empty()) {
    emit(out, o.out, serialize_corpus(normalize_corpus(load_corpus(o.corpus), table, cfg)));
    return;
  }
  SegmentFile segs = load_segments(o.segments);
  for (auto& l : segs.lines) l = normalize_text(l, table, cfg);
  emit(out, o.out, serialize_segments(segs));
}

inline std::string run_stats(const Options& o) {
  const CorpusStats raw = vocab_stats(load_corpus(o.corpus));
  if (o.clean_corpus.empty()) return o.json ? jsonl(to_json(raw)) : format_stats_table(raw);
  const CorpusStats clean = vocab_stats(load_corpus(o.clean_corpus));
  const ReductionReport rep = compare_stats(raw, clean);
  if (o.json) return jsonl({{"raw", to_json(raw)}, {"clean", to_json(clean)}, {"comparison", to_json(rep)}});
  return "raw\n" + format_stats_table(raw) + "\nclean\n" + format_stats_table(clean) + "\n" +
         format_reduction_table(rep);
}

inline std::string render(const BleuScore& b, bool json) { return json ? jsonl(to_json(b)) : format_bleu(b) + "\n"; }

inline std::string run_bleu(const Options& o, bool reduced) {
  const SegmentFile hyps = load_segments(o.hyp);
  const SegmentFile refs = load_segments(o.ref);
  if (!reduced) return render(bleu(hyps, refs, o.smoothing), o.json);
  return render(reduced_bleu(hyps, refs, StopList::resolve(o.stoplist), o.smoothing, o.side), o.json);
}

inline std::string run_select(const Options& o) {
  const SegmentFile refs = load_segments(o.ref);
  std::vector<Candidate> cands;
  for (const auto& spec : o.candidates) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--candidate", "expected NAME=PATH, got '" + spec + "'");
    cands.push_back({spec.substr(0, eq), load_segments(spec.substr(eq + 1))});
  }
  const SelectionReport rep = select_checkpoint(cands, refs, StopList::resolve(o.stoplist), o.smoothing, o.side);
  if (o.json) return jsonl(to_json(rep));
  std::string s;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-20s %10s %10s %10s %10s\n", "candidate", "BLEU", "RedBLEU", "stopwords", "fraction");
  s += buf;
  for (const auto& c : rep.candidates) {
    std::snprintf(buf, sizeof buf, "%-20s %10.2f %10.2f %10lld %10.4f\n", c.name.c_str(), c.standard.score,
                  c.reduced.score, static_cast<long long>(c.stopwords.count), c.stopwords.fraction);
    s += buf;
  }
  s += "winner: " + rep.winner + "\n";
  return s;
}

inline void run_itn(const Options& o, std::ostream& out) {
  SegmentFile segs = load_segments(o.in);
  for (auto& l : segs.lines) l = o.contract_only ? itn::contract_numbers_de(l) : itn::restore_display(l);
  emit(out, o.out, serialize_segments(segs));
}

inline nlohmann::json plan_line(const std::string& id, std::int64_t frames, std::optional<std::int64_t> w,
                                std::optional<std::int64_t> h, const frames::PadSpec& pad,
                                const frames::WindowSpec& win) {
  const frames::WindowPlan plan =
      (w && h) ? frames::plan_video(frames, *w, *h, pad, win) : frames::plan_windows(frames, win);
  nlohmann::json j = to_json(plan);
  j["id"] = id;
  j["mouth"] = to_json(frames::plan_mouth(frames));
  return j;
}

inline void run_plan(const Options& o, std::ostream& out) {
  frames::PadSpec pad;
  pad.left_frac = pad.right_frac = o.pad_lr;
  pad.top_frac = pad.bottom_frac = o.pad_tb;
  pad.target_w = pad.target_h = o.target;
  const frames::WindowSpec win{o.window, o.stride};
  std::string result;
  if (!o.manifest.empty()) {
    const auto lines = slt::detail::split_lines(slt::detail::read_file(o.manifest));
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (unicode::trim(lines[i]).empty()) continue;
      const std::string where = "manifest line " + std::to_string(i + 1);
      nlohmann::json m;
      try {
        m = nlohmann::json::parse(lines[i]);
      } catch (const nlohmann::json::parse_error& e) {
        throw DataError(where + ": malformed JSON (" + e.what() + ")");
      }
      if (!m.is_object() || !m.contains("id") || !m["id"].is_string() || !m.contains("frame_count") ||
          !m["frame_count"].is_number_integer())
        throw DataError(where + ": needs string 'id' and integer 'frame_count'");
      std::optional<std::int64_t> w, h;
      if (m.contains("width") && m.contains("height")) {
        if (!m["width"].is_number_integer() || !m["height"].is_number_integer())
          throw DataError(where + ": 'width' and 'height' must be integers");
        w = m["width"].get<std::int64_t>();
        h = m["height"].get<std::int64_t>();
      }
      try {
        result += jsonl(plan_line(m["id"].get<std::string>(), m["frame_count"].get<std::int64_t>(), w, h, pad, win));
      } catch (const DataError& e) {
        throw DataError(where + ": " + e.what());
      }
    }
  } else {
    result = jsonl(plan_line(o.id, *o.frames, o.width, o.height, pad, win));
  }
  emit(out, o.out, result);
}

}  // namespace detail

/// Parses argv and runs one subcommand, writing to the given streams.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Corpus cleaning, normalization and BLEU evaluation for sign language translation", "slt"};
  app.require_subcommand(1);
  detail::Options o;

  auto* clean = app.add_subcommand("clean", "Drop or strip subtitle noise from a JSONL corpus");
  clean->add_option("--corpus", o.corpus, "Input corpus (JSONL)")->required();
  clean->add_option("--out", o.out, "Cleaned corpus (JSONL)")->required();
  clean->add_option("--report", o.report, "Per-utterance outcome report (JSONL)");
  clean->add_option("--config", o.config, "Cleaning config (JSON)");
  clean->add_flag("--json", o.json, "Summary as JSON");

  auto* norm = app.add_subcommand("normalize", "Normalize corpus or segment text");
  auto* norm_in = norm->add_option_group("input");
  norm_in->add_option("--corpus", o.corpus, "Input corpus (JSONL)");
  norm_in->add_option("--segments", o.segments, "Input segment file (one per line)");
  norm_in->require_option(1);
  norm->add_option("--out", o.out, "Output file (default stdout)");
  norm->add_option("--abbrev", o.abbrev, "Abbreviation table (TSV)");
  norm->add_flag("--no-abbrev", o.no_abbrev);
  norm->add_flag("--no-punct", o.no_punct);
  norm->add_flag("--no-lowercase", o.no_lower);
  norm->add_flag("--no-numbers", o.no_numbers);
  norm->add_flag("--no-dates", o.no_dates);

  auto* stats = app.add_subcommand("stats", "Vocabulary, singleton and duration statistics");
  stats->add_option("--corpus", o.corpus, "Corpus (JSONL); the raw side when --clean is given")->required();
  stats->add_option("--clean", o.clean_corpus, "Cleaned corpus to compare against");
  stats->add_flag("--json", o.json);

  auto* bleu_cmd = app.add_subcommand("bleu", "Corpus BLEU");
  auto* rbleu_cmd = app.add_subcommand("reduced-bleu", "BLEU after removing stop words");
  for (auto* sub : {bleu_cmd, rbleu_cmd}) {
    sub->add_option("--hyp", o.hyp, "Hypothesis segments")->required();
    sub->add_option("--ref", o.ref, "Reference segments")->required();
    detail::add_smoothing(sub, o);
    sub->add_flag("--json", o.json);
  }
  rbleu_cmd->add_option("--stoplist", o.stoplist, "Stop list, one word per line (default: $SLT_STOPLIST or built-in)");
  rbleu_cmd->add_option("--reduced-side", o.side, "both | hyp")
      ->transform(CLI::CheckedTransformer(detail::kSide, CLI::ignore_case));

  auto* select = app.add_subcommand("select", "Pick the checkpoint with the best reduced BLEU");
  select->add_option("--ref", o.ref, "Reference segments")->required();
  select->add_option("--candidate", o.candidates, "NAME=PATH, repeatable")->required();
  select->add_option("--stoplist", o.stoplist);
  select->add_option("--reduced-side", o.side, "both | hyp")
      ->transform(CLI::CheckedTransformer(detail::kSide, CLI::ignore_case));
  detail::add_smoothing(select, o);
  select->add_flag("--json", o.json);

  auto* itn_cmd = app.add_subcommand("itn", "Restore display format (digits, capitals, final period)");
  itn_cmd->add_option("--in", o.in, "Normalized segments")->required();
  itn_cmd->add_option("--out", o.out, "Output (default stdout)");
  itn_cmd->add_flag("--contract-only", o.contract_only, "Only turn number words into digits");

  auto* plan = app.add_subcommand("plan", "Feature-extraction window geometry");
  auto* plan_in = plan->add_option_group("input");
  plan_in->add_option("--manifest", o.manifest, "JSONL of {id, frame_count, width, height}");
  plan_in->add_option("--frames", o.frames, "Frame count of a single video")->check(CLI::NonNegativeNumber);
  plan_in->require_option(1);
  plan->add_option("--id", o.id, "Id for --frames output");
  plan->add_option("--width", o.width)->check(CLI::PositiveNumber);
  plan->add_option("--height", o.height)->check(CLI::PositiveNumber);
  plan->add_option("--window", o.window)->check(CLI::PositiveNumber);
  plan->add_option("--stride", o.stride)->check(CLI::PositiveNumber);
  plan->add_option("--pad-lr", o.pad_lr, "Left/right padding fraction")->check(CLI::NonNegativeNumber);
  plan->add_option("--pad-tb", o.pad_tb, "Top/bottom padding fraction")->check(CLI::NonNegativeNumber);
  plan->add_option("--target", o.target, "Square target resolution")->check(CLI::PositiveNumber);
  plan->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
    if (plan->parsed() && o.frames && (o.width.has_value() != o.height.has_value()))
      throw CLI::ValidationError("--width/--height", "give both or neither");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (clean->parsed()) out << detail::run_clean(o, out);
    else if (norm->parsed()) detail::run_normalize(o, out);
    else if (stats->parsed()) out << detail::run_stats(o);
    else if (bleu_cmd->parsed()) out << detail::run_bleu(o, false);
    else if (rbleu_cmd->parsed()) out << detail::run_bleu(o, true);
    else if (select->parsed()) out << detail::run_select(o);
    else if (itn_cmd->parsed()) detail::run_itn(o, out);
    else if (plan->parsed()) detail::run_plan(o, out);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace slt::cli
