// src/report.cc

// Copyright 2026 The sdst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "sdst/report.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "sdst/dst_metrics.h"
#include "sdst/error.h"
#include "sdst/text.h"

namespace sdst {
namespace {

std::string Pct(double value) { return FormatFixed(100.0 * value, 2); }

std::string SignedPct(double value) {
  const std::string s = Pct(value);
  return value >= 0.0 && s[0] != '-' ? "+" + s : s;
}

}  // namespace

std::string RenderMarkdownReport(const ReportInputs &in) {
  if (in.corpus == nullptr || in.predictions == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "report", "corpus and predictions are required");
  }
  const Corpus &corpus = *in.corpus;
  const SlotSchema &schema = corpus.schema();
  const MetricReport sys = Evaluate(*in.predictions, corpus);
  std::optional<MetricReport> oracle;
  std::optional<ReportDelta> delta;
  if (in.oracle != nullptr) {
    oracle = Evaluate(*in.oracle, corpus);
    delta = CompareReports(*oracle, sys);
  }
  const TaxonomyCounts counts = TaxonomyReport(*in.predictions, corpus, in.taxonomy);
  const SimilarityHistogram hist =
      SimilarityDistribution(*in.predictions, corpus, in.taxonomy, in.bin_width);

  std::string md = "# " + in.title + "\n\n";
  md += "- dialogues: " + std::to_string(corpus.dialogues().size()) + "\n";
  md += "- user turns: " + std::to_string(sys.turns) + "\n";
  md += "- context source: " + std::string(TextSourceName(in.taxonomy.source)) + "\n\n";

  md += "## Overall accuracy\n\n";
  if (oracle) {
    md += "| metric | system | oracle | delta |\n|---|---:|---:|---:|\n";
    md += "| JGA | " + Pct(sys.jga) + " | " + Pct(oracle->jga) + " | " + SignedPct(delta->jga) +
          " |\n";
    md += "| STA | " + Pct(sys.sta.sta) + " | " + Pct(oracle->sta.sta) + " | " +
          SignedPct(delta->sta) + " |\n";
  } else {
    md += "| metric | system |\n|---|---:|\n";
    md += "| JGA | " + Pct(sys.jga) + " |\n";
    md += "| STA | " + Pct(sys.sta.sta) + " |\n";
  }
  md += "\nSlot-set mismatches: " + std::to_string(sys.sta.missing_slots) + " missing, " +
        std::to_string(sys.sta.spurious_slots) + " spurious";
  if (sys.sta.omission_share) md += " (omission share " + Pct(*sys.sta.omission_share) + "%)";
  md += ".\n\n";

  md += "## Slot precision\n\n";
  md += oracle ? "| slot | kind | predicted | correct | SP | oracle SP | delta |\n"
                 "|---|---|---:|---:|---:|---:|---:|\n"
               : "| slot | kind | predicted | correct | SP |\n|---|---|---:|---:|---:|\n";
  for (const SlotDef &def : schema.slots()) {
    auto it = sys.per_slot_precision.find(def.name);
    if (it == sys.per_slot_precision.end()) continue;
    const SlotPrecision &sp = it->second;
    md += "| " + def.name + " | " + std::string(SlotKindName(def.kind)) + " | " +
          std::to_string(sp.predicted_count) + " | " + std::to_string(sp.correct_count) + " | " +
          Pct(sp.precision) + " |";
    if (oracle) {
      auto o = oracle->per_slot_precision.find(def.name);
      auto d = delta->per_slot.find(def.name);
      md += o != oracle->per_slot_precision.end() ? " " + Pct(o->second.precision) + " |" : " - |";
      md += d != delta->per_slot.end() ? " " + SignedPct(d->second) + " |" : " - |";
    }
    md += "\n";
  }

  md += "\n## Slot kinds\n\n";
  md += oracle ? "| kind | SP | oracle SP | delta |\n|---|---:|---:|---:|\n"
               : "| kind | SP |\n|---|---:|\n";
  for (const auto &[kind, value] : sys.group_summary) {
    md += "| " + std::string(SlotKindName(kind)) + " | " + Pct(value) + " |";
    if (oracle) {
      auto o = oracle->group_summary.find(kind);
      auto d = delta->per_group.find(kind);
      md += o != oracle->group_summary.end() ? " " + Pct(o->second) + " |" : " - |";
      md += d != delta->per_group.end() ? " " + SignedPct(d->second) + " |" : " - |";
    }
    md += "\n";
  }

  md += "\n## Non-categorical error taxonomy\n\n| category | count | share |\n|---|---:|---:|\n";
  for (ErrorCategory c : kAllCategories) {
    const double share =
        counts.total == 0 ? 0.0 : static_cast<double>(counts[c]) / static_cast<double>(counts.total);
    md += "| " + std::string(CategoryName(c)) + " | " + std::to_string(counts[c]) + " | " +
          Pct(share) + " |\n";
  }
  md += "| total | " + std::to_string(counts.total) + " | |\n";

  md += "\n## Similarity of context-missing values\n\n";
  md += "Closest context n-gram score for values absent from the tracker input.\n\n";
  md += "| bin | corrected | uncorrected |\n|---|---:|---:|\n";
  for (std::size_t i = 0; i < hist.NumBins(); ++i) {
    if (hist.corrected[i] == 0 && hist.uncorrected[i] == 0) continue;
    const double low = static_cast<double>(i) * hist.bin_width;
    const double high = std::min(100.0, low + hist.bin_width);
    const char *close = i + 1 == hist.NumBins() ? "]" : ")";
    const int digits = hist.bin_width == std::floor(hist.bin_width) ? 0 : 2;
    md += "| [" + FormatFixed(low, digits) + ", " + FormatFixed(high, digits) + close + " | " +
          std::to_string(hist.corrected[i]) + " | " + std::to_string(hist.uncorrected[i]) + " |\n";
  }
  if (hist.rows.empty()) md += "| none | 0 | 0 |\n";
  return md;
}

}  // namespace sdst
