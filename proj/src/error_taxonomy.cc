// src/error_taxonomy.cc

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

#include "sdst/error_taxonomy.h"

#include <cmath>

#include "json.hpp"
#include "sdst/error.h"
#include "sdst/text.h"

namespace sdst {

std::string_view CategoryName(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kDsMatchCtxMatch: return "ds_match_ctx_match";
    case ErrorCategory::kDsMatchCtxNoMatch: return "ds_match_ctx_no_match";
    case ErrorCategory::kDsNoMatchCtxMatch: return "ds_no_match_ctx_match";
    case ErrorCategory::kDsNoMatchCtxNoMatch: return "ds_no_match_ctx_no_match";
    case ErrorCategory::kOmitted: return "omitted";
  }
  return "";
}

ErrorCategory CategorizeValueError(const SlotSchema &schema, std::string_view slot,
                                   std::string_view gold_value, const DialogueState &predicted,
                                   std::string_view context) {
  const SlotDef *def = schema.Find(slot);
  if (def == nullptr || def->kind != SlotKind::kNonCategorical) {
    throw Error(ErrorCode::kWrongSlotKind, std::string(slot), "slot is not non-categorical");
  }
  const std::string *pred = predicted.Get(slot);
  if (pred == nullptr) return ErrorCategory::kOmitted;
  const bool ds_match = *pred == Canonicalize(gold_value);
  const bool ctx_match = ContainsAtWordBoundary(context, gold_value);
  if (ds_match) return ctx_match ? ErrorCategory::kDsMatchCtxMatch : ErrorCategory::kDsMatchCtxNoMatch;
  return ctx_match ? ErrorCategory::kDsNoMatchCtxMatch : ErrorCategory::kDsNoMatchCtxNoMatch;
}

namespace {

const DialogueState kEmptyState;

// Calls fn(dialogue, user_turn, gold_state, predicted_state, context) for
// every user turn with at least one non-categorical gold slot.
template <typename Fn>
void ForEachNonCategorical(const PredictionSet &preds, const Corpus &corpus,
                           const TaxonomyOptions &options, Fn &&fn) {
  const SlotSchema &schema = corpus.schema();
  for (const Dialogue &d : corpus.dialogues()) {
    const std::size_t n = d.NumUserTurns();
    for (std::size_t k = 0; k < n; ++k) {
      const DialogueState &gold = *d.UserTurn(k).gold_state;
      bool any = false;
      for (const auto &[slot, value] : gold.entries()) {
        const SlotDef *def = schema.Find(slot);
        any = any || (def && def->kind == SlotKind::kNonCategorical);
      }
      if (!any) continue;
      const DialogueState *pred = preds.Find(d.id, k);
      const std::string context = BuildModelInput(d, k, options.source, options.budget);
      for (const auto &[slot, value] : gold.entries()) {
        const SlotDef *def = schema.Find(slot);
        if (def == nullptr || def->kind != SlotKind::kNonCategorical) continue;
        fn(d, k, slot, value, pred ? *pred : kEmptyState, context);
      }
    }
  }
}

}  // namespace

std::vector<TaxonomyInstance> ClassifyInstances(const PredictionSet &preds, const Corpus &corpus,
                                                const TaxonomyOptions &options) {
  std::vector<TaxonomyInstance> out;
  ForEachNonCategorical(preds, corpus, options,
                        [&](const Dialogue &d, std::size_t k, const std::string &slot,
                            const std::string &gold, const DialogueState &pred,
                            const std::string &context) {
                          TaxonomyInstance inst;
                          inst.dialogue_id = d.id;
                          inst.user_turn = k;
                          inst.slot = slot;
                          inst.gold_value = gold;
                          if (const std::string *p = pred.Get(slot)) inst.predicted_value = *p;
                          inst.category =
                              CategorizeValueError(corpus.schema(), slot, gold, pred, context);
                          out.push_back(std::move(inst));
                        });
  return out;
}

TaxonomyCounts TaxonomyReport(const PredictionSet &preds, const Corpus &corpus,
                              const TaxonomyOptions &options) {
  TaxonomyCounts counts;
  for (const TaxonomyInstance &inst : ClassifyInstances(preds, corpus, options)) {
    ++counts.counts[static_cast<std::size_t>(inst.category)];
    ++counts.total;
  }
  return counts;
}

std::string TaxonomyCountsToCsv(const TaxonomyCounts &counts) {
  std::string out = "category,count\n";
  for (ErrorCategory c : kAllCategories) {
    out += std::string(CategoryName(c)) + "," + std::to_string(counts[c]) + "\n";
  }
  out += "total," + std::to_string(counts.total) + "\n";
  return out;
}

std::string TaxonomyCountsToJson(const TaxonomyCounts &counts) {
  nlohmann::ordered_json doc;
  for (ErrorCategory c : kAllCategories) doc[std::string(CategoryName(c))] = counts[c];
  doc["total"] = counts.total;
  return doc.dump(2) + "\n";
}

SimilarityHistogram SimilarityDistribution(const PredictionSet &preds, const Corpus &corpus,
                                           const TaxonomyOptions &options, double bin_width) {
  if (!(bin_width > 0.0 && bin_width <= 100.0)) {
    throw Error(ErrorCode::kInvalidArgument, "bin_width", "bin width must lie in (0, 100]");
  }
  SimilarityHistogram hist;
  hist.bin_width = bin_width;
  const auto bins = static_cast<std::size_t>(std::ceil(100.0 / bin_width - 1e-9));
  hist.corrected.assign(bins, 0);
  hist.uncorrected.assign(bins, 0);

  ForEachNonCategorical(
      preds, corpus, options,
      [&](const Dialogue &d, std::size_t k, const std::string &slot, const std::string &gold,
          const DialogueState &pred, const std::string &context) {
        const ErrorCategory cat = CategorizeValueError(corpus.schema(), slot, gold, pred, context);
        if (cat != ErrorCategory::kDsMatchCtxNoMatch && cat != ErrorCategory::kDsNoMatchCtxNoMatch) {
          return;
        }
        SimilarityRow row;
        row.dialogue_id = d.id;
        row.user_turn = k;
        row.slot = slot;
        row.gold_value = gold;
        row.similarity = BestNgramSimilarity(gold, context);
        row.corrected = cat == ErrorCategory::kDsMatchCtxNoMatch;
        auto bin = static_cast<std::size_t>(std::floor(row.similarity.score / bin_width));
        bin = std::min(bin, bins - 1);
        ++(row.corrected ? hist.corrected : hist.uncorrected)[bin];
        hist.rows.push_back(std::move(row));
      });
  return hist;
}

std::string HistogramToCsv(const SimilarityHistogram &hist) {
  std::string out = "bin_low,bin_high,corrected_count,uncorrected_count\n";
  for (std::size_t i = 0; i < hist.NumBins(); ++i) {
    const double low = static_cast<double>(i) * hist.bin_width;
    const double high = std::min(100.0, low + hist.bin_width);
    out += FormatFixed(low, 2) + "," + FormatFixed(high, 2) + "," +
           std::to_string(hist.corrected[i]) + "," + std::to_string(hist.uncorrected[i]) + "\n";
  }
  return out;
}

std::string SimilarityRowsToCsv(const SimilarityHistogram &hist) {
  std::string out = "dialogue_id,user_turn,slot,gold_value,best_ngram,score,corrected\n";
  for (const SimilarityRow &r : hist.rows) {
    out += CsvField(r.dialogue_id) + "," + std::to_string(r.user_turn) + "," + r.slot + "," +
           CsvField(r.gold_value) + "," + CsvField(r.similarity.best_ngram) + "," +
           FormatFixed(r.similarity.score, 4) + "," + (r.corrected ? "1" : "0") + "\n";
  }
  return out;
}

ContextAblation BuildContextAblation(const Corpus &corpus, const InputBudget &budget) {
  return ContextAblation{SerializeModelInputs(corpus, TextSource::kHyp, budget),
                         SerializeModelInputs(corpus, TextSource::kOracleContext, budget)};
}

}  // namespace sdst
