// include/sdst/error_taxonomy.h

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

#ifndef SDST_ERROR_TAXONOMY_H_
#define SDST_ERROR_TAXONOMY_H_

// Classification of non-categorical slot predictions by whether the value in
// the predicted state matches gold (DS) and whether the gold value appears in
// the dialogue history the tracker consumed (Context), plus the similarity
// distribution of the context-no-match cases and the context-ablation inputs.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sdst/corpus.h"
#include "sdst/state_codec.h"
#include "sdst/text_metrics.h"

namespace sdst {

enum class ErrorCategory {
  kDsMatchCtxMatch,
  kDsMatchCtxNoMatch,
  kDsNoMatchCtxMatch,
  kDsNoMatchCtxNoMatch,
  kOmitted,
};

inline constexpr std::array<ErrorCategory, 5> kAllCategories = {
    ErrorCategory::kDsMatchCtxMatch, ErrorCategory::kDsMatchCtxNoMatch,
    ErrorCategory::kDsNoMatchCtxMatch, ErrorCategory::kDsNoMatchCtxNoMatch,
    ErrorCategory::kOmitted};

std::string_view CategoryName(ErrorCategory category);

// Throws WrongSlotKind unless `slot` is non-categorical in `schema`.
ErrorCategory CategorizeValueError(const SlotSchema &schema, std::string_view slot,
                                   std::string_view gold_value, const DialogueState &predicted,
                                   std::string_view context);

struct TaxonomyCounts {
  std::array<std::size_t, 5> counts{};  // indexed like kAllCategories
  std::size_t total = 0;

  std::size_t operator[](ErrorCategory c) const { return counts[static_cast<std::size_t>(c)]; }
};

// One evaluated (user turn, gold non-categorical slot) pair.
struct TaxonomyInstance {
  std::string dialogue_id;
  std::size_t user_turn = 0;
  std::string slot;
  std::string gold_value;
  std::string predicted_value;  // empty when omitted
  ErrorCategory category = ErrorCategory::kOmitted;
};

struct TaxonomyOptions {
  TextSource source = TextSource::kHyp;
  InputBudget budget;
};

std::vector<TaxonomyInstance> ClassifyInstances(const PredictionSet &preds, const Corpus &corpus,
                                                const TaxonomyOptions &options);
TaxonomyCounts TaxonomyReport(const PredictionSet &preds, const Corpus &corpus,
                              const TaxonomyOptions &options);

std::string TaxonomyCountsToCsv(const TaxonomyCounts &counts);
std::string TaxonomyCountsToJson(const TaxonomyCounts &counts);

struct SimilarityRow {
  std::string dialogue_id;
  std::size_t user_turn = 0;
  std::string slot;
  std::string gold_value;
  SimilarityScore similarity;
  bool corrected = false;  // DS match
};

struct SimilarityHistogram {
  double bin_width = 5.0;
  std::vector<std::size_t> corrected;    // one count per bin over [0, 100]
  std::vector<std::size_t> uncorrected;
  std::vector<SimilarityRow> rows;

  std::size_t NumBins() const { return corrected.size(); }
};

// Context-no-match instances (omissions excluded), scored with the closest
// n-gram of the tracker's context; the last bin is closed at 100.
SimilarityHistogram SimilarityDistribution(const PredictionSet &preds, const Corpus &corpus,
                                           const TaxonomyOptions &options,
                                           double bin_width = 5.0);

// bin_low,bin_high,corrected_count,uncorrected_count
std::string HistogramToCsv(const SimilarityHistogram &hist);
// dialogue_id,user_turn,slot,gold_value,best_ngram,score,corrected
std::string SimilarityRowsToCsv(const SimilarityHistogram &hist);

struct ContextAblation {
  std::string condition_a;  // every user turn as hypothesis
  std::string condition_b;  // gold prior user turns, hypothesis current turn
};

// Model-input JSONL for both conditions, line-aligned.
ContextAblation BuildContextAblation(const Corpus &corpus, const InputBudget &budget);

}  // namespace sdst

#endif  // SDST_ERROR_TAXONOMY_H_
