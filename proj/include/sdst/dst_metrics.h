// include/sdst/dst_metrics.h

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

#ifndef SDST_DST_METRICS_H_
#define SDST_DST_METRICS_H_

// Joint-goal accuracy, slot-type accuracy and per-slot value precision.
//
// A gold user turn without a prediction is scored as an empty predicted
// state. STA is a turn-level exact match of slot-name sets; SP divides by the
// number of predictions of a slot, not by gold occurrences.

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "sdst/corpus.h"

namespace sdst {

struct StaResult {
  double sta = 0.0;
  std::size_t missing_slots = 0;   // gold slot absent from prediction
  std::size_t spurious_slots = 0;  // predicted slot absent from gold
  // missing / (missing + spurious); nullopt when both are zero.
  std::optional<double> omission_share;
};

struct SlotPrecision {
  double precision = 0.0;
  std::size_t predicted_count = 0;
  std::size_t correct_count = 0;
};

using SlotPrecisionTable = std::map<std::string, SlotPrecision>;
using GroupSummary = std::map<SlotKind, double>;

struct MetricReport {
  std::size_t turns = 0;
  double jga = 0.0;
  StaResult sta;
  SlotPrecisionTable per_slot_precision;  // slots never predicted are absent
  GroupSummary group_summary;             // kinds without any defined slot are absent
};

double Jga(const PredictionSet &preds, const Corpus &corpus);
StaResult Sta(const PredictionSet &preds, const Corpus &corpus);
SlotPrecisionTable SlotPrecisionBreakdown(const PredictionSet &preds, const Corpus &corpus);
GroupSummary SummarizeGroups(const SlotPrecisionTable &table, const SlotSchema &schema);

MetricReport Evaluate(const PredictionSet &preds, const Corpus &corpus);

// Per-slot and per-kind differences `system - reference` over the slots and
// kinds defined in both reports.
struct ReportDelta {
  std::map<std::string, double> per_slot;
  std::map<SlotKind, double> per_group;
  double jga = 0.0;
  double sta = 0.0;
};
ReportDelta CompareReports(const MetricReport &reference, const MetricReport &system);

std::string MetricReportToJson(const MetricReport &report, const SlotSchema &schema);
// slot,kind,predicted_count,correct_count,precision
std::string SlotPrecisionToCsv(const MetricReport &report, const SlotSchema &schema);

}  // namespace sdst

#endif  // SDST_DST_METRICS_H_
