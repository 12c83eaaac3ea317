// src/dst_metrics.cc

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

#include "sdst/dst_metrics.h"

#include <functional>

#include "json.hpp"
#include "sdst/text.h"

namespace sdst {

namespace {

const DialogueState kEmptyState;

// Calls fn(gold, predicted) for every gold user turn.
void ForEachTurn(const PredictionSet &preds, const Corpus &corpus,
                 const std::function<void(const DialogueState &, const DialogueState &)> &fn) {
  for (const Dialogue &d : corpus.dialogues()) {
    std::size_t k = 0;
    for (const Turn &t : d.turns) {
      if (!t.is_user()) continue;
      const DialogueState *pred = preds.Find(d.id, k++);
      fn(*t.gold_state, pred ? *pred : kEmptyState);
    }
  }
}

bool SameSlots(const DialogueState &a, const DialogueState &b) {
  if (a.size() != b.size()) return false;
  auto ia = a.entries().begin();
  for (auto ib = b.entries().begin(); ib != b.entries().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
  }
  return true;
}

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

double Jga(const PredictionSet &preds, const Corpus &corpus) {
  std::size_t turns = 0, exact = 0;
  ForEachTurn(preds, corpus, [&](const DialogueState &gold, const DialogueState &pred) {
    ++turns;
    exact += gold == pred ? 1 : 0;
  });
  return Ratio(exact, turns);
}

StaResult Sta(const PredictionSet &preds, const Corpus &corpus) {
  StaResult result;
  std::size_t turns = 0, matched = 0;
  ForEachTurn(preds, corpus, [&](const DialogueState &gold, const DialogueState &pred) {
    ++turns;
    if (SameSlots(gold, pred)) {
      ++matched;
      return;
    }
    for (const auto &[slot, value] : gold.entries()) {
      if (!pred.Contains(slot)) ++result.missing_slots;
    }
    for (const auto &[slot, value] : pred.entries()) {
      if (!gold.Contains(slot)) ++result.spurious_slots;
    }
  });
  result.sta = Ratio(matched, turns);
  const std::size_t errors = result.missing_slots + result.spurious_slots;
  if (errors > 0) result.omission_share = Ratio(result.missing_slots, errors);
  return result;
}

SlotPrecisionTable SlotPrecisionBreakdown(const PredictionSet &preds, const Corpus &corpus) {
  SlotPrecisionTable table;
  ForEachTurn(preds, corpus, [&](const DialogueState &gold, const DialogueState &pred) {
    for (const auto &[slot, value] : pred.entries()) {
      SlotPrecision &sp = table[slot];
      ++sp.predicted_count;
      const std::string *g = gold.Get(slot);
      if (g != nullptr && *g == value) ++sp.correct_count;
    }
  });
  for (auto &[slot, sp] : table) sp.precision = Ratio(sp.correct_count, sp.predicted_count);
  return table;
}

GroupSummary SummarizeGroups(const SlotPrecisionTable &table, const SlotSchema &schema) {
  std::map<SlotKind, std::pair<double, std::size_t>> sums;
  for (const auto &[slot, sp] : table) {
    const SlotDef *def = schema.Find(slot);
    if (def == nullptr || sp.predicted_count == 0) continue;
    auto &[sum, count] = sums[def->kind];
    sum += sp.precision;
    ++count;
  }
  GroupSummary summary;
  for (const auto &[kind, acc] : sums) {
    summary[kind] = acc.first / static_cast<double>(acc.second);
  }
  return summary;
}

MetricReport Evaluate(const PredictionSet &preds, const Corpus &corpus) {
  MetricReport report;
  report.turns = corpus.NumUserTurns();
  report.jga = Jga(preds, corpus);
  report.sta = Sta(preds, corpus);
  report.per_slot_precision = SlotPrecisionBreakdown(preds, corpus);
  report.group_summary = SummarizeGroups(report.per_slot_precision, corpus.schema());
  return report;
}

ReportDelta CompareReports(const MetricReport &reference, const MetricReport &system) {
  ReportDelta delta;
  delta.jga = system.jga - reference.jga;
  delta.sta = system.sta.sta - reference.sta.sta;
  for (const auto &[slot, sp] : system.per_slot_precision) {
    auto it = reference.per_slot_precision.find(slot);
    if (it != reference.per_slot_precision.end()) {
      delta.per_slot[slot] = sp.precision - it->second.precision;
    }
  }
  for (const auto &[kind, value] : system.group_summary) {
    auto it = reference.group_summary.find(kind);
    if (it != reference.group_summary.end()) delta.per_group[kind] = value - it->second;
  }
  return delta;
}

std::string MetricReportToJson(const MetricReport &report, const SlotSchema &schema) {
  nlohmann::ordered_json doc;
  doc["turns"] = report.turns;
  doc["jga"] = report.jga;
  doc["sta"] = report.sta.sta;
  doc["missing_slots"] = report.sta.missing_slots;
  doc["spurious_slots"] = report.sta.spurious_slots;
  doc["omission_share"] = report.sta.omission_share
                              ? nlohmann::ordered_json(*report.sta.omission_share)
                              : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json slots = nlohmann::ordered_json::object();
  for (const auto &[slot, sp] : report.per_slot_precision) {
    const SlotDef *def = schema.Find(slot);
    slots[slot] = {{"kind", def ? SlotKindName(def->kind) : "unknown"},
                   {"precision", sp.precision},
                   {"predicted_count", sp.predicted_count},
                   {"correct_count", sp.correct_count}};
  }
  doc["per_slot_precision"] = std::move(slots);
  nlohmann::ordered_json groups = nlohmann::ordered_json::object();
  for (const auto &[kind, value] : report.group_summary) groups[std::string(SlotKindName(kind))] = value;
  doc["group_summary"] = std::move(groups);
  return doc.dump(2) + "\n";
}

std::string SlotPrecisionToCsv(const MetricReport &report, const SlotSchema &schema) {
  std::string out = "slot,kind,predicted_count,correct_count,precision\n";
  for (const auto &[slot, sp] : report.per_slot_precision) {
    const SlotDef *def = schema.Find(slot);
    out += slot + "," + std::string(def ? SlotKindName(def->kind) : "unknown") + "," +
           std::to_string(sp.predicted_count) + "," + std::to_string(sp.correct_count) + "," +
           FormatFixed(sp.precision, 6) + "\n";
  }
  return out;
}

}  // namespace sdst
