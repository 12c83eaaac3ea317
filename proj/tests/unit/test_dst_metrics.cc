// tests/unit/test_dst_metrics.cc

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

#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sdst/dst_metrics.h"
#include "test_support.h"

using namespace sdst;
using namespace sdst::testing;

namespace {

SlotSchema Schema() {
  return SlotSchema::FromJsonText(R"({"slots": [
    {"name": "hotel-area", "kind": "categorical", "values": ["north", "south"]},
    {"name": "hotel-name", "kind": "non_categorical"},
    {"name": "train-destination", "kind": "non_categorical"},
    {"name": "train-leaveat", "kind": "time"}]})");
}

DialogueState State(std::initializer_list<std::pair<const char *, const char *>> entries) {
  DialogueState s;
  for (const auto &[k, v] : entries) s.Set(k, v);
  return s;
}

// One dialogue with the given gold states on consecutive user turns.
Corpus Build(const std::vector<DialogueState> &gold) {
  Dialogue d;
  d.id = "d";
  for (const DialogueState &s : gold) {
    Turn u;
    u.gold_text = "text";
    u.gold_state = s;
    d.turns.push_back(u);
    Turn a;
    a.speaker = Speaker::kAgent;
    a.gold_text = "ok";
    d.turns.push_back(a);
  }
  return Corpus(Schema(), {d});
}

PredictionSet Preds(const std::vector<DialogueState> &states) {
  PredictionSet p;
  for (std::size_t k = 0; k < states.size(); ++k) p.entries[{"d", k}] = states[k];
  return p;
}

}  // namespace

TEST_CASE("jga examples") {
  const std::vector<DialogueState> gold = {State({{"hotel-area", "north"}}),
                                           State({{"hotel-area", "north"}, {"hotel-name", "acorn"}}),
                                           State({{"hotel-name", "acorn"}}), State({})};
  const Corpus corpus = Build(gold);
  CHECK(Jga(Preds(gold), corpus) == 1.0);

  const Corpus two = Build({gold[0], gold[1]});
  CHECK(Jga(Preds({gold[0], State({{"hotel-area", "north"}})}), two) == 0.5);

  const Corpus one = Build({State({{"hotel-area", "north"}})});
  CHECK(Jga(Preds({State({{"hotel-area", "North"}})}), one) == 1.0);
  CHECK(Jga(PredictionSet(), one) == 0.0);
}

TEST_CASE("sta examples") {
  const Corpus one = Build({State({{"hotel-area", "north"}, {"hotel-name", "acorn"}})});
  const PredictionSet wrong_value = Preds({State({{"hotel-area", "south"}, {"hotel-name", "acorn"}})});
  CHECK(Sta(wrong_value, one).sta == 1.0);
  CHECK(Jga(wrong_value, one) == 0.0);

  const StaResult omitted = Sta(Preds({State({{"hotel-area", "north"}})}), one);
  CHECK(omitted.sta == 0.0);
  REQUIRE(omitted.omission_share);
  CHECK(*omitted.omission_share == 1.0);

  const Corpus single = Build({State({{"hotel-area", "north"}})});
  const StaResult spurious =
      Sta(Preds({State({{"hotel-area", "north"}, {"hotel-name", "acorn"}})}), single);
  CHECK(spurious.sta == 0.0);
  CHECK(*spurious.omission_share == 0.0);
  CHECK(spurious.spurious_slots == 1);
  CHECK_FALSE(Sta(Preds({State({{"hotel-area", "north"}})}), single).omission_share);
}

TEST_CASE("slot precision") {
  const DialogueState g = State({{"hotel-name", "acorn"}});
  const Corpus corpus = Build({g, g, g, g});
  const PredictionSet preds = Preds({g, g, g, State({{"hotel-name", "acorm"}, {"hotel-area", "north"}})});
  const SlotPrecisionTable table = SlotPrecisionBreakdown(preds, corpus);
  REQUIRE(table.count("hotel-name"));
  CHECK(table.at("hotel-name").precision == 0.75);
  CHECK(table.at("hotel-name").predicted_count == 4);
  CHECK(table.at("hotel-name").correct_count == 3);
  REQUIRE(table.count("hotel-area"));
  CHECK(table.at("hotel-area").precision == 0.0);
  CHECK_FALSE(table.count("train-leaveat"));
}

TEST_CASE("group summary") {
  SlotPrecisionTable table;
  table["hotel-name"] = {0.5, 2, 1};
  table["train-destination"] = {1.0, 1, 1};
  const GroupSummary g = SummarizeGroups(table, Schema());
  CHECK(g.at(SlotKind::kNonCategorical) == 0.75);
  CHECK_FALSE(g.count(SlotKind::kTime));
  CHECK_FALSE(g.count(SlotKind::kCategorical));
}

TEST_CASE("metrics agree with the turn-by-turn oracle on random corpora") {
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const Corpus corpus = RandomCorpus(rng, 8);
    const PredictionSet preds = RandomPredictions(rng, corpus);
    const MetricReport report = Evaluate(preds, corpus);
    const OracleMetrics oracle = ComputeOracleMetrics(preds, corpus);
    CHECK(report.jga == doctest::Approx(oracle.jga).epsilon(1e-12));
    CHECK(report.sta.sta == doctest::Approx(oracle.sta).epsilon(1e-12));
    CHECK(report.jga <= report.sta.sta);
    REQUIRE(report.per_slot_precision.size() == oracle.per_slot.size());
    for (const auto &[slot, counts] : oracle.per_slot) {
      const SlotPrecision &sp = report.per_slot_precision.at(slot);
      CHECK(sp.predicted_count == counts.first);
      CHECK(sp.correct_count == counts.second);
    }
  }
}

TEST_CASE("compare reports") {
  const DialogueState g = State({{"hotel-name", "acorn"}, {"hotel-area", "north"}});
  const Corpus corpus = Build({g, g});
  const MetricReport oracle = Evaluate(Preds({g, g}), corpus);
  const MetricReport system = Evaluate(Preds({g, State({{"hotel-name", "acorm"}, {"hotel-area", "north"}})}), corpus);
  const ReportDelta delta = CompareReports(oracle, system);
  CHECK(delta.jga == doctest::Approx(-0.5));
  CHECK(delta.sta == 0.0);
  CHECK(delta.per_slot.at("hotel-name") == doctest::Approx(-0.5));
  CHECK(delta.per_slot.at("hotel-area") == 0.0);
  CHECK(delta.per_group.at(SlotKind::kNonCategorical) == doctest::Approx(-0.5));
}

TEST_CASE("report serialization") {
  const Corpus toy = IngestCorpus(ToyDir() + "/corpus.jsonl", ToyDir() + "/schema.json");
  const MetricReport report = Evaluate(GoldAsPredictions(toy), toy);
  CHECK(report.turns == toy.NumUserTurns());
  const auto json = nlohmann::json::parse(MetricReportToJson(report, toy.schema()));
  CHECK(json["jga"] == 1.0);
  CHECK(json["sta"] == 1.0);
  const std::string csv = SlotPrecisionToCsv(report, toy.schema());
  CHECK(csv.rfind("slot,kind,predicted_count,correct_count,precision\n", 0) == 0);
  for (const auto &[slot, sp] : report.per_slot_precision) CHECK(sp.precision == 1.0);
}
