// tests/unit/test_entity_corrector.cc

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

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "sdst/entity_corrector.h"
#include "sdst/error.h"
#include "sdst/text.h"
#include "test_support.h"

using namespace sdst;
using namespace sdst::testing;

namespace {

Turn User(const std::string &gold, const std::string &hyp) {
  Turn t;
  t.gold_text = gold;
  t.hyp_text = hyp;
  t.gold_state = DialogueState();
  return t;
}

Turn Agent(const std::string &text) {
  Turn t;
  t.speaker = Speaker::kAgent;
  t.gold_text = text;
  return t;
}

EntitySpan Span(const Dialogue &d, std::size_t turn, const std::string &surface) {
  const std::string &text = SpanBaseText(d.turns[turn]);
  const std::size_t byte = text.find(surface);
  REQUIRE(byte != std::string::npos);
  EntitySpan s;
  s.dialogue_id = d.id;
  s.turn = turn;
  s.start = CodePointCount(std::string_view(text).substr(0, byte));
  s.end = s.start + CodePointCount(surface);
  s.surface = surface;
  return s;
}

Dialogue Marriott() {
  Dialogue d;
  d.id = "m";
  d.turns = {User("i want a hotel", "i want a hotel"),
             Agent("I recommend the huntingdon marriott."),
             User("book the huntingdon marriott", "book the huntington marriott")};
  return d;
}

}  // namespace

TEST_CASE("gazetteer detection") {
  const auto one = DetectEntitiesGazetteer("i leave from cambridge", {"cambridge"});
  REQUIRE(one.size() == 1);
  CHECK(one[0].start == 13);
  CHECK(one[0].end == 22);
  CHECK(one[0].surface == "cambridge");

  const auto longest = DetectEntitiesGazetteer("fly to New York today", {"york", "new york"});
  REQUIRE(longest.size() == 1);
  CHECK(longest[0].surface == "New York");

  CHECK(DetectEntitiesGazetteer("i leave from cambridge", {}).empty());
  CHECK(DetectEntitiesGazetteer("scambridge", {"cambridge"}).empty());

  const auto punct = DetectEntitiesGazetteer("to Caf\xC3\xA9 Jello, please", {"caf\xC3\xA9 jello"});
  REQUIRE(punct.size() == 1);
  CHECK(punct[0].start == 3);
  CHECK(punct[0].surface == "Caf\xC3\xA9 Jello");
}

TEST_CASE("entity cer") {
  CHECK(EntityCer("huntingdon marriott", "huntington marriott") == doctest::Approx(1.0 / 19));
  CHECK(EntityCer("Cambridge", "cambridge") == 0.0);
  CHECK(EntityCer("ab", "abcd") == doctest::Approx(1.0));
}

TEST_CASE("huntington marriott is corrected at 0.2") {
  Dialogue d = Marriott();
  const std::vector<EntitySpan> spans = {Span(d, 1, "huntingdon marriott"),
                                         Span(d, 2, "huntington marriott")};
  const ReplacementLog log = CorrectUserEntities(d, spans, {0.2, AgentScope::kPreviousTurns});
  REQUIRE(log.size() == 1);
  CHECK(log[0].original == "huntington marriott");
  CHECK(log[0].replacement == "huntingdon marriott");
  CHECK(log[0].cer == doctest::Approx(0.0526).epsilon(0.001));
  REQUIRE(d.turns[2].working_text);
  CHECK(*d.turns[2].working_text == "book the huntingdon marriott");
  CHECK_FALSE(d.turns[0].working_text);
}

TEST_CASE("threshold zero never replaces") {
  Dialogue d = Marriott();
  const std::vector<EntitySpan> spans = {Span(d, 1, "huntingdon marriott"),
                                         Span(d, 2, "huntington marriott")};
  CHECK(CorrectUserEntities(d, spans, {0.0, AgentScope::kPreviousTurns}).empty());
  CHECK_FALSE(d.turns[2].working_text);
}

TEST_CASE("no agent entity in scope leaves the dialogue unchanged") {
  Dialogue d;
  d.id = "x";
  d.turns = {User("to huntingdon", "to huntington"), Agent("Huntingdon it is.")};
  const std::vector<EntitySpan> spans = {Span(d, 0, "huntington"), Span(d, 1, "Huntingdon")};
  CHECK(CorrectUserEntities(d, spans, {0.5, AgentScope::kPreviousTurns}).empty());
  CHECK_FALSE(d.turns[0].working_text);
  const ReplacementLog whole = CorrectUserEntities(d, spans, {0.5, AgentScope::kWholeDialogue});
  REQUIRE(whole.size() == 1);
  CHECK(*d.turns[0].working_text == "to Huntingdon");
}

TEST_CASE("stale and overlapping spans are rejected") {
  Dialogue d = Marriott();
  EntitySpan stale = Span(d, 2, "huntington marriott");
  stale.surface = "huntingdon marriott";
  try {
    CorrectUserEntities(d, {stale}, {});
    FAIL("expected StaleSpan");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kStaleSpan);
  }
  const std::vector<EntitySpan> overlap = {Span(d, 2, "huntington marriott"), Span(d, 2, "marriott")};
  CHECK_THROWS_AS(CorrectUserEntities(d, overlap, {}), Error);
  CHECK_THROWS_AS(CorrectUserEntities(d, {}, {1.5, AgentScope::kPreviousTurns}), Error);
}

TEST_CASE("the set of replacements grows with the threshold") {
  const Corpus toy = IngestCorpus(ToyDir() + "/corpus.jsonl", ToyDir() + "/schema.json");
  Corpus corpus = toy;
  AttachHypotheses(corpus, ToyDir() + "/transcripts.jsonl");
  std::vector<std::string> gazetteer;
  {
    const std::string text = ReadFile(ToyDir() + "/gazetteer.txt");
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string::npos) nl = text.size();
      const std::string line = Trim(text.substr(pos, nl - pos));
      if (!line.empty() && line[0] != '#') gazetteer.push_back(line);
      pos = nl + 1;
    }
  }
  const std::vector<EntitySpan> spans = DetectCorpusEntities(corpus, gazetteer);
  REQUIRE_FALSE(spans.empty());

  std::size_t previous = 0;
  std::vector<std::pair<std::string, std::size_t>> previous_keys;
  for (double tau : DefaultThresholdGrid()) {
    Corpus copy = corpus;
    const ReplacementLog log = CorrectCorpusEntities(copy, spans, {tau, AgentScope::kPreviousTurns});
    CHECK(log.size() >= previous);
    std::vector<std::pair<std::string, std::size_t>> keys;
    for (const Replacement &r : log) {
      CHECK(r.cer <= tau);
      CHECK(r.cer > 0.0);
      keys.emplace_back(r.dialogue_id, r.turn * 10000 + r.start);
    }
    for (const auto &k : previous_keys) CHECK(std::find(keys.begin(), keys.end(), k) != keys.end());
    previous = log.size();
    previous_keys = keys;
  }
}

TEST_CASE("tune threshold") {
  Corpus corpus;
  {
    Dialogue d = Marriott();
    std::vector<Dialogue> ds = {d};
    corpus = Corpus(SlotSchema(), ds);
  }
  const Dialogue &d = corpus.dialogues()[0];
  const std::vector<EntitySpan> spans = {Span(d, 1, "huntingdon marriott"),
                                         Span(d, 2, "huntington marriott")};

  const TuningResult result = TuneThreshold(corpus, spans, DefaultThresholdGrid(),
                                            AgentScope::kPreviousTurns);
  CHECK(result.best_threshold == doctest::Approx(0.1));
  REQUIRE(result.curve.size() == 11);
  CHECK(result.curve.front().objective > result.curve[2].objective);
  CHECK(result.curve[1].replacements == 0);
  CHECK(result.curve[2].replacements == 1);

  CHECK(TuneThreshold(corpus, spans, {0.0}, AgentScope::kPreviousTurns).best_threshold == 0.0);
  CHECK_THROWS_AS(TuneThreshold(corpus, spans, {}, AgentScope::kPreviousTurns), Error);

  Corpus clean = corpus;
  for (Dialogue &dd : clean.mutable_dialogues()) {
    for (Turn &t : dd.turns) {
      if (t.is_user()) t.hyp_text = t.gold_text;
    }
  }
  const std::vector<EntitySpan> clean_spans = {Span(clean.dialogues()[0], 1, "huntingdon marriott"),
                                               Span(clean.dialogues()[0], 2, "huntingdon marriott")};
  const TuningResult flat = TuneThreshold(clean, clean_spans, {0.3, 0.1, 0.2},
                                          AgentScope::kPreviousTurns);
  CHECK(flat.best_threshold == doctest::Approx(0.1));
  for (const ThresholdPoint &p : flat.curve) CHECK(p.objective == 0.0);

  Corpus missing = corpus;
  missing.mutable_dialogues()[0].turns[0].hyp_text.reset();
  try {
    TuneThreshold(missing, spans, {0.1}, AgentScope::kPreviousTurns);
    FAIL("expected MissingVariant");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kMissingVariant);
  }
}

TEST_CASE("replacement log csv") {
  ReplacementLog log = {{"d1", 2, 9, 28, "huntington, marriott", "huntingdon marriott", 1.0 / 19}};
  CHECK(ReplacementLogToCsv(log) ==
        "dialogue_id,turn,start,end,original,replacement,cer\n"
        "d1,2,9,28,\"huntington, marriott\",huntingdon marriott,0.052632\n");
}
