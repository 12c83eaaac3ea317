// src/entity_corrector.cc

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

#include "sdst/entity_corrector.h"

#include <algorithm>
#include <map>

#include "sdst/error.h"
#include "sdst/text.h"
#include "sdst/text_metrics.h"

namespace sdst {

std::vector<EntitySpan> DetectEntitiesGazetteer(std::string_view text,
                                                const std::vector<std::string> &gazetteer) {
  std::vector<std::vector<std::string>> entries;
  for (const std::string &g : gazetteer) {
    std::vector<std::string> words;
    for (Token &t : Tokenize(g)) words.push_back(std::move(t.lower));
    if (!words.empty()) entries.push_back(std::move(words));
  }
  const std::vector<Token> tokens = Tokenize(text);
  const std::u32string cps = DecodeUtf8(text);

  std::vector<EntitySpan> spans;
  for (std::size_t i = 0; i < tokens.size();) {
    std::size_t best_len = 0;
    for (const auto &entry : entries) {
      if (entry.size() <= best_len || i + entry.size() > tokens.size()) continue;
      bool match = true;
      for (std::size_t k = 0; k < entry.size() && match; ++k) {
        match = tokens[i + k].lower == entry[k];
      }
      if (match) best_len = entry.size();
    }
    if (best_len == 0) {
      ++i;
      continue;
    }
    EntitySpan span;
    span.start = tokens[i].start;
    span.end = tokens[i + best_len - 1].end;
    span.surface = EncodeUtf8(std::u32string_view(cps).substr(span.start, span.end - span.start));
    spans.push_back(std::move(span));
    i += best_len;
  }
  return spans;
}

std::vector<EntitySpan> DetectCorpusEntities(const Corpus &corpus,
                                             const std::vector<std::string> &gazetteer) {
  std::vector<EntitySpan> all;
  for (const Dialogue &d : corpus.dialogues()) {
    for (std::size_t t = 0; t < d.turns.size(); ++t) {
      for (EntitySpan &span : DetectEntitiesGazetteer(SpanBaseText(d.turns[t]), gazetteer)) {
        span.dialogue_id = d.id;
        span.turn = t;
        all.push_back(std::move(span));
      }
    }
  }
  return all;
}

double EntityCer(std::string_view agent_entity, std::string_view user_entity) {
  const std::u32string g = DecodeUtf8(Canonicalize(agent_entity));
  const std::u32string e = DecodeUtf8(Canonicalize(user_entity));
  if (g.empty()) return e.empty() ? 0.0 : 1.0;
  return static_cast<double>(EditDistance(g, e)) / static_cast<double>(g.size());
}

namespace {

void CheckSpan(const Dialogue &dialogue, const EntitySpan &span) {
  const std::string subject = dialogue.id + "/" + std::to_string(span.turn);
  if (span.turn >= dialogue.turns.size()) {
    throw Error(ErrorCode::kDanglingReference, subject, "no such turn");
  }
  const std::u32string text = DecodeUtf8(SpanBaseText(dialogue.turns[span.turn]));
  if (span.start >= span.end || span.end > text.size() ||
      EncodeUtf8(std::u32string_view(text).substr(span.start, span.end - span.start)) !=
          span.surface) {
    throw Error(ErrorCode::kStaleSpan, subject,
                "span [" + std::to_string(span.start) + ", " + std::to_string(span.end) +
                    ") does not read \"" + span.surface + "\"");
  }
}

}  // namespace

ReplacementLog CorrectUserEntities(Dialogue &dialogue, const std::vector<EntitySpan> &spans,
                                   const CorrectionConfig &config) {
  if (!(config.threshold >= 0.0 && config.threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold", "threshold must lie in [0, 1]");
  }
  std::vector<const EntitySpan *> agent;
  std::map<std::size_t, std::vector<const EntitySpan *>> user;  // by turn
  for (const EntitySpan &span : spans) {
    if (span.dialogue_id != dialogue.id) continue;
    CheckSpan(dialogue, span);
    if (dialogue.turns[span.turn].is_user()) {
      user[span.turn].push_back(&span);
    } else {
      agent.push_back(&span);
    }
  }
  auto by_position = [](const EntitySpan *a, const EntitySpan *b) {
    return a->turn != b->turn ? a->turn < b->turn : a->start < b->start;
  };
  std::stable_sort(agent.begin(), agent.end(), by_position);

  ReplacementLog log;
  for (auto &[turn_index, turn_spans] : user) {
    std::stable_sort(turn_spans.begin(), turn_spans.end(), by_position);
    for (std::size_t i = 1; i < turn_spans.size(); ++i) {
      if (turn_spans[i]->start < turn_spans[i - 1]->end) {
        throw Error(ErrorCode::kSpanOverlap, dialogue.id + "/" + std::to_string(turn_index),
                    "user entity spans overlap");
      }
    }

    std::vector<Replacement> turn_log;
    for (const EntitySpan *e : turn_spans) {
      const EntitySpan *best = nullptr;
      double best_cer = 0.0;
      for (const EntitySpan *g : agent) {
        if (config.scope == AgentScope::kPreviousTurns && g->turn >= turn_index) continue;
        const double cer = EntityCer(g->surface, e->surface);
        if (best == nullptr || cer < best_cer) {
          best = g;
          best_cer = cer;
        }
      }
      if (best == nullptr || best_cer <= 0.0 || best_cer > config.threshold) continue;
      turn_log.push_back(Replacement{dialogue.id, turn_index, e->start, e->end, e->surface,
                                     best->surface, best_cer});
    }
    if (turn_log.empty()) continue;

    Turn &turn = dialogue.turns[turn_index];
    std::u32string text = DecodeUtf8(SpanBaseText(turn));
    for (auto it = turn_log.rbegin(); it != turn_log.rend(); ++it) {
      text.replace(it->start, it->end - it->start, DecodeUtf8(it->replacement));
    }
    turn.working_text = EncodeUtf8(text);
    log.insert(log.end(), turn_log.begin(), turn_log.end());
  }
  return log;
}

ReplacementLog CorrectCorpusEntities(Corpus &corpus, const std::vector<EntitySpan> &spans,
                                     const CorrectionConfig &config) {
  std::map<std::string, std::vector<EntitySpan>> by_dialogue;
  for (const EntitySpan &span : spans) {
    if (corpus.Find(span.dialogue_id) == nullptr) {
      throw Error(ErrorCode::kDanglingReference, span.dialogue_id, "unknown dialogue");
    }
    by_dialogue[span.dialogue_id].push_back(span);
  }
  ReplacementLog log;
  for (Dialogue &d : corpus.mutable_dialogues()) {
    auto it = by_dialogue.find(d.id);
    if (it == by_dialogue.end()) continue;
    ReplacementLog part = CorrectUserEntities(d, it->second, config);
    log.insert(log.end(), part.begin(), part.end());
  }
  std::stable_sort(log.begin(), log.end(), [](const Replacement &a, const Replacement &b) {
    if (a.dialogue_id != b.dialogue_id) return a.dialogue_id < b.dialogue_id;
    if (a.turn != b.turn) return a.turn < b.turn;
    return a.start < b.start;
  });
  return log;
}

double MeanCorrectedCer(const Corpus &corpus) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const Dialogue &d : corpus.dialogues()) {
    for (std::size_t t = 0; t < d.turns.size(); ++t) {
      const Turn &turn = d.turns[t];
      if (!turn.is_user()) continue;
      if (!turn.hyp_text && !turn.working_text) {
        throw Error(ErrorCode::kMissingVariant, d.id + "/" + std::to_string(t),
                    "user turn lacks a hypothesis");
      }
      sum += EditRate(turn.gold_text, SpanBaseText(turn), RateUnit::kChar);
      ++n;
    }
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

std::vector<double> DefaultThresholdGrid() {
  std::vector<double> grid;
  for (int pct = 0; pct <= 50; pct += 5) grid.push_back(pct / 100.0);
  return grid;
}

TuningResult TuneThreshold(const Corpus &corpus, const std::vector<EntitySpan> &spans,
                           const std::vector<double> &grid, AgentScope scope,
                           const TuningObjective &objective) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "grid", "empty threshold grid");
  // Surfaces the missing-hypothesis error before any work is done.
  MeanCorrectedCer(corpus);

  TuningResult result;
  bool have_best = false;
  double best_objective = 0.0;
  for (double tau : grid) {
    Corpus corrected = corpus;
    const ReplacementLog log = CorrectCorpusEntities(corrected, spans, {tau, scope});
    const double value = objective ? objective(corrected) : MeanCorrectedCer(corrected);
    result.curve.push_back({tau, value, log.size()});
    if (!have_best || value < best_objective ||
        (value == best_objective && tau < result.best_threshold)) {
      have_best = true;
      best_objective = value;
      result.best_threshold = tau;
    }
  }
  return result;
}

std::string ReplacementLogToCsv(const ReplacementLog &log) {
  std::string out = "dialogue_id,turn,start,end,original,replacement,cer\n";
  for (const Replacement &r : log) {
    out += CsvField(r.dialogue_id) + "," + std::to_string(r.turn) + "," +
           std::to_string(r.start) + "," + std::to_string(r.end) + "," + CsvField(r.original) +
           "," + CsvField(r.replacement) + "," + FormatFixed(r.cer, 6) + "\n";
  }
  return out;
}

}  // namespace sdst
