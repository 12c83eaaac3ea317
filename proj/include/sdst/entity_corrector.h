// include/sdst/entity_corrector.h

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

#ifndef SDST_ENTITY_CORRECTOR_H_
#define SDST_ENTITY_CORRECTOR_H_

// Replaces misspelled proper nouns in user transcriptions with the closest
// entity the agent has mentioned, when their character error rate is under a
// threshold.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sdst/corpus.h"

namespace sdst {

enum class AgentScope {
  kPreviousTurns,  // agent turns before the user turn
  kWholeDialogue,
};

struct CorrectionConfig {
  double threshold = 0.2;  // in [0, 1]
  AgentScope scope = AgentScope::kPreviousTurns;
};

struct Replacement {
  std::string dialogue_id;
  std::size_t turn = 0;  // index among all turns
  std::size_t start = 0;
  std::size_t end = 0;   // span of the original text
  std::string original;
  std::string replacement;
  double cer = 0.0;
};

using ReplacementLog = std::vector<Replacement>;

// Longest-match, non-overlapping, left-to-right matches of gazetteer entries
// against the turn's tokens (compared lowercased). Spans carry code-point
// offsets into `text` and an empty dialogue id / turn index 0.
std::vector<EntitySpan> DetectEntitiesGazetteer(std::string_view text,
                                                const std::vector<std::string> &gazetteer);

// Runs the gazetteer over every turn of the corpus (SpanBaseText of each).
std::vector<EntitySpan> DetectCorpusEntities(const Corpus &corpus,
                                             const std::vector<std::string> &gazetteer);

// CER of a user entity against an agent entity: levenshtein / |agent|, over
// canonicalized text.
double EntityCer(std::string_view agent_entity, std::string_view user_entity);

// `spans` may cover any dialogue; only those for `dialogue` are used. User
// spans must match SpanBaseText of their turn, agent spans the agent text,
// otherwise StaleSpan is raised. Sets working_text on every corrected user
// turn and returns the replacements, in (turn, offset) order.
ReplacementLog CorrectUserEntities(Dialogue &dialogue, const std::vector<EntitySpan> &spans,
                                   const CorrectionConfig &config);

ReplacementLog CorrectCorpusEntities(Corpus &corpus, const std::vector<EntitySpan> &spans,
                                     const CorrectionConfig &config);

struct ThresholdPoint {
  double threshold = 0.0;
  double objective = 0.0;
  std::size_t replacements = 0;
};

struct TuningResult {
  double best_threshold = 0.0;
  std::vector<ThresholdPoint> curve;
};

// Objective over a corrected copy of the corpus; lower is better.
using TuningObjective = std::function<double(const Corpus &)>;

// Mean character edit rate between gold text and the corrected text over all
// user turns. Throws MissingVariant if a user turn lacks a hypothesis.
double MeanCorrectedCer(const Corpus &corpus);

// 0.00, 0.05, ..., 0.50
std::vector<double> DefaultThresholdGrid();

// Evaluates every grid point and returns the one with the lowest objective,
// the smallest threshold on ties. Without an explicit objective the mean
// corrected CER is used.
TuningResult TuneThreshold(const Corpus &corpus, const std::vector<EntitySpan> &spans,
                           const std::vector<double> &grid, AgentScope scope,
                           const TuningObjective &objective = {});

// dialogue_id,turn,start,end,original,replacement,cer
std::string ReplacementLogToCsv(const ReplacementLog &log);

}  // namespace sdst

#endif  // SDST_ENTITY_CORRECTOR_H_
