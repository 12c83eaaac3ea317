// include/sdst/corpus.h

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

#ifndef SDST_CORPUS_H_
#define SDST_CORPUS_H_

// Corpus data model and loaders for every external file the toolkit reads:
// slot schema, dialogue corpus, ASR transcripts, DST predictions and entity
// spans. All loaders validate fully and report errors as "path:line: ...".

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sdst {

enum class SlotKind { kCategorical, kNonCategorical, kTime };

std::string_view SlotKindName(SlotKind kind);
SlotKind ParseSlotKind(std::string_view name);

struct SlotDef {
  std::string name;  // "domain-slot"
  SlotKind kind = SlotKind::kNonCategorical;
  std::vector<std::string> allowed_values;
};

class SlotSchema {
 public:
  SlotSchema() = default;
  // Throws SchemaViolation when a slot definition breaks an invariant.
  explicit SlotSchema(std::vector<SlotDef> slots);

  static SlotSchema Load(const std::string &path);
  static SlotSchema FromJsonText(std::string_view json_text);

  const std::vector<SlotDef> &slots() const { return slots_; }
  const SlotDef *Find(std::string_view name) const;
  bool Contains(std::string_view name) const { return Find(name) != nullptr; }

 private:
  std::vector<SlotDef> slots_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Ordered slot -> value map. Values are stored canonicalized; slot order is
// lexicographic.
class DialogueState {
 public:
  using Map = std::map<std::string, std::string, std::less<>>;

  DialogueState() = default;

  // Canonicalizes `value`. Throws SchemaViolation if it becomes empty.
  void Set(std::string slot, std::string_view value);
  void Erase(std::string_view slot) {
    if (auto it = entries_.find(slot); it != entries_.end()) entries_.erase(it);
  }

  const std::string *Get(std::string_view slot) const;
  bool Contains(std::string_view slot) const { return entries_.count(slot) > 0; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map &entries() const { return entries_; }

  bool operator==(const DialogueState &) const = default;

 private:
  Map entries_;
};

enum class Speaker { kUser, kAgent };

struct Turn {
  Speaker speaker = Speaker::kUser;
  std::string gold_text;
  std::optional<std::string> hyp_text;
  std::optional<std::string> working_text;
  std::optional<DialogueState> gold_state;  // user turns only

  bool is_user() const { return speaker == Speaker::kUser; }
};

struct Dialogue {
  std::string id;
  std::vector<Turn> turns;

  std::size_t NumUserTurns() const;
  // Position in `turns` of the k-th user turn; throws DanglingReference.
  std::size_t UserTurnPosition(std::size_t user_index) const;
  Turn &UserTurn(std::size_t user_index) { return turns[UserTurnPosition(user_index)]; }
  const Turn &UserTurn(std::size_t user_index) const {
    return turns[UserTurnPosition(user_index)];
  }
};

class Corpus {
 public:
  Corpus() = default;
  // Validates every invariant; throws on the first violation.
  Corpus(SlotSchema schema, std::vector<Dialogue> dialogues);

  const SlotSchema &schema() const { return schema_; }
  const std::vector<Dialogue> &dialogues() const { return dialogues_; }
  std::vector<Dialogue> &mutable_dialogues() { return dialogues_; }

  const Dialogue *Find(std::string_view id) const;
  Dialogue *Find(std::string_view id);
  std::size_t NumUserTurns() const;

 private:
  SlotSchema schema_;
  std::vector<Dialogue> dialogues_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Checks one dialogue against the structural invariants.
void ValidateDialogue(const Dialogue &dialogue, const SlotSchema &schema);

Corpus IngestCorpus(const std::string &corpus_file, const std::string &schema_file);
Corpus IngestCorpus(const std::string &corpus_file, SlotSchema schema);

// One JSON Lines record per dialogue; hyp and working text are emitted when
// present. Re-ingesting the output reproduces the corpus exactly.
std::string SerializeCorpus(const Corpus &corpus);
void WriteCorpus(const Corpus &corpus, const std::string &path);

// Sets hyp_text on every referenced user turn. Records address turns either
// by "user_turn" (index among user turns) or "turn" (index among all turns).
// Returns the number of attached hypotheses.
std::size_t AttachHypotheses(Corpus &corpus, const std::string &transcripts_file);

// Same record format, but fills working_text instead of hyp_text. Used to
// ingest externally produced noisy text.
std::size_t AttachWorkingText(Corpus &corpus, const std::string &transcripts_file);

using TurnKey = std::pair<std::string, std::size_t>;  // (dialogue id, user turn)

struct LoadWarning {
  std::size_t line = 0;
  std::string message;
};

struct PredictionSet {
  std::map<TurnKey, DialogueState> entries;
  std::string provenance;
  std::size_t rows_read = 0;
  std::vector<LoadWarning> warnings;

  const DialogueState *Find(const std::string &dialogue_id, std::size_t user_turn) const;
};

PredictionSet LoadPredictions(const std::string &pred_file, const Corpus &corpus,
                              const SlotSchema &schema);

// Gold states packaged as a prediction set.
PredictionSet GoldAsPredictions(const Corpus &corpus);

struct EntitySpan {
  std::string dialogue_id;
  std::size_t turn = 0;  // index among all turns of the dialogue
  std::size_t start = 0;
  std::size_t end = 0;
  std::string surface;

  bool operator==(const EntitySpan &) const = default;
};

// Validates references against the corpus and that |surface| == end - start.
std::vector<EntitySpan> LoadEntitySpans(const std::string &span_file, const Corpus &corpus);

// Text a span on this turn refers to: the agent's gold text, or for user
// turns the working text, then the hypothesis, then the gold text.
const std::string &SpanBaseText(const Turn &turn);

// Reads a whole file; throws IoError naming the path.
std::string ReadFile(const std::string &path);
// Creates parent directories; throws IoError naming the path.
void WriteFile(const std::string &path, std::string_view content);

}  // namespace sdst

#endif  // SDST_CORPUS_H_
