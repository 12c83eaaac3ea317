// src/corpus.cc

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

#include "sdst/corpus.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sdst/error.h"
#include "sdst/state_codec.h"
#include "sdst/text.h"

namespace sdst {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view SlotKindName(SlotKind kind) {
  switch (kind) {
    case SlotKind::kCategorical: return "categorical";
    case SlotKind::kNonCategorical: return "non_categorical";
    case SlotKind::kTime: return "time";
  }
  return "";
}

SlotKind ParseSlotKind(std::string_view name) {
  if (name == "categorical") return SlotKind::kCategorical;
  if (name == "non_categorical") return SlotKind::kNonCategorical;
  if (name == "time") return SlotKind::kTime;
  throw Error(ErrorCode::kSchemaViolation, std::string(name), "unknown slot kind");
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, path, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string &path, std::string_view content) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, path, "cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kIo, path, "write failed for " + path);
}

namespace {

// Calls fn(line_number, parsed_object) for every non-blank line; any error
// is rethrown with "path:line" prepended.
template <typename Fn>
void ForEachJsonLine(const std::string &path, Fn &&fn) {
  const std::string content = ReadFile(path);
  std::istringstream in(content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::string where = path + ":" + std::to_string(line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception &e) {
      throw Error(ErrorCode::kParse, "", e.what()).WithLocation(where);
    }
    if (!obj.is_object()) {
      throw Error(ErrorCode::kParse, "", "expected a JSON object").WithLocation(where);
    }
    try {
      fn(line_no, obj);
    } catch (const Error &e) {
      throw e.WithLocation(where);
    } catch (const json::exception &e) {
      throw Error(ErrorCode::kParse, "", e.what()).WithLocation(where);
    }
  }
}

std::string RequireString(const json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw Error(ErrorCode::kParse, key, std::string("missing or non-string field \"") + key + "\"");
  }
  return it->get<std::string>();
}

std::size_t RequireIndex(const json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer() || it->get<long long>() < 0) {
    throw Error(ErrorCode::kParse, key,
                std::string("missing or invalid non-negative integer \"") + key + "\"");
  }
  return it->get<std::size_t>();
}

void ValidateSlotName(const std::string &name) {
  const auto dash = name.find('-');
  if (name.empty() || dash == std::string::npos || dash == 0 || dash + 1 == name.size() ||
      name.find('-', dash + 1) != std::string::npos) {
    throw Error(ErrorCode::kSchemaViolation, name, "slot name must be \"domain-slot\"");
  }
  if (name.find_first_of(";=") != std::string::npos) {
    throw Error(ErrorCode::kSchemaViolation, name, "slot name contains ';' or '='");
  }
}

DialogueState StateFromJson(const json &obj) {
  if (!obj.is_object()) throw Error(ErrorCode::kParse, "state", "state must be an object");
  DialogueState state;
  for (const auto &[slot, value] : obj.items()) {
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_number_integer()) {
      text = value.dump();
    } else {
      throw Error(ErrorCode::kParse, slot, "state value must be a string");
    }
    state.Set(slot, text);
  }
  return state;
}

Dialogue DialogueFromJson(const json &obj) {
  Dialogue dialogue;
  dialogue.id = RequireString(obj, "id");
  auto turns = obj.find("turns");
  if (turns == obj.end() || !turns->is_array()) {
    throw Error(ErrorCode::kParse, "turns", "missing \"turns\" array");
  }
  for (const json &t : *turns) {
    if (!t.is_object()) throw Error(ErrorCode::kParse, "turns", "turn must be an object");
    Turn turn;
    const std::string speaker = RequireString(t, "speaker");
    if (speaker == "user") {
      turn.speaker = Speaker::kUser;
    } else if (speaker == "agent") {
      turn.speaker = Speaker::kAgent;
    } else {
      throw Error(ErrorCode::kStructureError, speaker, "speaker must be user or agent");
    }
    turn.gold_text = RequireString(t, "text");
    if (t.contains("hyp")) turn.hyp_text = RequireString(t, "hyp");
    if (t.contains("working")) turn.working_text = RequireString(t, "working");
    if (auto st = t.find("state"); st != t.end()) {
      if (!turn.is_user()) {
        throw Error(ErrorCode::kStructureError, dialogue.id, "agent turn carries a state");
      }
      turn.gold_state = StateFromJson(*st);
    } else if (turn.is_user()) {
      turn.gold_state = DialogueState{};
    }
    dialogue.turns.push_back(std::move(turn));
  }
  return dialogue;
}

}  // namespace

SlotSchema::SlotSchema(std::vector<SlotDef> slots) : slots_(std::move(slots)) {
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    const SlotDef &def = slots_[i];
    ValidateSlotName(def.name);
    if (!index_.emplace(def.name, i).second) {
      throw Error(ErrorCode::kSchemaViolation, def.name, "duplicate slot name");
    }
    if (def.kind == SlotKind::kCategorical) {
      if (def.allowed_values.size() < 2) {
        throw Error(ErrorCode::kSchemaViolation, def.name,
                    "categorical slot needs at least two allowed values");
      }
    } else if (!def.allowed_values.empty()) {
      throw Error(ErrorCode::kSchemaViolation, def.name,
                  "only categorical slots list allowed values");
    }
  }
}

SlotSchema SlotSchema::FromJsonText(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParse, "", e.what());
  }
  if (!doc.is_object() || !doc.contains("slots") || !doc["slots"].is_array()) {
    throw Error(ErrorCode::kParse, "slots", "schema needs a \"slots\" array");
  }
  std::vector<SlotDef> slots;
  try {
    for (const json &s : doc["slots"]) {
      SlotDef def;
      def.name = RequireString(s, "name");
      def.kind = ParseSlotKind(RequireString(s, "kind"));
      if (auto v = s.find("values"); v != s.end()) {
        for (const json &value : *v) def.allowed_values.push_back(Canonicalize(value.get<std::string>()));
      }
      slots.push_back(std::move(def));
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParse, "", e.what());
  }
  return SlotSchema(std::move(slots));
}

SlotSchema SlotSchema::Load(const std::string &path) {
  try {
    return FromJsonText(ReadFile(path));
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw e.WithLocation(path);
  }
}

const SlotDef *SlotSchema::Find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &slots_[it->second];
}

void DialogueState::Set(std::string slot, std::string_view value) {
  std::string canonical = Canonicalize(value);
  if (canonical.empty()) {
    throw Error(ErrorCode::kSchemaViolation, slot, "empty slot value");
  }
  entries_.insert_or_assign(std::move(slot), std::move(canonical));
}

const std::string *DialogueState::Get(std::string_view slot) const {
  auto it = entries_.find(slot);
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t Dialogue::NumUserTurns() const {
  std::size_t n = 0;
  for (const Turn &t : turns) n += t.is_user() ? 1 : 0;
  return n;
}

std::size_t Dialogue::UserTurnPosition(std::size_t user_index) const {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < turns.size(); ++i) {
    if (!turns[i].is_user()) continue;
    if (seen == user_index) return i;
    ++seen;
  }
  throw Error(ErrorCode::kDanglingReference, id + "/" + std::to_string(user_index),
              "no such user turn");
}

void ValidateDialogue(const Dialogue &dialogue, const SlotSchema &schema) {
  if (dialogue.id.empty()) throw Error(ErrorCode::kStructureError, "", "empty dialogue id");
  if (dialogue.turns.empty()) {
    throw Error(ErrorCode::kStructureError, dialogue.id, "dialogue has no turns");
  }
  for (std::size_t i = 0; i < dialogue.turns.size(); ++i) {
    const Turn &turn = dialogue.turns[i];
    const Speaker expected = i % 2 == 0 ? Speaker::kUser : Speaker::kAgent;
    if (turn.speaker != expected) {
      throw Error(ErrorCode::kStructureError, dialogue.id,
                  "turn " + std::to_string(i) +
                      ": speakers must alternate starting with the user");
    }
    if (Trim(turn.gold_text).empty()) {
      throw Error(ErrorCode::kStructureError, dialogue.id,
                  "turn " + std::to_string(i) + " has empty text");
    }
    if (turn.is_user() != turn.gold_state.has_value()) {
      throw Error(ErrorCode::kStructureError, dialogue.id,
                  "turn " + std::to_string(i) + ": gold state must be present exactly on user turns");
    }
    if (!turn.is_user() && (turn.hyp_text || turn.working_text)) {
      throw Error(ErrorCode::kStructureError, dialogue.id,
                  "turn " + std::to_string(i) + ": agent turns carry no hypothesis");
    }
    if (turn.gold_state) {
      for (const auto &[slot, value] : turn.gold_state->entries()) {
        if (!schema.Contains(slot)) throw Error(ErrorCode::kSchemaViolation, slot, "unknown slot");
      }
    }
  }
}

Corpus::Corpus(SlotSchema schema, std::vector<Dialogue> dialogues)
    : schema_(std::move(schema)), dialogues_(std::move(dialogues)) {
  for (std::size_t i = 0; i < dialogues_.size(); ++i) {
    ValidateDialogue(dialogues_[i], schema_);
    if (!index_.emplace(dialogues_[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId, dialogues_[i].id, "duplicate dialogue id");
    }
  }
}

const Dialogue *Corpus::Find(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &dialogues_[it->second];
}

Dialogue *Corpus::Find(std::string_view id) {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &dialogues_[it->second];
}

std::size_t Corpus::NumUserTurns() const {
  std::size_t n = 0;
  for (const Dialogue &d : dialogues_) n += d.NumUserTurns();
  return n;
}

Corpus IngestCorpus(const std::string &corpus_file, SlotSchema schema) {
  std::vector<Dialogue> dialogues;
  std::set<std::string> seen;
  ForEachJsonLine(corpus_file, [&](std::size_t, const json &obj) {
    Dialogue dialogue = DialogueFromJson(obj);
    ValidateDialogue(dialogue, schema);
    if (!seen.insert(dialogue.id).second) {
      throw Error(ErrorCode::kDuplicateId, dialogue.id, "duplicate dialogue id");
    }
    dialogues.push_back(std::move(dialogue));
  });
  return Corpus(std::move(schema), std::move(dialogues));
}

Corpus IngestCorpus(const std::string &corpus_file, const std::string &schema_file) {
  return IngestCorpus(corpus_file, SlotSchema::Load(schema_file));
}

std::string SerializeCorpus(const Corpus &corpus) {
  std::string out;
  for (const Dialogue &d : corpus.dialogues()) {
    ordered_json obj;
    obj["id"] = d.id;
    ordered_json turns = ordered_json::array();
    for (const Turn &t : d.turns) {
      ordered_json jt;
      jt["speaker"] = t.is_user() ? "user" : "agent";
      jt["text"] = t.gold_text;
      if (t.hyp_text) jt["hyp"] = *t.hyp_text;
      if (t.working_text) jt["working"] = *t.working_text;
      if (t.gold_state) {
        ordered_json st = ordered_json::object();
        for (const auto &[slot, value] : t.gold_state->entries()) st[slot] = value;
        jt["state"] = std::move(st);
      }
      turns.push_back(std::move(jt));
    }
    obj["turns"] = std::move(turns);
    out += obj.dump();
    out += '\n';
  }
  return out;
}

void WriteCorpus(const Corpus &corpus, const std::string &path) {
  WriteFile(path, SerializeCorpus(corpus));
}

namespace {

struct TextRecord {
  std::string dialogue_id;
  std::size_t position = 0;  // index into turns
  std::string text;
};

std::vector<TextRecord> ReadTextRecords(const Corpus &corpus, const std::string &path) {
  std::vector<TextRecord> records;
  ForEachJsonLine(path, [&](std::size_t, const json &obj) {
    TextRecord rec;
    rec.dialogue_id = RequireString(obj, "dialogue_id");
    rec.text = RequireString(obj, "hyp");
    const Dialogue *d = corpus.Find(rec.dialogue_id);
    if (d == nullptr) {
      throw Error(ErrorCode::kDanglingReference, rec.dialogue_id, "unknown dialogue");
    }
    if (obj.contains("user_turn")) {
      rec.position = d->UserTurnPosition(RequireIndex(obj, "user_turn"));
    } else {
      rec.position = RequireIndex(obj, "turn");
      if (rec.position >= d->turns.size()) {
        throw Error(ErrorCode::kDanglingReference,
                    rec.dialogue_id + "/" + std::to_string(rec.position), "no such turn");
      }
      if (!d->turns[rec.position].is_user()) {
        throw Error(ErrorCode::kStructureError,
                    rec.dialogue_id + "/" + std::to_string(rec.position),
                    "hypothesis given for an agent turn");
      }
    }
    records.push_back(std::move(rec));
  });
  return records;
}

}  // namespace

std::size_t AttachHypotheses(Corpus &corpus, const std::string &transcripts_file) {
  const std::vector<TextRecord> records = ReadTextRecords(corpus, transcripts_file);
  for (const TextRecord &rec : records) {
    corpus.Find(rec.dialogue_id)->turns[rec.position].hyp_text = rec.text;
  }
  return records.size();
}

std::size_t AttachWorkingText(Corpus &corpus, const std::string &transcripts_file) {
  const std::vector<TextRecord> records = ReadTextRecords(corpus, transcripts_file);
  for (const TextRecord &rec : records) {
    corpus.Find(rec.dialogue_id)->turns[rec.position].working_text = rec.text;
  }
  return records.size();
}

const DialogueState *PredictionSet::Find(const std::string &dialogue_id,
                                         std::size_t user_turn) const {
  auto it = entries.find(TurnKey(dialogue_id, user_turn));
  return it == entries.end() ? nullptr : &it->second;
}

PredictionSet LoadPredictions(const std::string &pred_file, const Corpus &corpus,
                              const SlotSchema &schema) {
  PredictionSet preds;
  preds.provenance = pred_file;
  ForEachJsonLine(pred_file, [&](std::size_t line_no, const json &obj) {
    ++preds.rows_read;
    const std::string id = RequireString(obj, "dialogue_id");
    const std::size_t user_turn = RequireIndex(obj, "user_turn");
    const std::string text = RequireString(obj, "state");
    const Dialogue *d = corpus.Find(id);
    if (d == nullptr) throw Error(ErrorCode::kDanglingReference, id, "unknown dialogue");
    if (user_turn >= d->NumUserTurns()) {
      throw Error(ErrorCode::kDanglingReference, id + "/" + std::to_string(user_turn),
                  "no such user turn");
    }
    ParsedState parsed = ParseState(text, schema, ParseMode::kLenient);
    for (std::string &w : parsed.warnings) preds.warnings.push_back({line_no, std::move(w)});
    if (!preds.entries.emplace(TurnKey(id, user_turn), std::move(parsed.state)).second) {
      throw Error(ErrorCode::kDuplicateId, id + "/" + std::to_string(user_turn),
                  "duplicate prediction row");
    }
  });
  return preds;
}

PredictionSet GoldAsPredictions(const Corpus &corpus) {
  PredictionSet preds;
  preds.provenance = "gold";
  for (const Dialogue &d : corpus.dialogues()) {
    std::size_t k = 0;
    for (const Turn &t : d.turns) {
      if (!t.is_user()) continue;
      preds.entries.emplace(TurnKey(d.id, k++), *t.gold_state);
      ++preds.rows_read;
    }
  }
  return preds;
}

std::vector<EntitySpan> LoadEntitySpans(const std::string &span_file, const Corpus &corpus) {
  std::vector<EntitySpan> spans;
  ForEachJsonLine(span_file, [&](std::size_t, const json &obj) {
    EntitySpan span;
    span.dialogue_id = RequireString(obj, "dialogue_id");
    span.turn = RequireIndex(obj, "turn");
    span.start = RequireIndex(obj, "start");
    span.end = RequireIndex(obj, "end");
    span.surface = RequireString(obj, "surface");
    const Dialogue *d = corpus.Find(span.dialogue_id);
    if (d == nullptr) {
      throw Error(ErrorCode::kDanglingReference, span.dialogue_id, "unknown dialogue");
    }
    if (span.turn >= d->turns.size()) {
      throw Error(ErrorCode::kDanglingReference,
                  span.dialogue_id + "/" + std::to_string(span.turn), "no such turn");
    }
    if (span.start >= span.end || CodePointCount(span.surface) != span.end - span.start) {
      throw Error(ErrorCode::kStaleSpan, span.surface,
                  "span offsets disagree with the surface length");
    }
    spans.push_back(std::move(span));
  });
  return spans;
}

const std::string &SpanBaseText(const Turn &turn) {
  if (turn.is_user()) {
    if (turn.working_text) return *turn.working_text;
    if (turn.hyp_text) return *turn.hyp_text;
  }
  return turn.gold_text;
}

}  // namespace sdst
