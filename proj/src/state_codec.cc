// src/state_codec.cc

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

#include "sdst/state_codec.h"

#include <deque>

#include "json.hpp"
#include "sdst/error.h"
#include "sdst/text.h"

namespace sdst {

std::string SerializeState(const DialogueState &state) {
  std::string out;
  for (const auto &[slot, value] : state.entries()) {
    if (value.find(';') != std::string::npos) {
      throw Error(ErrorCode::kUnserializableValue, slot, "value contains ';'");
    }
    if (!out.empty()) out += ';';
    out += slot;
    out += '=';
    out += value;
  }
  return out;
}

ParsedState ParseState(std::string_view text, const SlotSchema &schema, ParseMode mode) {
  ParsedState result;
  auto reject = [&](ErrorCode code, const std::string &subject, const std::string &why) {
    if (mode == ParseMode::kStrict) throw Error(code, subject, why);
    result.warnings.push_back(why + ": \"" + subject + "\"");
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(';', pos);
    if (next == std::string_view::npos) next = text.size();
    const std::string segment = Trim(text.substr(pos, next - pos));
    pos = next + 1;
    if (segment.empty()) continue;

    const std::size_t eq = segment.find('=');
    if (eq == std::string::npos) {
      reject(ErrorCode::kMalformedSegment, segment, "segment without '='");
      continue;
    }
    std::string slot = Trim(std::string_view(segment).substr(0, eq));
    const std::string value = Canonicalize(std::string_view(segment).substr(eq + 1));
    if (slot.empty() || value.empty()) {
      reject(ErrorCode::kMalformedSegment, segment, "empty slot or value");
      continue;
    }
    if (!schema.Contains(slot)) {
      reject(ErrorCode::kUnknownSlot, slot, "unknown slot");
      continue;
    }
    if (result.state.Contains(slot)) {
      reject(ErrorCode::kMalformedSegment, segment, "repeated slot");
      continue;
    }
    result.state.Set(std::move(slot), value);
  }
  return result;
}

std::string_view TextSourceName(TextSource source) {
  switch (source) {
    case TextSource::kGold: return "gold";
    case TextSource::kHyp: return "hyp";
    case TextSource::kWorking: return "working";
    case TextSource::kOracleContext: return "oracle_context";
  }
  return "";
}

TextSource ParseTextSource(std::string_view name) {
  if (name == "gold") return TextSource::kGold;
  if (name == "hyp") return TextSource::kHyp;
  if (name == "working") return TextSource::kWorking;
  if (name == "oracle_context") return TextSource::kOracleContext;
  throw Error(ErrorCode::kInvalidArgument, std::string(name), "unknown text source");
}

namespace {

const std::string &UserText(const Dialogue &dialogue, std::size_t user_index,
                            std::size_t target, TextSource source) {
  const Turn &turn = dialogue.UserTurn(user_index);
  const std::optional<std::string> *variant = nullptr;
  switch (source) {
    case TextSource::kGold:
      return turn.gold_text;
    case TextSource::kHyp:
      variant = &turn.hyp_text;
      break;
    case TextSource::kWorking:
      variant = &turn.working_text;
      break;
    case TextSource::kOracleContext:
      if (user_index < target) return turn.gold_text;
      variant = &turn.hyp_text;
      break;
  }
  if (!variant->has_value()) {
    throw Error(ErrorCode::kMissingVariant, dialogue.id + "/" + std::to_string(user_index),
                std::string("user turn lacks ") +
                    (variant == &turn.hyp_text ? "hyp" : "working") + " text");
  }
  return **variant;
}

}  // namespace

std::string BuildModelInput(const Dialogue &dialogue, std::size_t user_turn,
                            TextSource source, const InputBudget &budget) {
  if (budget.max_chars == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_chars", "budget must be positive");
  }
  // One rendered chunk per user/agent pair, oldest first.
  std::deque<std::u32string> pairs;
  for (std::size_t k = 0; k <= user_turn; ++k) {
    const std::size_t pos = dialogue.UserTurnPosition(k);
    std::string chunk = "user: " + Trim(UserText(dialogue, k, user_turn, source));
    const bool has_agent = pos + 1 < dialogue.turns.size();
    if (has_agent && (k < user_turn || budget.include_next_agent)) {
      chunk += " agent: " + Trim(dialogue.turns[pos + 1].gold_text);
    }
    pairs.push_back(DecodeUtf8(chunk));
  }

  std::size_t total = 0;
  for (const auto &p : pairs) total += p.size();
  total += pairs.size() - 1;  // separating spaces
  while (pairs.size() > 1 && total > budget.max_chars) {
    total -= pairs.front().size() + 1;
    pairs.pop_front();
  }
  std::u32string out;
  for (const auto &p : pairs) {
    if (!out.empty()) out.push_back(U' ');
    out += p;
  }
  if (out.size() > budget.max_chars) out = out.substr(out.size() - budget.max_chars);
  return EncodeUtf8(out);
}

std::string SerializeModelInputs(const Corpus &corpus, TextSource source,
                                 const InputBudget &budget) {
  std::string out;
  for (const Dialogue &d : corpus.dialogues()) {
    const std::size_t n = d.NumUserTurns();
    for (std::size_t k = 0; k < n; ++k) {
      nlohmann::ordered_json row;
      row["dialogue_id"] = d.id;
      row["user_turn"] = k;
      row["input"] = BuildModelInput(d, k, source, budget);
      out += row.dump();
      out += '\n';
    }
  }
  return out;
}

}  // namespace sdst
