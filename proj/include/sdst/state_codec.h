// include/sdst/state_codec.h

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

#ifndef SDST_STATE_CODEC_H_
#define SDST_STATE_CODEC_H_

// Linearized dialogue states ("slot=value;slot=value") and the dialogue
// history text handed to an external state tracker.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sdst/corpus.h"

namespace sdst {

// Slots in lexicographic order, "name=value" joined by ";". Throws
// UnserializableValue(slot) when a value contains ';'.
std::string SerializeState(const DialogueState &state);

enum class ParseMode { kStrict, kLenient };

struct ParsedState {
  DialogueState state;
  std::vector<std::string> warnings;
};

// Splits on ';' and each segment on its first '='. Blank segments are
// ignored. In strict mode a malformed segment raises MalformedSegment and an
// unknown slot raises UnknownSlot; lenient mode skips them with a warning.
// A repeated slot keeps its first value.
ParsedState ParseState(std::string_view text, const SlotSchema &schema, ParseMode mode);

enum class TextSource { kGold, kHyp, kWorking, kOracleContext };

std::string_view TextSourceName(TextSource source);
TextSource ParseTextSource(std::string_view name);

struct InputBudget {
  std::size_t max_chars = 3000;
  // Append the agent turn that follows the target user turn.
  bool include_next_agent = false;
};

// "user: <U1> agent: <A1> ... user: <Ut>". Oldest user/agent pairs are
// dropped until the text fits; if the final pair alone is too long its last
// max_chars characters are kept.
std::string BuildModelInput(const Dialogue &dialogue, std::size_t user_turn,
                            TextSource source, const InputBudget &budget);

// One {"dialogue_id", "user_turn", "input"} line per user turn.
std::string SerializeModelInputs(const Corpus &corpus, TextSource source,
                                 const InputBudget &budget);

}  // namespace sdst

#endif  // SDST_STATE_CODEC_H_
