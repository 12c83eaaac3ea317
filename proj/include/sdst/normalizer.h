// include/sdst/normalizer.h

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

#ifndef SDST_NORMALIZER_H_
#define SDST_NORMALIZER_H_

// Rule-based transcript normalization: an English text normalizer driven by
// an auditable RuleSet file, plus canonical time formatting.

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace sdst {

struct RuleSet {
  std::string version;
  // Keys contain apostrophes ("i'd"); matched on whole [alnum'] runs.
  std::map<std::string, std::string> contractions;
  // Keys and values are space-separated word sequences ("guest house").
  std::map<std::string, std::string> spellings;
  // Punctuation dropped without leaving a space (apostrophes by default).
  std::u32string delete_chars;
  // Punctuation that survives (":" by default). Other punctuation becomes a
  // space.
  std::u32string keep_chars;
  // zero..nineteen, twenty, thirty, forty, fifty.
  std::map<std::string, int> number_words;

  static const RuleSet &Default();
  // Throws Parse or InvalidArgument when a table breaks its invariants.
  static RuleSet FromJsonText(std::string_view json_text);
  static RuleSet Load(const std::string &path);
  std::string ToJson() const;
};

// The bundled default rules as JSON text.
std::string_view DefaultRulesJson();

enum class TimeFormat { k12Hour, k24Hour };

class Normalizer {
 public:
  explicit Normalizer(const RuleSet &rules = RuleSet::Default(),
                      TimeFormat format = TimeFormat::k12Hour);
  ~Normalizer();
  Normalizer(Normalizer &&) noexcept;
  Normalizer &operator=(Normalizer &&) noexcept;

  // lowercase, ASCII quotes and dashes, contractions, punctuation, spelling
  // table, whitespace collapse, times. Idempotent.
  std::string NormalizeText(std::string_view text) const;

  // Rewrites "5pm", "5 p.m.", "5.30 pm", "17:30", "five thirty pm" ... to
  // "h:mm am|pm" (or zero-padded "HH:MM" in 24-hour mode). Everything else is
  // left untouched.
  std::string NormalizeTimes(std::string_view text) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string NormalizeText(std::string_view text, const RuleSet &rules = RuleSet::Default());
std::string NormalizeTimes(std::string_view text);

}  // namespace sdst

#endif  // SDST_NORMALIZER_H_
