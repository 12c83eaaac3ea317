// include/sdst/text_metrics.h

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

#ifndef SDST_TEXT_METRICS_H_
#define SDST_TEXT_METRICS_H_

// Edit-distance primitives over Unicode characters and words.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sdst {

// Unit-cost Levenshtein distance between two sequences, O(|b|) memory.
template <typename Seq>
std::size_t EditDistance(const Seq &a, const Seq &b) {
  std::array<std::size_t, 64> small;
  std::vector<std::size_t> large;
  std::size_t *row = small.data();
  if (b.size() >= small.size()) {
    large.resize(b.size() + 1);
    row = large.data();
  }
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t best = std::min(up, row[j - 1]) + 1;
      const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = sub < best ? sub : best;
      diag = up;
    }
  }
  return row[b.size()];
}

// Character-level distance (code points, no canonicalization).
std::size_t Levenshtein(std::string_view a, std::string_view b);

enum class EditKind { kMatch, kSubstitute, kDelete, kInsert };

struct EditOp {
  EditKind kind = EditKind::kMatch;
  char32_t ref = 0;  // unset for kInsert
  char32_t hyp = 0;  // unset for kDelete

  bool operator==(const EditOp &) const = default;
};

using EditScript = std::vector<EditOp>;

// One optimal alignment. The backtrace walks from the end of both strings and
// prefers match, then substitute, then delete, then insert.
EditScript AlignChars(std::u32string_view ref, std::u32string_view hyp);
EditScript AlignChars(std::string_view ref, std::string_view hyp);

// Replays `script` over `ref`; returns the hypothesis it describes. Throws
// InvalidArgument if the script's ref side disagrees with `ref`.
std::u32string ApplyScript(std::u32string_view ref, const EditScript &script);
std::size_t ErrorCount(const EditScript &script);

enum class RateUnit { kWord, kChar };

// Levenshtein over words or characters divided by the reference length, both
// sides canonicalized first. Throws EmptyReference.
double EditRate(std::string_view ref, std::string_view hyp, RateUnit unit);

struct SimilarityScore {
  double score = 0.0;  // in [0, 100]
  std::string best_ngram;
};

// Closest word n-gram of `context` to `value`, n in [max(1, w-1), w+2] with w
// the value's word count, with punctuation trimmed from both ends of the
// n-gram. score = 100 * (1 - d / max(|g|, |v|)) on canonicalized characters;
// the earliest start, then the shorter n-gram, wins ties. Throws EmptyValue.
SimilarityScore BestNgramSimilarity(std::string_view value, std::string_view context);

}  // namespace sdst

#endif  // SDST_TEXT_METRICS_H_
