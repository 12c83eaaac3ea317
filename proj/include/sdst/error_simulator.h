// include/sdst/error_simulator.h

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

#ifndef SDST_ERROR_SIMULATOR_H_
#define SDST_ERROR_SIMULATOR_H_

// Character-level ASR error simulation: an error matrix estimated from
// aligned (reference, hypothesis) transcripts, and matrix-guided injection of
// insertions, deletions and substitutions into slot-value spans.
//
// Sampling is fully specified so outputs are byte-identical across runs and
// platforms: a std::mt19937_64 engine, uniforms built from the top 53 bits,
// Knuth's multiplicative Poisson sampler and inverse-CDF discrete draws over
// the matrix's alphabet order.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdst/corpus.h"
#include "sdst/text.h"

namespace sdst {

struct TypeRates {
  double substitute = 1.0 / 3;
  double del = 1.0 / 3;
  double insert = 1.0 / 3;
};

class ErrorMatrix {
 public:
  ErrorMatrix() = default;
  // `sub_counts` is |alphabet| x |alphabet| (ref row, hyp column; the diagonal
  // counts matches). Throws InvalidArgument on shape mismatch or an unsorted
  // / repeated alphabet.
  ErrorMatrix(std::u32string alphabet, std::vector<std::vector<std::uint64_t>> sub_counts,
              std::vector<std::uint64_t> del_counts, std::vector<std::uint64_t> ins_counts,
              double smoothing = 1.0);

  // Throws EmptyCorpus for an empty list.
  static ErrorMatrix Estimate(const std::vector<std::pair<std::string, std::string>> &pairs);

  static ErrorMatrix FromJsonText(std::string_view json_text);
  static ErrorMatrix Load(const std::string &path);
  std::string ToJson() const;

  const std::u32string &alphabet() const { return alphabet_; }
  std::optional<std::size_t> IndexOf(char32_t c) const;

  std::uint64_t SubCount(char32_t ref, char32_t hyp) const;
  std::uint64_t DelCount(char32_t ref) const;
  std::uint64_t InsCount(char32_t hyp) const;

  // True when every off-diagonal, deletion and insertion count is zero.
  bool IsDiagonal() const;

  // Relative frequencies of the three error kinds over all errors; uniform
  // when no error was observed.
  TypeRates type_rates() const;

  // Smoothed P(hyp | ref) over the alphabet followed by the deletion cell.
  // Sums to 1. Characters outside the alphabet get the uniform row.
  std::vector<double> RowProbabilities(char32_t ref) const;

  // Smoothed distribution of the replacement for `ref`, diagonal excluded.
  // Empty when the alphabet has no other character.
  std::vector<std::pair<char32_t, double>> SubstitutionDistribution(char32_t ref) const;
  std::vector<std::pair<char32_t, double>> InsertionDistribution() const;

  bool operator==(const ErrorMatrix &) const = default;

 private:
  std::u32string alphabet_;
  std::vector<std::vector<std::uint64_t>> sub_;
  std::vector<std::uint64_t> del_;
  std::vector<std::uint64_t> ins_;
  double smoothing_ = 1.0;
};

enum class EditOpKind { kInsert, kDelete, kSubstitute };

struct InjectionConfig {
  double lambda = 1.0;  // Poisson mean of edits per span, in [0, 30]
  bool allow_insert = true;
  bool allow_delete = true;
  bool allow_substitute = true;
  std::uint64_t seed = 0;
  // Overrides the Poisson draw with a fixed number of edits per span.
  std::optional<std::size_t> fixed_edits;
  // Corrupt only the last user turn of each dialogue.
  bool last_turn_only = false;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  double Uniform();                     // [0, 1)
  std::size_t UniformIndex(std::size_t n);
  std::size_t Poisson(double lambda);
  // Index drawn proportionally to the non-negative weights.
  std::size_t Discrete(const std::vector<double> &weights);

 private:
  std::mt19937_64 engine_;
};

struct InjectedEdit {
  EditOpKind kind = EditOpKind::kSubstitute;
  std::size_t position = 0;  // in the text at the time of the edit
  char32_t from = 0;         // unset for insertions
  char32_t to = 0;           // unset for deletions
};

struct InjectionResult {
  std::string text;
  std::vector<CpSpan> spans;
  std::vector<InjectedEdit> edits;
};

// Spans must be valid and non-overlapping (SpanOverlap otherwise). Text
// outside the spans is never modified.
InjectionResult InjectErrors(std::string_view utterance, const std::vector<CpSpan> &spans,
                             const ErrorMatrix &matrix, const InjectionConfig &config,
                             Sampler &sampler);
InjectionResult InjectErrors(std::string_view utterance, const std::vector<CpSpan> &spans,
                             const ErrorMatrix &matrix, const InjectionConfig &config);

struct AugmentEdit {
  std::string dialogue_id;
  std::size_t user_turn = 0;
  InjectedEdit edit;
};

struct AugmentStats {
  std::size_t user_turns = 0;
  std::size_t turns_corrupted = 0;   // at least one edit applied
  std::size_t spans_targeted = 0;
  std::size_t values_skipped = 0;    // value not found verbatim or overlapping
};

struct AugmentResult {
  Corpus corpus;
  AugmentStats stats;
  std::vector<AugmentEdit> edits;
};

// Per dialogue, a Sampler seeded with seed ^ StableHash(id). Targets the
// non-categorical slots whose gold value is new or changed at that user turn,
// located in gold_text by whole-token search. Sets working_text on every user
// turn; gold states are left untouched.
AugmentResult AugmentCorpus(const Corpus &corpus, const ErrorMatrix &matrix,
                            const InjectionConfig &config);

// dialogue_id,user_turn,op,position,from,to
std::string AugmentEditsToCsv(const std::vector<AugmentEdit> &edits);

}  // namespace sdst

#endif  // SDST_ERROR_SIMULATOR_H_
