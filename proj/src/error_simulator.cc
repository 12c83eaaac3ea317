// src/error_simulator.cc

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

#include "sdst/error_simulator.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "json.hpp"
#include "sdst/error.h"
#include "sdst/text_metrics.h"

namespace sdst {

ErrorMatrix::ErrorMatrix(std::u32string alphabet, std::vector<std::vector<std::uint64_t>> sub_counts,
                         std::vector<std::uint64_t> del_counts,
                         std::vector<std::uint64_t> ins_counts, double smoothing)
    : alphabet_(std::move(alphabet)),
      sub_(std::move(sub_counts)),
      del_(std::move(del_counts)),
      ins_(std::move(ins_counts)),
      smoothing_(smoothing) {
  const std::size_t n = alphabet_.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (alphabet_[i - 1] >= alphabet_[i]) {
      throw Error(ErrorCode::kInvalidArgument, "alphabet", "alphabet must be sorted and unique");
    }
  }
  bool ok = sub_.size() == n && del_.size() == n && ins_.size() == n && smoothing_ >= 0.0;
  for (const auto &row : sub_) ok = ok && row.size() == n;
  if (!ok) throw Error(ErrorCode::kInvalidArgument, "matrix", "count shapes do not match alphabet");
}

ErrorMatrix ErrorMatrix::Estimate(const std::vector<std::pair<std::string, std::string>> &pairs) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyCorpus, "", "no transcript pairs");
  std::vector<EditScript> scripts;
  std::set<char32_t> chars;
  for (const auto &[ref, hyp] : pairs) {
    const std::u32string r = DecodeUtf8(Canonicalize(ref));
    const std::u32string h = DecodeUtf8(Canonicalize(hyp));
    chars.insert(r.begin(), r.end());
    chars.insert(h.begin(), h.end());
    scripts.push_back(AlignChars(r, h));
  }
  const std::u32string alphabet(chars.begin(), chars.end());
  const std::size_t n = alphabet.size();
  auto index = [&](char32_t c) {
    return static_cast<std::size_t>(std::lower_bound(alphabet.begin(), alphabet.end(), c) -
                                    alphabet.begin());
  };
  std::vector<std::vector<std::uint64_t>> sub(n, std::vector<std::uint64_t>(n, 0));
  std::vector<std::uint64_t> del(n, 0), ins(n, 0);
  for (const EditScript &script : scripts) {
    for (const EditOp &op : script) {
      switch (op.kind) {
        case EditKind::kMatch:
        case EditKind::kSubstitute:
          ++sub[index(op.ref)][index(op.hyp)];
          break;
        case EditKind::kDelete:
          ++del[index(op.ref)];
          break;
        case EditKind::kInsert:
          ++ins[index(op.hyp)];
          break;
      }
    }
  }
  return ErrorMatrix(alphabet, std::move(sub), std::move(del), std::move(ins));
}

ErrorMatrix ErrorMatrix::FromJsonText(std::string_view json_text) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(json_text);
    std::u32string alphabet;
    for (const auto &c : doc.at("alphabet")) {
      const std::u32string cp = DecodeUtf8(c.get<std::string>());
      if (cp.size() != 1) {
        throw Error(ErrorCode::kInvalidArgument, c.get<std::string>(),
                    "alphabet entries must be single characters");
      }
      alphabet.push_back(cp[0]);
    }
    return ErrorMatrix(alphabet, doc.at("sub_counts").get<std::vector<std::vector<std::uint64_t>>>(),
                       doc.at("del_counts").get<std::vector<std::uint64_t>>(),
                       doc.at("ins_counts").get<std::vector<std::uint64_t>>(),
                       doc.value("smoothing", 1.0));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParse, "matrix", e.what());
  }
}

ErrorMatrix ErrorMatrix::Load(const std::string &path) {
  try {
    return FromJsonText(ReadFile(path));
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw e.WithLocation(path);
  }
}

std::string ErrorMatrix::ToJson() const {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json alphabet = nlohmann::ordered_json::array();
  for (char32_t c : alphabet_) alphabet.push_back(EncodeUtf8(std::u32string(1, c)));
  doc["alphabet"] = std::move(alphabet);
  doc["sub_counts"] = sub_;
  doc["del_counts"] = del_;
  doc["ins_counts"] = ins_;
  doc["smoothing"] = smoothing_;
  // One matrix row per line keeps large files diffable.
  std::string out = "{\n";
  out += "  \"alphabet\": " + doc["alphabet"].dump() + ",\n";
  out += "  \"sub_counts\": [\n";
  for (std::size_t i = 0; i < sub_.size(); ++i) {
    out += "    " + nlohmann::json(sub_[i]).dump() + (i + 1 < sub_.size() ? ",\n" : "\n");
  }
  out += "  ],\n";
  out += "  \"del_counts\": " + doc["del_counts"].dump() + ",\n";
  out += "  \"ins_counts\": " + doc["ins_counts"].dump() + ",\n";
  out += "  \"smoothing\": " + doc["smoothing"].dump() + "\n}\n";
  return out;
}

std::optional<std::size_t> ErrorMatrix::IndexOf(char32_t c) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), c);
  if (it == alphabet_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet_.begin());
}

std::uint64_t ErrorMatrix::SubCount(char32_t ref, char32_t hyp) const {
  auto r = IndexOf(ref), h = IndexOf(hyp);
  return r && h ? sub_[*r][*h] : 0;
}

std::uint64_t ErrorMatrix::DelCount(char32_t ref) const {
  auto r = IndexOf(ref);
  return r ? del_[*r] : 0;
}

std::uint64_t ErrorMatrix::InsCount(char32_t hyp) const {
  auto h = IndexOf(hyp);
  return h ? ins_[*h] : 0;
}

bool ErrorMatrix::IsDiagonal() const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (del_[i] != 0 || ins_[i] != 0) return false;
    for (std::size_t j = 0; j < alphabet_.size(); ++j) {
      if (i != j && sub_[i][j] != 0) return false;
    }
  }
  return true;
}

TypeRates ErrorMatrix::type_rates() const {
  std::uint64_t subs = 0, dels = 0, inss = 0;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    dels += del_[i];
    inss += ins_[i];
    for (std::size_t j = 0; j < alphabet_.size(); ++j) {
      if (i != j) subs += sub_[i][j];
    }
  }
  const double total = static_cast<double>(subs + dels + inss);
  if (total == 0) return TypeRates{};
  return TypeRates{static_cast<double>(subs) / total, static_cast<double>(dels) / total,
                   static_cast<double>(inss) / total};
}

std::vector<double> ErrorMatrix::RowProbabilities(char32_t ref) const {
  const std::size_t n = alphabet_.size();
  std::vector<double> row(n + 1, 1.0);
  if (auto r = IndexOf(ref)) {
    for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<double>(sub_[*r][j]) + smoothing_;
    row[n] = static_cast<double>(del_[*r]) + smoothing_;
  }
  double total = 0.0;
  for (double w : row) total += w;
  if (total <= 0.0) {
    std::fill(row.begin(), row.end(), 1.0 / static_cast<double>(n + 1));
    return row;
  }
  for (double &w : row) w /= total;
  return row;
}

std::vector<std::pair<char32_t, double>> ErrorMatrix::SubstitutionDistribution(char32_t ref) const {
  std::vector<std::pair<char32_t, double>> dist;
  const auto r = IndexOf(ref);
  double total = 0.0;
  for (std::size_t j = 0; j < alphabet_.size(); ++j) {
    if (alphabet_[j] == ref) continue;
    const double w = (r ? static_cast<double>(sub_[*r][j]) : 0.0) + smoothing_;
    dist.emplace_back(alphabet_[j], w);
    total += w;
  }
  for (auto &[c, w] : dist) {
    w = total > 0.0 ? w / total : 1.0 / static_cast<double>(dist.size());
  }
  return dist;
}

std::vector<std::pair<char32_t, double>> ErrorMatrix::InsertionDistribution() const {
  std::vector<std::pair<char32_t, double>> dist;
  double total = 0.0;
  for (std::size_t j = 0; j < alphabet_.size(); ++j) {
    const double w = static_cast<double>(ins_[j]) + smoothing_;
    dist.emplace_back(alphabet_[j], w);
    total += w;
  }
  for (auto &[c, w] : dist) {
    w = total > 0.0 ? w / total : 1.0 / static_cast<double>(dist.size());
  }
  return dist;
}

double Sampler::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Sampler::UniformIndex(std::size_t n) {
  const auto i = static_cast<std::size_t>(Uniform() * static_cast<double>(n));
  return std::min(i, n - 1);
}

std::size_t Sampler::Poisson(double lambda) {
  const double limit = std::exp(-lambda);
  std::size_t k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= Uniform();
  } while (p > limit);
  return k - 1;
}

std::size_t Sampler::Discrete(const std::vector<double> &weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  const double u = Uniform() * total;
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cum += weights[i];
    last_positive = i;
    if (u < cum) return i;
  }
  return last_positive;
}

namespace {

template <typename T>
T Draw(Sampler &sampler, const std::vector<std::pair<T, double>> &dist) {
  std::vector<double> weights;
  weights.reserve(dist.size());
  for (const auto &entry : dist) weights.push_back(entry.second);
  return dist[sampler.Discrete(weights)].first;
}

}  // namespace

InjectionResult InjectErrors(std::string_view utterance, const std::vector<CpSpan> &spans,
                             const ErrorMatrix &matrix, const InjectionConfig &config,
                             Sampler &sampler) {
  if (!(config.lambda >= 0.0 && config.lambda <= 30.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda", "lambda must lie in [0, 30]");
  }
  if (!config.allow_insert && !config.allow_delete && !config.allow_substitute) {
    throw Error(ErrorCode::kInvalidArgument, "ops", "no edit operation allowed");
  }
  std::u32string text = DecodeUtf8(utterance);

  std::vector<std::size_t> order(spans.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return spans[a].start < spans[b].start; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const CpSpan &s = spans[order[i]];
    if (s.start > s.end || s.end > text.size()) {
      throw Error(ErrorCode::kInvalidArgument, "span", "span outside the utterance");
    }
    if (i > 0 && s.start < spans[order[i - 1]].end) {
      throw Error(ErrorCode::kSpanOverlap, "span", "value spans overlap");
    }
  }

  const TypeRates rates = matrix.type_rates();
  std::vector<std::pair<EditOpKind, double>> ops;
  if (config.allow_substitute) ops.emplace_back(EditOpKind::kSubstitute, rates.substitute);
  if (config.allow_delete) ops.emplace_back(EditOpKind::kDelete, rates.del);
  if (config.allow_insert) ops.emplace_back(EditOpKind::kInsert, rates.insert);
  double op_mass = 0.0;
  for (const auto &op : ops) op_mass += op.second;
  if (op_mass <= 0.0) {
    for (auto &op : ops) op.second = 1.0;
  }
  const auto insertion = matrix.InsertionDistribution();

  InjectionResult result;
  result.spans.resize(spans.size());
  std::ptrdiff_t shift = 0;
  for (std::size_t idx : order) {
    const CpSpan &orig = spans[idx];
    std::size_t start = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(orig.start) + shift);
    std::size_t end = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(orig.end) + shift);
    const std::size_t k = config.fixed_edits ? *config.fixed_edits : sampler.Poisson(config.lambda);
    for (std::size_t e = 0; e < k; ++e) {
      const EditOpKind kind = Draw(sampler, ops);
      const std::size_t len = end - start;
      if (kind == EditOpKind::kInsert) {
        if (insertion.empty()) continue;
        const std::size_t pos = start + sampler.UniformIndex(len + 1);
        const char32_t c = Draw(sampler, insertion);
        text.insert(text.begin() + static_cast<std::ptrdiff_t>(pos), c);
        ++end;
        result.edits.push_back({kind, pos, 0, c});
        continue;
      }
      if (len == 0) continue;
      const std::size_t pos = start + sampler.UniformIndex(len);
      const char32_t from = text[pos];
      if (kind == EditOpKind::kDelete) {
        text.erase(pos, 1);
        --end;
        result.edits.push_back({kind, pos, from, 0});
      } else {
        const auto dist = matrix.SubstitutionDistribution(from);
        if (dist.empty()) continue;
        const char32_t to = Draw(sampler, dist);
        text[pos] = to;
        result.edits.push_back({kind, pos, from, to});
      }
    }
    shift += static_cast<std::ptrdiff_t>(end - start) -
             static_cast<std::ptrdiff_t>(orig.end - orig.start);
    result.spans[idx] = CpSpan{start, end};
  }
  result.text = EncodeUtf8(text);
  return result;
}

InjectionResult InjectErrors(std::string_view utterance, const std::vector<CpSpan> &spans,
                             const ErrorMatrix &matrix, const InjectionConfig &config) {
  Sampler sampler(config.seed);
  return InjectErrors(utterance, spans, matrix, config, sampler);
}

AugmentResult AugmentCorpus(const Corpus &corpus, const ErrorMatrix &matrix,
                            const InjectionConfig &config) {
  AugmentResult result{corpus, {}, {}};
  const SlotSchema &schema = corpus.schema();
  for (Dialogue &d : result.corpus.mutable_dialogues()) {
    Sampler sampler(config.seed ^ StableHash(d.id));
    const std::size_t n_user = d.NumUserTurns();
    DialogueState previous;
    std::size_t k = 0;
    for (Turn &turn : d.turns) {
      if (!turn.is_user()) continue;
      const std::size_t user_turn = k++;
      ++result.stats.user_turns;
      const DialogueState &gold = *turn.gold_state;
      turn.working_text = turn.gold_text;
      const bool corrupt = !config.last_turn_only || user_turn + 1 == n_user;
      if (corrupt) {
        std::vector<CpSpan> targets;
        for (const auto &[slot, value] : gold.entries()) {
          const SlotDef *def = schema.Find(slot);
          if (def == nullptr || def->kind != SlotKind::kNonCategorical) continue;
          const std::string *before = previous.Get(slot);
          if (before != nullptr && *before == value) continue;
          if (auto span = FindPhrase(turn.gold_text, value)) {
            targets.push_back(*span);
          } else {
            ++result.stats.values_skipped;
          }
        }
        std::sort(targets.begin(), targets.end(),
                  [](const CpSpan &a, const CpSpan &b) { return a.start < b.start; });
        std::vector<CpSpan> spans;
        for (const CpSpan &s : targets) {
          if (!spans.empty() && s.start < spans.back().end) {
            ++result.stats.values_skipped;
            continue;
          }
          spans.push_back(s);
        }
        if (!spans.empty()) {
          InjectionResult injected = InjectErrors(turn.gold_text, spans, matrix, config, sampler);
          result.stats.spans_targeted += spans.size();
          if (!injected.edits.empty()) ++result.stats.turns_corrupted;
          for (const InjectedEdit &e : injected.edits) {
            result.edits.push_back({d.id, user_turn, e});
          }
          turn.working_text = std::move(injected.text);
        }
      }
      previous = gold;
    }
  }
  return result;
}

std::string AugmentEditsToCsv(const std::vector<AugmentEdit> &edits) {
  std::string out = "dialogue_id,user_turn,op,position,from,to\n";
  for (const AugmentEdit &e : edits) {
    const char *op = e.edit.kind == EditOpKind::kInsert   ? "insert"
                     : e.edit.kind == EditOpKind::kDelete ? "delete"
                                                          : "substitute";
    const std::string from = e.edit.from ? EncodeUtf8(std::u32string(1, e.edit.from)) : "";
    const std::string to = e.edit.to ? EncodeUtf8(std::u32string(1, e.edit.to)) : "";
    out += CsvField(e.dialogue_id) + "," + std::to_string(e.user_turn) + "," + op + "," +
           std::to_string(e.edit.position) + "," + CsvField(from) + "," + CsvField(to) + "\n";
  }
  return out;
}

}  // namespace sdst
