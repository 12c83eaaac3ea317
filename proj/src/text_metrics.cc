// src/text_metrics.cc

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

#include "sdst/text_metrics.h"

#include <algorithm>

#include "sdst/error.h"
#include "sdst/text.h"

namespace sdst {

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  return EditDistance(DecodeUtf8(a), DecodeUtf8(b));
}

EditScript AlignChars(std::u32string_view ref, std::u32string_view hyp) {
  const std::size_t n = ref.size(), m = hyp.size();
  const std::size_t w = m + 1;
  std::vector<std::size_t> d((n + 1) * w);
  for (std::size_t i = 0; i <= n; ++i) d[i * w] = i;
  for (std::size_t j = 0; j <= m; ++j) d[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      d[i * w + j] = std::min({d[(i - 1) * w + j] + 1, d[i * w + j - 1] + 1,
                               d[(i - 1) * w + j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1)});
    }
  }

  EditScript script;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const std::size_t cur = d[i * w + j];
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && d[(i - 1) * w + j - 1] == cur) {
      script.push_back({EditKind::kMatch, ref[i - 1], hyp[j - 1]});
      --i, --j;
    } else if (i > 0 && j > 0 && d[(i - 1) * w + j - 1] + 1 == cur) {
      script.push_back({EditKind::kSubstitute, ref[i - 1], hyp[j - 1]});
      --i, --j;
    } else if (i > 0 && d[(i - 1) * w + j] + 1 == cur) {
      script.push_back({EditKind::kDelete, ref[i - 1], 0});
      --i;
    } else {
      script.push_back({EditKind::kInsert, 0, hyp[j - 1]});
      --j;
    }
  }
  std::reverse(script.begin(), script.end());
  return script;
}

EditScript AlignChars(std::string_view ref, std::string_view hyp) {
  return AlignChars(DecodeUtf8(ref), DecodeUtf8(hyp));
}

std::u32string ApplyScript(std::u32string_view ref, const EditScript &script) {
  std::u32string out;
  std::size_t pos = 0;
  auto consume = [&](char32_t expected) {
    if (pos >= ref.size() || ref[pos] != expected) {
      throw Error(ErrorCode::kInvalidArgument, "script", "edit script does not fit reference");
    }
    ++pos;
  };
  for (const EditOp &op : script) {
    switch (op.kind) {
      case EditKind::kMatch:
        consume(op.ref);
        out.push_back(op.ref);
        break;
      case EditKind::kSubstitute:
        consume(op.ref);
        out.push_back(op.hyp);
        break;
      case EditKind::kDelete:
        consume(op.ref);
        break;
      case EditKind::kInsert:
        out.push_back(op.hyp);
        break;
    }
  }
  if (pos != ref.size()) {
    throw Error(ErrorCode::kInvalidArgument, "script", "edit script leaves reference unread");
  }
  return out;
}

std::size_t ErrorCount(const EditScript &script) {
  return static_cast<std::size_t>(std::count_if(
      script.begin(), script.end(), [](const EditOp &op) { return op.kind != EditKind::kMatch; }));
}

double EditRate(std::string_view ref, std::string_view hyp, RateUnit unit) {
  const std::string r = Canonicalize(ref);
  const std::string h = Canonicalize(hyp);
  if (unit == RateUnit::kWord) {
    const auto rw = SplitWhitespace(r);
    if (rw.empty()) throw Error(ErrorCode::kEmptyReference, "", "reference has no words");
    return static_cast<double>(EditDistance(rw, SplitWhitespace(h))) /
           static_cast<double>(rw.size());
  }
  const std::u32string rc = DecodeUtf8(r);
  if (rc.empty()) throw Error(ErrorCode::kEmptyReference, "", "reference has no characters");
  return static_cast<double>(EditDistance(rc, DecodeUtf8(h))) / static_cast<double>(rc.size());
}

SimilarityScore BestNgramSimilarity(std::string_view value, std::string_view context) {
  const std::u32string v = DecodeUtf8(Canonicalize(value));
  if (v.empty()) throw Error(ErrorCode::kEmptyValue, "", "value is empty");
  const std::size_t value_words = SplitWhitespace(EncodeUtf8(v)).size();
  const std::vector<std::string> words = SplitWhitespace(Canonicalize(context));

  SimilarityScore best;
  if (words.empty()) return best;
  bool found = false;
  const std::size_t n_lo = std::max<std::size_t>(1, value_words - 1);
  const std::size_t n_hi = value_words + 2;
  for (std::size_t start = 0; start < words.size(); ++start) {
    std::u32string gram;
    for (std::size_t n = 1; n <= n_hi && start + n <= words.size(); ++n) {
      if (n > 1) gram.push_back(U' ');
      gram += DecodeUtf8(words[start + n - 1]);
      if (n < n_lo) continue;
      std::size_t b = 0, e = gram.size();
      while (b < e && !IsAlnum(gram[b])) ++b;
      while (e > b && !IsAlnum(gram[e - 1])) --e;
      const std::u32string_view core = std::u32string_view(gram).substr(b, e - b);
      const std::size_t dist = EditDistance(core, std::u32string_view(v));
      const std::size_t len = std::max(core.size(), v.size());
      const double score = 100.0 * static_cast<double>(len - dist) / static_cast<double>(len);
      if (!found || score > best.score) {
        best.score = score;
        best.best_ngram = EncodeUtf8(core);
        found = true;
      }
    }
  }
  return best;
}

}  // namespace sdst
