// tests/unit/test_text_metrics.cc

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

#include <string>
#include <vector>

#include "doctest.h"
#include "sdst/error.h"
#include "sdst/text.h"
#include "sdst/text_metrics.h"
#include "test_support.h"

using namespace sdst;
using namespace sdst::testing;

namespace {

std::u32string RandomAsciiWord(Rng &rng, std::size_t max_len, const std::u32string &alphabet) {
  std::u32string s(Pick(rng, max_len + 1), U'a');
  for (char32_t &c : s) c = alphabet[Pick(rng, alphabet.size())];
  return s;
}

}  // namespace

TEST_CASE("levenshtein examples") {
  CHECK(Levenshtein("huntington", "huntingdon") == 1);
  CHECK(Levenshtein("", "abc") == 3);
  CHECK(Levenshtein("kitten", "sitting") == 3);
  CHECK(Levenshtein("caf\xC3\xA9", "cafe") == 1);
  CHECK(Levenshtein("Cambridge", "cambridge") == 1);
}

TEST_CASE("levenshtein agrees with both oracles on random short strings") {
  Rng rng(5);
  const std::u32string alphabet = U"abcé";
  for (int i = 0; i < 2000; ++i) {
    const std::u32string a = RandomAsciiWord(rng, 6, alphabet);
    const std::u32string b = RandomAsciiWord(rng, 6, alphabet);
    const std::size_t d = Levenshtein(EncodeUtf8(a), EncodeUtf8(b));
    CHECK(d == NaiveLevenshtein(a, b));
    CHECK(d == MatrixLevenshtein(a, b));
  }
}

TEST_CASE("levenshtein is a metric") {
  Rng rng(9);
  const std::u32string alphabet = U"abcd";
  for (int i = 0; i < 1000; ++i) {
    const std::string a = EncodeUtf8(RandomAsciiWord(rng, 8, alphabet));
    const std::string b = EncodeUtf8(RandomAsciiWord(rng, 8, alphabet));
    const std::string c = EncodeUtf8(RandomAsciiWord(rng, 8, alphabet));
    CHECK(Levenshtein(a, b) == Levenshtein(b, a));
    CHECK((Levenshtein(a, b) == 0) == (a == b));
    CHECK(Levenshtein(a, c) <= Levenshtein(a, b) + Levenshtein(b, c));
  }
}

TEST_CASE("long strings use the heap row") {
  const std::string a(200, 'a');
  std::string b = a;
  b[100] = 'b';
  CHECK(Levenshtein(a, b) == 1);
  CHECK(Levenshtein(a, "") == 200);
}

TEST_CASE("alignment examples") {
  const EditScript cat = AlignChars(std::string_view("cat"), std::string_view("cot"));
  REQUIRE(cat.size() == 3);
  CHECK(cat[0] == EditOp{EditKind::kMatch, U'c', U'c'});
  CHECK(cat[1] == EditOp{EditKind::kSubstitute, U'a', U'o'});
  CHECK(cat[2] == EditOp{EditKind::kMatch, U't', U't'});

  const EditScript same = AlignChars(std::string_view("abc"), std::string_view("abc"));
  REQUIRE(same.size() == 3);
  for (const EditOp &op : same) CHECK(op.kind == EditKind::kMatch);

  const EditScript del = AlignChars(std::string_view("ab"), std::string_view(""));
  REQUIRE(del.size() == 2);
  CHECK(del[0] == EditOp{EditKind::kDelete, U'a', 0});
  CHECK(del[1] == EditOp{EditKind::kDelete, U'b', 0});

  const EditScript ins = AlignChars(std::string_view(""), std::string_view("xy"));
  REQUIRE(ins.size() == 2);
  CHECK(ins[0].kind == EditKind::kInsert);
  CHECK(ins[1].hyp == U'y');
}

TEST_CASE("alignment is optimal and replays to the hypothesis") {
  Rng rng(21);
  const std::u32string alphabet = U"abcdü ";
  for (int i = 0; i < 2000; ++i) {
    const std::u32string a = RandomAsciiWord(rng, 10, alphabet);
    const std::u32string b = RandomAsciiWord(rng, 10, alphabet);
    const EditScript script = AlignChars(a, b);
    CHECK(ApplyScript(a, script) == b);
    CHECK(ErrorCount(script) == MatrixLevenshtein(a, b));
  }
}

TEST_CASE("apply script rejects a script for another reference") {
  const EditScript script = AlignChars(std::string_view("cat"), std::string_view("cot"));
  CHECK_THROWS_AS(ApplyScript(U"dog", script), Error);
  CHECK_THROWS_AS(ApplyScript(U"cats", script), Error);
}

TEST_CASE("edit rate") {
  CHECK(EditRate("i want a cheap hotel", "i want cheap hotels", RateUnit::kWord) ==
        doctest::Approx(0.4));
  CHECK(EditRate("same text", "same text", RateUnit::kWord) == 0.0);
  CHECK(EditRate("same text", "same text", RateUnit::kChar) == 0.0);
  CHECK(EditRate("abcd", "abed", RateUnit::kChar) == doctest::Approx(0.25));
  CHECK(EditRate("The  Hotel", "the hotel", RateUnit::kChar) == 0.0);
  CHECK(EditRate("ab", "abcdef", RateUnit::kChar) == doctest::Approx(2.0));
  try {
    EditRate("", "x", RateUnit::kChar);
    FAIL("expected EmptyReference");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kEmptyReference);
  }
  CHECK_THROWS_AS(EditRate("   ", "x", RateUnit::kWord), Error);
}

TEST_CASE("best n-gram similarity examples") {
  const SimilarityScore exact = BestNgramSimilarity("boney to boyd", "the train from boney to boyd leaves");
  CHECK(exact.score == 100.0);
  CHECK(exact.best_ngram == "boney to boyd");

  const SimilarityScore cam = BestNgramSimilarity("cambridge", "i leave from camebridge");
  CHECK(cam.best_ngram == "camebridge");
  CHECK(cam.score == doctest::Approx(90.0));

  const SimilarityScore empty = BestNgramSimilarity("x", "");
  CHECK(empty.score == 0.0);
  CHECK(empty.best_ngram.empty());

  CHECK_THROWS_AS(BestNgramSimilarity("  ", "context"), Error);
}

TEST_CASE("best n-gram trims punctuation and breaks ties by position") {
  const SimilarityScore punct = BestNgramSimilarity("huntingdon", "user: to huntington. agent: ok");
  CHECK(punct.best_ngram == "huntington");
  CHECK(punct.score == doctest::Approx(90.0));

  const SimilarityScore tie = BestNgramSimilarity("ab", "ax bx");
  CHECK(tie.best_ngram == "ax");
  CHECK(tie.score == doctest::Approx(50.0));
}

TEST_CASE("best n-gram matches the window oracle") {
  Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    std::string context;
    const std::size_t words = Pick(rng, 9);
    for (std::size_t w = 0; w < words; ++w) {
      context += (w > 0 ? " " : "") + RandomValue(rng).substr(0, 6 + Pick(rng, 4));
      if (Coin(rng, 0.2)) context += Coin(rng) ? "." : ",";
    }
    std::string value = RandomValue(rng);
    if (value.find_first_not_of(" ") == std::string::npos) continue;
    bool ascii = true;
    for (unsigned char c : context + value) ascii = ascii && c < 0x80;
    if (!ascii) continue;
    const SimilarityScore got = BestNgramSimilarity(value, context);
    const OracleNgram want = OracleBestNgram(value, context);
    CHECK(got.score == doctest::Approx(want.score));
    CHECK(got.best_ngram == want.ngram);
  }
}
