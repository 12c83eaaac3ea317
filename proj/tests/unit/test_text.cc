// tests/unit/test_text.cc

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

#include "doctest.h"
#include "sdst/text.h"

using namespace sdst;

TEST_CASE("utf8 decode and encode round trip") {
  const std::string s = "caf\xC3\xA9 \xE2\x80\x94 \xF0\x9F\x98\x80";
  const std::u32string cps = DecodeUtf8(s);
  CHECK(cps.size() == 8);
  CHECK(cps[3] == U'é');
  CHECK(EncodeUtf8(cps) == s);
  CHECK(CodePointCount(s) == 8);
}

TEST_CASE("invalid utf8 becomes the replacement character") {
  const std::u32string cps = DecodeUtf8("a\xFF" "b");
  REQUIRE(cps.size() == 3);
  CHECK(cps[1] == U'�');
}

TEST_CASE("substring by code points") {
  CHECK(SubstringCp("caf\xC3\xA9 noir", 2, 4) == "f\xC3\xA9");
  CHECK(SubstringCp("abc", 1, 1).empty());
}

TEST_CASE("canonicalize lowercases and collapses whitespace") {
  CHECK(Canonicalize("  The  Gonville\tHOTEL \n") == "the gonville hotel");
  CHECK(Canonicalize("\xC3\x89" "COLE") == "\xC3\xA9" "cole");
  CHECK(Canonicalize("").empty());
  CHECK(Canonicalize(" \t ").empty());
}

TEST_CASE("word boundary containment") {
  CHECK(ContainsAtWordBoundary("user: to Huntingdon. agent: ok", "huntingdon"));
  CHECK_FALSE(ContainsAtWordBoundary("the curry gardens", "curry garden"));
  CHECK_FALSE(ContainsAtWordBoundary("scambridge", "cambridge"));
  CHECK(ContainsAtWordBoundary("from  Cambridge", "cambridge"));
  CHECK_FALSE(ContainsAtWordBoundary("anything", ""));
}

TEST_CASE("tokenize strips edge punctuation and keeps offsets") {
  const auto tokens = Tokenize("Hi, \"Kings College\"!");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].lower == "hi");
  CHECK(tokens[1].lower == "kings");
  CHECK(tokens[1].start == 5);
  CHECK(tokens[2].lower == "college");
  CHECK(tokens[2].end == 18);
}

TEST_CASE("find phrase matches whole tokens only") {
  auto span = FindPhrase("I need the Gonville Hotel, please", "gonville hotel");
  REQUIRE(span);
  CHECK(span->start == 11);
  CHECK(span->end == 25);
  CHECK_FALSE(FindPhrase("the curry gardens", "curry garden"));
  CHECK_FALSE(FindPhrase("anything", ""));
}

TEST_CASE("csv quoting") {
  CHECK(CsvField("plain") == "plain");
  CHECK(CsvField("a,b") == "\"a,b\"");
  CHECK(CsvField("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("fixed formatting and stable hash") {
  CHECK(FormatFixed(0.125, 2) == "0.12");
  CHECK(FormatFixed(90.0, 4) == "90.0000");
  CHECK(StableHash("") == 0xcbf29ce484222325ULL);
  CHECK(StableHash("a") == 0xaf63dc4c8601ec8cULL);
}
