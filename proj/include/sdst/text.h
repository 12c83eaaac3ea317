// include/sdst/text.h

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

#ifndef SDST_TEXT_H_
#define SDST_TEXT_H_

// UTF-8 and canonicalization helpers shared by every module. All character
// offsets in the toolkit count Unicode scalar values, never bytes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdst {

// Invalid byte sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
std::size_t CodePointCount(std::string_view text);

// Substring by code-point offsets [start, end).
std::string SubstringCp(std::string_view text, std::size_t start, std::size_t end);

bool IsSpace(char32_t c);
bool IsAlnum(char32_t c);
// ASCII and Latin-1 letters only; other scripts pass through unchanged.
char32_t ToLower(char32_t c);
std::string ToLower(std::string_view text);

std::string Trim(std::string_view text);

// Lowercase, collapse internal whitespace runs to one space, trim.
std::string Canonicalize(std::string_view text);

std::vector<std::string> SplitWhitespace(std::string_view text);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// True when `needle` occurs in `haystack` bounded on both sides by a
// non-alphanumeric character or the string edge. Both are compared after
// canonicalization.
bool ContainsAtWordBoundary(std::string_view haystack, std::string_view needle);

// A word token of some text, with code-point offsets into that text.
struct Token {
  std::string lower;  // lowercased token text
  std::size_t start = 0;
  std::size_t end = 0;
};

// Whitespace-delimited tokens of `text` with leading and trailing
// non-alphanumerics stripped; offsets index the original text.
std::vector<Token> Tokenize(std::string_view text);

struct CpSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  bool operator==(const CpSpan &) const = default;
};
// First occurrence of `phrase` as a whole token sequence of `text` (tokens
// compared lowercased). Offsets index the original `text`.
std::optional<CpSpan> FindPhrase(std::string_view text, std::string_view phrase);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string CsvField(std::string_view field);

// printf("%.*f") in the C locale.
std::string FormatFixed(double value, int digits);

// Stable across platforms and runs (FNV-1a, 64 bit).
std::uint64_t StableHash(std::string_view text);

}  // namespace sdst

#endif  // SDST_TEXT_H_
