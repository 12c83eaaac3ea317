// src/text.cc

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

#include "sdst/text.h"

#include <algorithm>
#include <cstdio>

namespace sdst {

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    int len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(U'\uFFFD');
      ++i;
      continue;
    }
    if (i + len > n) {
      out.push_back(U'\uFFFD');
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms, surrogates and out-of-range values.
    static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (!ok || cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(U'\uFFFD');
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

std::size_t CodePointCount(std::string_view text) { return DecodeUtf8(text).size(); }

std::string SubstringCp(std::string_view text, std::size_t start, std::size_t end) {
  const std::u32string cps = DecodeUtf8(text);
  start = std::min(start, cps.size());
  end = std::clamp(end, start, cps.size());
  return EncodeUtf8(std::u32string_view(cps).substr(start, end - start));
}

bool IsSpace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v' || c == U'\u00A0' || (c >= U'\u2000' && c <= U'\u200A') ||
         c == U'\u2028' || c == U'\u2029' || c == U'\u202F' || c == U'\u3000';
}

bool IsAlnum(char32_t c) {
  if (c < 0x80) {
    return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') ||
           (c >= U'0' && c <= U'9');
  }
  // Latin-1 letters (minus the two arithmetic signs) and everything beyond
  // the Latin-1 punctuation blocks count as word characters.
  if (c >= 0xC0 && c <= 0x24F) return c != 0xD7 && c != 0xF7;
  if (c >= 0x370 && c < 0x2000) return true;
  if (c >= 0x3040) return c != 0xFFFD && !IsSpace(c);
  return false;
}

char32_t ToLower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  return c;
}

std::string ToLower(std::string_view text) {
  std::u32string cps = DecodeUtf8(text);
  for (char32_t &c : cps) c = ToLower(c);
  return EncodeUtf8(cps);
}

std::string Trim(std::string_view text) {
  const std::u32string cps = DecodeUtf8(text);
  std::size_t b = 0, e = cps.size();
  while (b < e && IsSpace(cps[b])) ++b;
  while (e > b && IsSpace(cps[e - 1])) --e;
  return EncodeUtf8(std::u32string_view(cps).substr(b, e - b));
}

std::string Canonicalize(std::string_view text) {
  const std::u32string cps = DecodeUtf8(text);
  std::u32string out;
  out.reserve(cps.size());
  bool pending_space = false;
  for (char32_t c : cps) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(ToLower(c));
  }
  return EncodeUtf8(out);
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> parts;
  const std::u32string cps = DecodeUtf8(text);
  std::u32string cur;
  for (char32_t c : cps) {
    if (IsSpace(c)) {
      if (!cur.empty()) parts.push_back(EncodeUtf8(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(EncodeUtf8(cur));
  return parts;
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

bool ContainsAtWordBoundary(std::string_view haystack, std::string_view needle) {
  const std::u32string h = DecodeUtf8(Canonicalize(haystack));
  const std::u32string n = DecodeUtf8(Canonicalize(needle));
  if (n.empty()) return false;
  for (std::size_t pos = h.find(n); pos != std::u32string::npos;
       pos = h.find(n, pos + 1)) {
    const bool left_ok = pos == 0 || !IsAlnum(h[pos - 1]);
    const std::size_t after = pos + n.size();
    const bool right_ok = after == h.size() || !IsAlnum(h[after]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

std::vector<Token> Tokenize(std::string_view text) {
  const std::u32string cps = DecodeUtf8(text);
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && IsSpace(cps[i])) ++i;
    std::size_t b = i;
    while (i < cps.size() && !IsSpace(cps[i])) ++i;
    std::size_t e = i;
    while (b < e && !IsAlnum(cps[b])) ++b;
    while (e > b && !IsAlnum(cps[e - 1])) --e;
    if (b == e) continue;
    std::u32string word = cps.substr(b, e - b);
    for (char32_t &c : word) c = ToLower(c);
    tokens.push_back(Token{EncodeUtf8(word), b, e});
  }
  return tokens;
}

std::optional<CpSpan> FindPhrase(std::string_view text, std::string_view phrase) {
  const std::vector<Token> hay = Tokenize(text);
  const std::vector<Token> pat = Tokenize(phrase);
  if (pat.empty() || pat.size() > hay.size()) return std::nullopt;
  for (std::size_t i = 0; i + pat.size() <= hay.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < pat.size(); ++k) {
      if (hay[i + k].lower != pat[k].lower) {
        match = false;
        break;
      }
    }
    if (match) return CpSpan{hay[i].start, hay[i + pat.size() - 1].end};
  }
  return std::nullopt;
}

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string FormatFixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::uint64_t StableHash(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sdst
