// src/normalizer.cc

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

#include "sdst/normalizer.h"

#include <algorithm>
#include <cstdio>
#include <regex>
#include <set>
#include <vector>

#include "json.hpp"
#include "sdst/corpus.h"
#include "sdst/error.h"
#include "sdst/text.h"

namespace sdst {

namespace {

std::vector<std::string> Words(std::string_view text) { return SplitWhitespace(text); }

void CheckTable(const std::map<std::string, std::string> &table, const char *name) {
  std::set<std::string> key_words;
  for (const auto &[key, value] : table) {
    if (Canonicalize(key) != key || key.empty()) {
      throw Error(ErrorCode::kInvalidArgument, key,
                  std::string(name) + " keys must be non-empty canonical text");
    }
    for (const std::string &w : Words(key)) key_words.insert(w);
  }
  // Applying a table twice must equal applying it once.
  for (const auto &[key, value] : table) {
    if (table.count(value) != 0) {
      throw Error(ErrorCode::kInvalidArgument, value,
                  std::string(name) + " output is itself a key");
    }
    for (const std::string &w : Words(value)) {
      if (key_words.count(w) != 0) {
        throw Error(ErrorCode::kInvalidArgument, value,
                    std::string(name) + " output reuses a key word");
      }
    }
  }
}

bool IsApostrophe(char32_t c) { return c == U'\''; }

char32_t AsciiPunct(char32_t c) {
  switch (c) {
    case U'\u2018': case U'\u2019': case U'\u201A': case U'\u201B':
    case U'\u02BC': case U'\u2032': case U'`': case U'\u00B4':
      return U'\'';
    case U'\u201C': case U'\u201D': case U'\u201E': case U'\u201F':
    case U'\u2033': case U'\u00AB': case U'\u00BB':
      return U'"';
    case U'\u2010': case U'\u2011': case U'\u2012': case U'\u2013':
    case U'\u2014': case U'\u2015': case U'\u2212':
      return U'-';
    default:
      return c;
  }
}

struct TimeValue {
  int hour24 = 0;
  int minute = 0;
};

// Resolves an hour/minute pair with an optional meridiem ('a', 'p' or 0).
std::optional<TimeValue> ResolveTime(int hour, int minute, char meridiem) {
  if (minute < 0 || minute > 59 || hour < 0) return std::nullopt;
  if (meridiem == 0) {
    if (hour > 23) return std::nullopt;
    return TimeValue{hour, minute};
  }
  if (hour == 0) return TimeValue{0, minute};
  if (hour <= 12) {
    const int base = hour % 12;
    return TimeValue{meridiem == 'p' ? base + 12 : base, minute};
  }
  if (hour <= 23) return TimeValue{hour, minute};
  return std::nullopt;
}

std::string FormatTime(const TimeValue &t, TimeFormat format) {
  char buf[32];
  if (format == TimeFormat::k24Hour) {
    std::snprintf(buf, sizeof buf, "%02d:%02d", t.hour24, t.minute);
  } else {
    const int h12 = t.hour24 % 12 == 0 ? 12 : t.hour24 % 12;
    std::snprintf(buf, sizeof buf, "%d:%02d %s", h12, t.minute, t.hour24 < 12 ? "am" : "pm");
  }
  return buf;
}

template <typename Fn>
std::string ReplaceAll(const std::string &text, const std::regex &re, Fn &&fn) {
  std::string out;
  auto begin = std::sregex_iterator(text.begin(), text.end(), re);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const std::smatch &m = *it;
    out.append(text, last, static_cast<std::size_t>(m.position(0)) - last);
    out += fn(m);
    last = static_cast<std::size_t>(m.position(0) + m.length(0));
  }
  out.append(text, last, std::string::npos);
  return out;
}

std::string AlternationOf(std::vector<std::string> words) {
  std::sort(words.begin(), words.end(), [](const std::string &a, const std::string &b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  return Join(words, "|");
}

// Applies a word-sequence table to whitespace-separated text, longest key
// first, left to right.
std::string ApplyWordTable(const std::string &text,
                           const std::map<std::string, std::string> &table,
                           std::size_t max_key_words) {
  if (table.empty()) return text;
  const std::vector<std::string> words = Words(text);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < words.size();) {
    bool replaced = false;
    for (std::size_t n = std::min(max_key_words, words.size() - i); n >= 1; --n) {
      std::vector<std::string> window(words.begin() + static_cast<long>(i),
                                      words.begin() + static_cast<long>(i + n));
      auto it = table.find(Join(window, " "));
      if (it != table.end()) {
        out.push_back(it->second);
        i += n;
        replaced = true;
        break;
      }
    }
    if (!replaced) out.push_back(words[i++]);
  }
  return Join(out, " ");
}

constexpr const char *kMeridiem = R"(([ap])\.?[ \t]?m\.?(?![0-9a-z\x80-\xff]))";

}  // namespace

std::string_view DefaultRulesJsonText();  // generated from data/rules

std::string_view DefaultRulesJson() { return DefaultRulesJsonText(); }

RuleSet RuleSet::FromJsonText(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParse, "rules", e.what());
  }
  RuleSet rules;
  try {
    rules.version = doc.value("version", "");
    for (const auto &[k, v] : doc.at("contractions").items()) {
      rules.contractions.emplace(k, v.get<std::string>());
    }
    for (const auto &[k, v] : doc.at("spellings").items()) {
      rules.spellings.emplace(k, v.get<std::string>());
    }
    const auto &punct = doc.at("punctuation");
    rules.delete_chars = DecodeUtf8(punct.value("delete", ""));
    rules.keep_chars = DecodeUtf8(punct.value("keep", ""));
    for (const auto &[k, v] : doc.at("number_words").items()) {
      const int value = v.get<int>();
      if (value < 0 || value > 59) {
        throw Error(ErrorCode::kInvalidArgument, k, "number words must lie in 0..59");
      }
      rules.number_words.emplace(k, value);
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParse, "rules", e.what());
  }
  CheckTable(rules.contractions, "contraction");
  CheckTable(rules.spellings, "spelling");
  return rules;
}

RuleSet RuleSet::Load(const std::string &path) {
  try {
    return FromJsonText(ReadFile(path));
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw e.WithLocation(path);
  }
}

const RuleSet &RuleSet::Default() {
  static const RuleSet rules = FromJsonText(DefaultRulesJsonText());
  return rules;
}

std::string RuleSet::ToJson() const {
  nlohmann::ordered_json doc;
  doc["version"] = version;
  doc["contractions"] = contractions;
  doc["spellings"] = spellings;
  doc["punctuation"] = {{"delete", EncodeUtf8(delete_chars)}, {"keep", EncodeUtf8(keep_chars)}};
  doc["number_words"] = number_words;
  return doc.dump(2) + "\n";
}

struct Normalizer::Impl {
  RuleSet rules;
  TimeFormat format;
  std::size_t max_spelling_words = 1;
  std::regex word_time;
  std::regex digit_time;
  std::regex clock_time;

  int WordValue(const std::string &w) const {
    auto it = rules.number_words.find(w);
    return it == rules.number_words.end() ? -1 : it->second;
  }

  int MinuteValue(const std::string &phrase) const {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : phrase) {
      if (c == ' ' || c == '\t' || c == '-') {
        if (!cur.empty()) parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      }
    }
    if (!cur.empty()) parts.push_back(cur);
    if (parts.size() == 1) return WordValue(parts[0]);
    if (parts.size() == 2) {
      if (parts[0] == "oh" || parts[0] == "o") return WordValue(parts[1]);
      return WordValue(parts[0]) + WordValue(parts[1]);
    }
    return -1;
  }
};

Normalizer::Normalizer(const RuleSet &rules, TimeFormat format)
    : impl_(std::make_unique<Impl>()) {
  impl_->rules = rules;
  impl_->format = format;
  for (const auto &[key, value] : rules.spellings) {
    impl_->max_spelling_words = std::max(impl_->max_spelling_words, Words(key).size());
  }

  std::vector<std::string> hours, units, teens, tens;
  for (const auto &[word, value] : rules.number_words) {
    if (value >= 1 && value <= 12) hours.push_back(word);
    if (value >= 1 && value <= 9) units.push_back(word);
    if (value >= 10 && value <= 19) teens.push_back(word);
    if (value >= 20 && value % 10 == 0) tens.push_back(word);
  }
  const auto flags = std::regex::ECMAScript | std::regex::icase | std::regex::optimize;
  if (!hours.empty()) {
    std::string minute = "(?:oh|o)[ \\t-]+(?:" + AlternationOf(units) + ")";
    if (!tens.empty()) {
      minute += "|(?:" + AlternationOf(tens) + ")";
      if (!units.empty()) minute += "(?:[ \\t-]+(?:" + AlternationOf(units) + "))?";
    }
    if (!teens.empty()) minute += "|" + AlternationOf(teens);
    impl_->word_time = std::regex("(^|[^0-9a-z'\\x80-\\xff])(" + AlternationOf(hours) + ")(?:[ \\t-]+(" +
                                      minute + "))?[ \\t-]*" + kMeridiem,
                                  flags);
  } else {
    impl_->word_time = std::regex("$^");
  }
  impl_->digit_time = std::regex(
      std::string(R"((^|[^0-9a-z:.\x80-\xff])([0-9]{1,2})(?:[:.]([0-9]{2}))?[ \t]*)") + kMeridiem, flags);
  impl_->clock_time = std::regex(
      std::string(R"((^|[^0-9a-z:.\x80-\xff])([0-9]{1,2}):([0-9]{2})(?![0-9a-z:\x80-\xff])(?![ \t]*)") +
          R"([ap]\.?[ \t]?m\.?(?![0-9a-z\x80-\xff])))",
      flags);
}

Normalizer::~Normalizer() = default;
Normalizer::Normalizer(Normalizer &&) noexcept = default;
Normalizer &Normalizer::operator=(Normalizer &&) noexcept = default;

std::string Normalizer::NormalizeTimes(std::string_view input) const {
  const Impl &im = *impl_;
  std::string text(input);
  auto meridiem_of = [](const std::ssub_match &m) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(m.str()[0])));
  };

  text = ReplaceAll(text, im.word_time, [&](const std::smatch &m) -> std::string {
    const int hour = im.WordValue(ToLower(m[2].str()));
    const int minute = m[3].matched ? im.MinuteValue(m[3].str()) : 0;
    auto t = ResolveTime(hour, minute, meridiem_of(m[4]));
    if (!t) return m.str();
    return m[1].str() + FormatTime(*t, im.format);
  });
  text = ReplaceAll(text, im.digit_time, [&](const std::smatch &m) -> std::string {
    const int hour = std::stoi(m[2].str());
    const int minute = m[3].matched ? std::stoi(m[3].str()) : 0;
    auto t = ResolveTime(hour, minute, meridiem_of(m[4]));
    if (!t) return m.str();
    return m[1].str() + FormatTime(*t, im.format);
  });
  text = ReplaceAll(text, im.clock_time, [&](const std::smatch &m) -> std::string {
    auto t = ResolveTime(std::stoi(m[2].str()), std::stoi(m[3].str()), 0);
    if (!t) return m.str();
    return m[1].str() + FormatTime(*t, im.format);
  });
  return text;
}

namespace {

// Replaces every ':' that is not the separator of a valid H:MM / HH:MM time
// with a space.
std::u32string DropStrayColons(std::u32string text) {
  auto is_digit = [](char32_t c) { return c >= U'0' && c <= U'9'; };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != U':') continue;
    std::size_t b = i;
    while (b > 0 && is_digit(text[b - 1]) && i - b < 3) --b;
    const std::size_t hour_len = i - b;
    bool ok = hour_len >= 1 && hour_len <= 2 && (b == 0 || !IsAlnum(text[b - 1])) &&
              (b == 0 || text[b - 1] != U':');
    ok = ok && i + 2 < text.size();
    if (ok) {
      ok = is_digit(text[i + 1]) && is_digit(text[i + 2]) &&
           (i + 3 == text.size() || (!IsAlnum(text[i + 3]) && text[i + 3] != U':'));
    }
    if (ok) {
      const int hour = std::stoi(EncodeUtf8(text.substr(b, hour_len)));
      const int minute = (text[i + 1] - U'0') * 10 + (text[i + 2] - U'0');
      ok = hour <= 23 && minute <= 59;
    }
    if (!ok) text[i] = U' ';
  }
  return text;
}

}  // namespace

std::string Normalizer::NormalizeText(std::string_view input) const {
  const RuleSet &rules = impl_->rules;

  std::u32string cps = DecodeUtf8(input);
  for (char32_t &c : cps) c = AsciiPunct(ToLower(c));

  // Contractions over maximal runs of word characters and apostrophes.
  std::u32string expanded;
  for (std::size_t i = 0; i < cps.size();) {
    if (!(IsAlnum(cps[i]) || IsApostrophe(cps[i]))) {
      expanded.push_back(cps[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && (IsAlnum(cps[j]) || IsApostrophe(cps[j]))) ++j;
    const std::string word = EncodeUtf8(cps.substr(i, j - i));
    auto it = rules.contractions.find(word);
    expanded += DecodeUtf8(it != rules.contractions.end() ? it->second : word);
    i = j;
  }

  // Times first so "5.30 p.m." survives punctuation removal.
  std::u32string timed = DecodeUtf8(NormalizeTimes(EncodeUtf8(expanded)));

  std::u32string cleaned;
  for (char32_t c : timed) {
    if (rules.delete_chars.find(c) != std::u32string::npos) continue;
    if (rules.keep_chars.find(c) != std::u32string::npos || IsAlnum(c) || IsSpace(c)) {
      cleaned.push_back(c);
    } else {
      cleaned.push_back(U' ');
    }
  }

  std::string text = Canonicalize(EncodeUtf8(DropStrayColons(cleaned)));
  text = ApplyWordTable(text, rules.spellings, impl_->max_spelling_words);
  return Canonicalize(NormalizeTimes(text));
}

std::string NormalizeText(std::string_view text, const RuleSet &rules) {
  if (&rules == &RuleSet::Default()) {
    static const Normalizer normalizer;
    return normalizer.NormalizeText(text);
  }
  return Normalizer(rules).NormalizeText(text);
}

std::string NormalizeTimes(std::string_view text) {
  static const Normalizer normalizer;
  return normalizer.NormalizeTimes(text);
}

}  // namespace sdst
