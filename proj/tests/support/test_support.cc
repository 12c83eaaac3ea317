// tests/support/test_support.cc

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

#include "test_support.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include <unistd.h>

#include "sdst/text.h"

namespace sdst::testing {

std::string ToyDir() { return SDST_SOURCE_DIR "/data/toy"; }
std::string GoldenDir() { return SDST_SOURCE_DIR "/tests/golden"; }
std::string RulesPath() { return SDST_SOURCE_DIR "/data/rules/default_rules.json"; }

std::string MakeTempDir(const std::string &tag) {
  static int counter = 0;
  const auto base = std::filesystem::temp_directory_path() /
                    ("sdst_" + tag + "_" + std::to_string(::getpid()) + "_" +
                     std::to_string(counter++));
  std::filesystem::remove_all(base);
  std::filesystem::create_directories(base);
  return base.string();
}

std::size_t Pick(Rng &rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool Coin(Rng &rng, double p) { return std::bernoulli_distribution(p)(rng); }

namespace {

const std::vector<std::string> kWords = {
    "north", "cambridge", "red", "lion", "city", "centre", "ely", "kings", "college",
    "bridge", "a=b", "x", "gonville", "museum", "st", "café", "pizza", "hut", "norwich", "ávila"};

const std::vector<std::string> kFiller = {"i", "need", "please", "the", "to", "from", "want",
                                          "book", "a", "and", "thanks", "there"};

std::string Noise(Rng &rng, const std::string &text) {
  std::u32string cps = DecodeUtf8(text);
  const std::size_t edits = Pick(rng, 3);
  for (std::size_t e = 0; e < edits && !cps.empty(); ++e) {
    const std::size_t pos = Pick(rng, cps.size());
    switch (Pick(rng, 3)) {
      case 0: cps[pos] = U'a' + static_cast<char32_t>(Pick(rng, 26)); break;
      case 1: cps.erase(pos, 1); break;
      default: cps.insert(cps.begin() + static_cast<std::ptrdiff_t>(pos), U'e'); break;
    }
  }
  std::string out = EncodeUtf8(cps);
  return Trim(out).empty() ? text : out;
}

}  // namespace

SlotSchema RandomSchema(Rng &rng) {
  std::vector<SlotDef> slots;
  int domain = 0;
  for (SlotKind kind : {SlotKind::kCategorical, SlotKind::kNonCategorical, SlotKind::kTime}) {
    const std::size_t n = 2 + Pick(rng, 3);
    for (std::size_t i = 0; i < n; ++i) {
      SlotDef def;
      def.name = "d" + std::to_string(domain % 3) + "-s" + std::to_string(slots.size());
      def.kind = kind;
      if (kind == SlotKind::kCategorical) {
        const std::size_t values = 2 + Pick(rng, 3);
        for (std::size_t v = 0; v < values; ++v) def.allowed_values.push_back("v" + std::to_string(v));
      }
      slots.push_back(std::move(def));
      ++domain;
    }
  }
  return SlotSchema(std::move(slots));
}

std::string RandomValue(Rng &rng) {
  const std::size_t n = 1 + Pick(rng, 4);
  std::string v;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) v += ' ';
    v += kWords[Pick(rng, kWords.size())];
  }
  return v;
}

namespace {

std::string RandomValueFor(Rng &rng, const SlotDef &def) {
  switch (def.kind) {
    case SlotKind::kCategorical: return def.allowed_values[Pick(rng, def.allowed_values.size())];
    case SlotKind::kTime:
      return std::to_string(1 + Pick(rng, 12)) + ":" + std::to_string(10 + Pick(rng, 50)) +
             (Coin(rng) ? " am" : " pm");
    case SlotKind::kNonCategorical: break;
  }
  return RandomValue(rng);
}

}  // namespace

DialogueState RandomState(Rng &rng, const SlotSchema &schema) {
  DialogueState s;
  for (const SlotDef &def : schema.slots()) {
    if (Coin(rng, 0.4)) s.Set(def.name, RandomValueFor(rng, def));
  }
  return s;
}

Corpus RandomCorpus(Rng &rng, std::size_t dialogues) {
  SlotSchema schema = RandomSchema(rng);
  std::vector<Dialogue> out;
  for (std::size_t d = 0; d < dialogues; ++d) {
    Dialogue dialogue;
    dialogue.id = "r" + std::to_string(d);
    DialogueState state;
    const std::size_t user_turns = 1 + Pick(rng, 4);
    for (std::size_t k = 0; k < user_turns; ++k) {
      std::vector<std::string> words;
      for (std::size_t f = 0; f < 1 + Pick(rng, 3); ++f) words.push_back(kFiller[Pick(rng, kFiller.size())]);
      const std::size_t changes = Pick(rng, 3);
      for (std::size_t c = 0; c < changes; ++c) {
        const SlotDef &def = schema.slots()[Pick(rng, schema.slots().size())];
        const std::string value = RandomValueFor(rng, def);
        state.Set(def.name, value);
        if (Coin(rng, 0.8)) words.push_back(value);
        words.push_back(kFiller[Pick(rng, kFiller.size())]);
      }
      Turn user;
      user.speaker = Speaker::kUser;
      user.gold_text = Join(words, " ");
      user.hyp_text = Noise(rng, user.gold_text);
      user.gold_state = state;
      dialogue.turns.push_back(std::move(user));
      if (k + 1 < user_turns || Coin(rng)) {
        Turn agent;
        agent.speaker = Speaker::kAgent;
        agent.gold_text = "ok " + kWords[Pick(rng, kWords.size())];
        dialogue.turns.push_back(std::move(agent));
      }
    }
    out.push_back(std::move(dialogue));
  }
  return Corpus(std::move(schema), std::move(out));
}

PredictionSet RandomPredictions(Rng &rng, const Corpus &corpus) {
  PredictionSet preds;
  preds.provenance = "random";
  const SlotSchema &schema = corpus.schema();
  for (const Dialogue &d : corpus.dialogues()) {
    for (std::size_t k = 0; k < d.NumUserTurns(); ++k) {
      if (Coin(rng, 0.1)) continue;
      DialogueState s = *d.UserTurn(k).gold_state;
      std::vector<std::string> names;
      for (const auto &[slot, value] : s.entries()) names.push_back(slot);
      for (const std::string &slot : names) {
        if (Coin(rng, 0.15)) s.Erase(slot);
        else if (Coin(rng, 0.15)) s.Set(slot, RandomValueFor(rng, *schema.Find(slot)));
      }
      if (Coin(rng, 0.2)) {
        const SlotDef &def = schema.slots()[Pick(rng, schema.slots().size())];
        s.Set(def.name, RandomValueFor(rng, def));
      }
      preds.entries[{d.id, k}] = std::move(s);
      ++preds.rows_read;
    }
  }
  return preds;
}

std::string RandomMessyText(Rng &rng) {
  static const std::vector<std::string> pieces = {
      "I'd", "We're", "can't", "Hotel", "GUEST HOUSE", "guest", "house", "5pm", "5 PM", "17:30",
      "12:00", "0:15", "5.30 p.m.", "five thirty pm", "twelve am", "at", "the", "Centre",
      "center", "theater", "Portuguese", "“quoted”", "dash\xE2\x80\x94" "dash", "!", "?", ",",
      "...", ":", "::", "a:b", "10:5", "99:99", "7:45am", "3 a.m.", "o'clock", "rock'n'roll",
      "ÉCOLE", "naïve", "x", "1", "2", "twenty", "one", "oh", "five", "p.m.", "am", "pm",
      "favorite", "travelers", "-", "'", "''", "\t", "  "};
  const std::size_t n = Pick(rng, 12);
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && Coin(rng, 0.8)) out += ' ';
    out += pieces[Pick(rng, pieces.size())];
  }
  return out;
}

std::size_t NaiveLevenshtein(const std::u32string &a, const std::u32string &b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  const std::u32string ta = a.substr(1), tb = b.substr(1);
  const std::size_t sub = NaiveLevenshtein(ta, tb) + (a[0] == b[0] ? 0 : 1);
  const std::size_t del = NaiveLevenshtein(ta, b) + 1;
  const std::size_t ins = NaiveLevenshtein(a, tb) + 1;
  return std::min(sub, std::min(del, ins));
}

std::size_t MatrixLevenshtein(const std::u32string &a, const std::u32string &b) {
  std::vector<std::vector<std::size_t>> m(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) m[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) m[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      m[i][j] = std::min({m[i - 1][j] + 1, m[i][j - 1] + 1,
                          m[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0u : 1u)});
    }
  }
  return m[a.size()][b.size()];
}

std::string AsciiCanon(const std::string &s) {
  std::istringstream in(s);
  std::string word, out;
  while (in >> word) {
    for (char &c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out;
}

OracleMetrics ComputeOracleMetrics(const PredictionSet &preds, const Corpus &corpus) {
  std::size_t turns = 0, joint = 0, slot_sets = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> table;
  for (const Dialogue &d : corpus.dialogues()) {
    std::size_t k = 0;
    for (const Turn &t : d.turns) {
      if (t.speaker != Speaker::kUser) continue;
      std::map<std::string, std::string> gold(t.gold_state->entries().begin(),
                                              t.gold_state->entries().end());
      std::map<std::string, std::string> pred;
      auto it = preds.entries.find({d.id, k});
      if (it != preds.entries.end()) pred.insert(it->second.entries().begin(), it->second.entries().end());
      ++turns;
      if (gold == pred) ++joint;
      std::set<std::string> gs, ps;
      for (const auto &e : gold) gs.insert(e.first);
      for (const auto &e : pred) ps.insert(e.first);
      if (gs == ps) ++slot_sets;
      for (const auto &[slot, value] : pred) {
        auto &cell = table[slot];
        ++cell.first;
        auto g = gold.find(slot);
        if (g != gold.end() && g->second == value) ++cell.second;
      }
      ++k;
    }
  }
  OracleMetrics m;
  m.jga = turns == 0 ? 0.0 : static_cast<double>(joint) / static_cast<double>(turns);
  m.sta = turns == 0 ? 0.0 : static_cast<double>(slot_sets) / static_cast<double>(turns);
  m.per_slot.assign(table.begin(), table.end());
  return m;
}

std::string OracleCategory(const std::string &gold, const std::optional<std::string> &predicted,
                           const std::string &context) {
  if (!predicted) return "omitted";
  const std::string g = AsciiCanon(gold);
  const std::string c = AsciiCanon(context);
  const bool ds = AsciiCanon(*predicted) == g;
  bool ctx = false;
  for (std::size_t i = 0; !g.empty() && i + g.size() <= c.size(); ++i) {
    if (c.compare(i, g.size(), g) != 0) continue;
    const bool left = i == 0 || !std::isalnum(static_cast<unsigned char>(c[i - 1]));
    const std::size_t j = i + g.size();
    const bool right = j == c.size() || !std::isalnum(static_cast<unsigned char>(c[j]));
    ctx = ctx || (left && right);
  }
  return std::string(ds ? "ds_match" : "ds_no_match") + (ctx ? "_ctx_match" : "_ctx_no_match");
}

OracleNgram OracleBestNgram(const std::string &value, const std::string &context) {
  const std::string v = AsciiCanon(value);
  std::vector<std::string> words;
  std::istringstream in(AsciiCanon(context));
  for (std::string w; in >> w;) words.push_back(w);
  std::size_t vw = 0;
  std::istringstream vin(v);
  for (std::string w; vin >> w;) ++vw;

  OracleNgram best;
  bool found = false;
  std::size_t best_start = 0, best_n = 0;
  for (std::size_t n = 1; n <= words.size(); ++n) {
    if (n + 1 < vw || n > vw + 2) continue;
    for (std::size_t s = 0; s + n <= words.size(); ++s) {
      std::string gram;
      for (std::size_t i = s; i < s + n; ++i) gram += (i > s ? " " : "") + words[i];
      while (!gram.empty() && !std::isalnum(static_cast<unsigned char>(gram.front()))) gram.erase(0, 1);
      while (!gram.empty() && !std::isalnum(static_cast<unsigned char>(gram.back()))) gram.pop_back();
      const std::u32string a(gram.begin(), gram.end()), b(v.begin(), v.end());
      const double len = static_cast<double>(std::max(a.size(), b.size()));
      const double score = 100.0 * (len - static_cast<double>(MatrixLevenshtein(a, b))) / len;
      const bool earlier = s < best_start || (s == best_start && n < best_n);
      if (!found || score > best.score || (score == best.score && earlier)) {
        best = {score, gram};
        best_start = s;
        best_n = n;
        found = true;
      }
    }
  }
  return best;
}

}  // namespace sdst::testing
