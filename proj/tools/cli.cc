// tools/cli.cc

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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdst/corpus.h"
#include "sdst/dst_metrics.h"
#include "sdst/entity_corrector.h"
#include "sdst/error.h"
#include "sdst/error_simulator.h"
#include "sdst/error_taxonomy.h"
#include "sdst/normalizer.h"
#include "sdst/report.h"
#include "sdst/state_codec.h"
#include "sdst/text.h"

namespace sdst {
namespace {

// Files are only written once a subcommand has computed all of them.
struct Output {
  std::string path;
  std::string content;
};
using Outputs = std::vector<Output>;

std::string ResolveOutput(const std::string &path) {
  const char *dir = std::getenv("SDST_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0' || std::filesystem::path(path).is_absolute()) return path;
  return (std::filesystem::path(dir) / path).string();
}

void WriteOutputs(const Outputs &outputs) {
  for (const Output &o : outputs) WriteFile(ResolveOutput(o.path), o.content);
}

std::string JoinPath(const std::string &dir, const std::string &name) {
  return (std::filesystem::path(dir) / name).string();
}

const std::map<std::string, TextSource> kSources = {{"gold", TextSource::kGold},
                                                    {"hyp", TextSource::kHyp},
                                                    {"working", TextSource::kWorking},
                                                    {"oracle_context", TextSource::kOracleContext}};

struct CorpusArgs {
  std::string corpus;
  std::string schema;
  std::string transcripts;

  void Register(CLI::App *app, bool with_transcripts = true) {
    app->add_option("--corpus", corpus, "Corpus JSONL")->required();
    app->add_option("--schema", schema, "Slot schema JSON")->required();
    if (with_transcripts) {
      app->add_option("--transcripts", transcripts, "ASR hypotheses JSONL to attach first");
    }
  }

  Corpus Load() const {
    Corpus c = IngestCorpus(corpus, schema);
    if (!transcripts.empty()) AttachHypotheses(c, transcripts);
    return c;
  }
};

struct BudgetArgs {
  InputBudget budget;

  void Register(CLI::App *app) {
    app->add_option("--max-chars", budget.max_chars, "Model input budget in characters")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_flag("--include-next-agent", budget.include_next_agent,
                  "Append the agent turn following the target user turn");
  }
};

struct PredictionArgs {
  std::string path;

  void Register(CLI::App *app, const std::string &name = "--predictions",
                bool required = true) {
    auto *opt = app->add_option(name, path, "Predictions JSONL");
    if (required) opt->required();
  }

  PredictionSet Load(const Corpus &corpus, std::ostream &err) const {
    PredictionSet preds = LoadPredictions(path, corpus, corpus.schema());
    for (const LoadWarning &w : preds.warnings) {
      err << "warning: " << path << ":" << w.line << ": " << w.message << "\n";
    }
    return preds;
  }
};

std::vector<std::string> LoadGazetteer(const std::string &path) {
  std::vector<std::string> entries;
  const std::string text = ReadFile(path);
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string::npos) end = text.size();
    const std::string line = Trim(std::string_view(text).substr(begin, end - begin));
    if (!line.empty() && line[0] != '#') entries.push_back(line);
    begin = end + 1;
  }
  return entries;
}

struct EntityArgs {
  std::string spans;
  std::string gazetteer;
  std::string scope = "previous";

  void Register(CLI::App *app) {
    auto *group = app->add_option_group("entities", "Entity source (exactly one)");
    group->add_option("--spans", spans, "Entity span JSONL");
    group->add_option("--gazetteer", gazetteer, "Entity list, one per line");
    group->require_option(1);
    app->add_option("--scope", scope, "Agent turns searched for replacements")
        ->check(CLI::IsMember({"previous", "dialogue"}))
        ->capture_default_str();
  }

  std::vector<EntitySpan> Load(const Corpus &corpus) const {
    if (!spans.empty()) return LoadEntitySpans(spans, corpus);
    return DetectCorpusEntities(corpus, LoadGazetteer(gazetteer));
  }

  AgentScope Scope() const {
    return scope == "dialogue" ? AgentScope::kWholeDialogue : AgentScope::kPreviousTurns;
  }
};

// Fills working text from the hypothesis (or gold) where no step set it yet.
void FillWorkingText(Corpus &corpus) {
  for (Dialogue &d : corpus.mutable_dialogues()) {
    for (Turn &t : d.turns) {
      if (t.is_user() && !t.working_text) t.working_text = SpanBaseText(t);
    }
  }
}

using Runner = std::function<Outputs(std::ostream &out, std::ostream &err)>;

struct Command {
  CLI::App *app = nullptr;
  Runner run;
};

void AddIngest(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand("ingest", "Validate a corpus and write it canonicalized");
  auto args = std::make_shared<CorpusArgs>();
  auto out_path = std::make_shared<std::string>();
  args->Register(app);
  app->add_option("--out", *out_path, "Output corpus JSONL")->required();
  commands.push_back({app, [=](std::ostream &out, std::ostream &) {
                        const Corpus c = args->Load();
                        out << "dialogues " << c.dialogues().size() << "\nuser_turns "
                            << c.NumUserTurns() << "\n";
                        return Outputs{{*out_path, SerializeCorpus(c)}};
                      }});
}

void AddAttachHyp(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand("attach-hyp", "Attach ASR hypotheses to user turns");
  auto args = std::make_shared<CorpusArgs>();
  auto out_path = std::make_shared<std::string>();
  args->Register(app, false);
  app->add_option("--transcripts", args->transcripts, "Hypotheses JSONL")->required();
  app->add_option("--out", *out_path, "Output corpus JSONL")->required();
  commands.push_back({app, [=](std::ostream &out, std::ostream &) {
                        Corpus c = IngestCorpus(args->corpus, args->schema);
                        const std::size_t n = AttachHypotheses(c, args->transcripts);
                        out << "attached " << n << " of " << c.NumUserTurns() << "\n";
                        return Outputs{{*out_path, SerializeCorpus(c)}};
                      }});
}

void AddSerializeInputs(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand("serialize-inputs", "Write tracker model inputs per user turn");
  auto args = std::make_shared<CorpusArgs>();
  auto budget = std::make_shared<BudgetArgs>();
  auto source = std::make_shared<std::string>("hyp");
  auto out_path = std::make_shared<std::string>();
  args->Register(app);
  budget->Register(app);
  app->add_option("--source", *source, "Text variant for user turns")
      ->check(CLI::IsMember({"gold", "hyp", "working", "oracle_context"}))
      ->capture_default_str();
  app->add_option("--out", *out_path, "Output JSONL")->required();
  commands.push_back({app, [=](std::ostream &, std::ostream &) {
                        const Corpus c = args->Load();
                        return Outputs{{*out_path, SerializeModelInputs(c, kSources.at(*source),
                                                                        budget->budget)}};
                      }});
}

void AddEvaluate(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand("evaluate", "Compute JGA, STA and per-slot precision");
  auto args = std::make_shared<CorpusArgs>();
  auto preds = std::make_shared<PredictionArgs>();
  auto out_dir = std::make_shared<std::string>(".");
  auto formats = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"json", "csv"});
  args->Register(app);
  preds->Register(app);
  app->add_option("--out-dir", *out_dir, "Directory for metrics.json and slot_precision.csv")
      ->capture_default_str();
  app->add_option("--format", *formats, "Output formats")
      ->check(CLI::IsMember({"json", "csv"}))
      ->delimiter(',');
  commands.push_back({app, [=](std::ostream &out, std::ostream &err) {
                        const Corpus c = args->Load();
                        const PredictionSet p = preds->Load(c, err);
                        const MetricReport report = Evaluate(p, c);
                        out << "turns " << report.turns << "\njga " << FormatFixed(report.jga, 4)
                            << "\nsta " << FormatFixed(report.sta.sta, 4) << "\n";
                        Outputs outputs;
                        for (const std::string &f : *formats) {
                          if (f == "json") {
                            outputs.push_back({JoinPath(*out_dir, "metrics.json"),
                                               MetricReportToJson(report, c.schema())});
                          } else {
                            outputs.push_back({JoinPath(*out_dir, "slot_precision.csv"),
                                               SlotPrecisionToCsv(report, c.schema())});
                          }
                        }
                        return outputs;
                      }});
}

void AddNormalize(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand(
      "normalize", "Normalize user transcripts into working text, or a single --text");
  auto args = std::make_shared<CorpusArgs>();
  auto rules_path = std::make_shared<std::string>();
  auto time_format = std::make_shared<std::string>("12");
  auto text = std::make_shared<std::string>();
  auto out_path = std::make_shared<std::string>();
  auto *input = app->add_option_group("input", "Corpus or single string (exactly one)");
  auto *corpus_opt = input->add_option("--corpus", args->corpus, "Corpus JSONL");
  auto *schema_opt = app->add_option("--schema", args->schema, "Slot schema JSON");
  app->add_option("--transcripts", args->transcripts, "ASR hypotheses JSONL to attach first");
  input->add_option("--text", *text, "Normalize this string and print it");
  input->require_option(1);
  auto *out_opt = app->add_option("--out", *out_path, "Output corpus JSONL");
  app->add_option("--rules", *rules_path, "Rule set JSON (bundled rules by default)");
  app->add_option("--time-format", *time_format, "Emitted time format")
      ->check(CLI::IsMember({"12", "24"}))
      ->capture_default_str();
  corpus_opt->needs(schema_opt);
  corpus_opt->needs(out_opt);
  commands.push_back({app, [=](std::ostream &out, std::ostream &) {
                        const RuleSet rules =
                            rules_path->empty() ? RuleSet::Default() : RuleSet::Load(*rules_path);
                        const Normalizer norm(rules, *time_format == "24" ? TimeFormat::k24Hour
                                                                          : TimeFormat::k12Hour);
                        if (args->corpus.empty()) {
                          out << norm.NormalizeText(*text) << "\n";
                          return Outputs{};
                        }
                        Corpus c = args->Load();
                        for (Dialogue &d : c.mutable_dialogues()) {
                          for (Turn &t : d.turns) {
                            if (t.is_user()) t.working_text = norm.NormalizeText(SpanBaseText(t));
                          }
                        }
                        return Outputs{{*out_path, SerializeCorpus(c)}};
                      }});
}

void AddCorrectEntities(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand("correct-entities",
                                  "Replace near-miss user entities with agent entities");
  auto args = std::make_shared<CorpusArgs>();
  auto entities = std::make_shared<EntityArgs>();
  auto tau = std::make_shared<double>(CorrectionConfig{}.threshold);
  auto out_path = std::make_shared<std::string>();
  auto log_path = std::make_shared<std::string>();
  args->Register(app);
  entities->Register(app);
  app->add_option("--tau", *tau, "CER threshold")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  app->add_option("--out", *out_path, "Output corpus JSONL")->required();
  app->add_option("--log", *log_path, "Replacement log CSV");
  commands.push_back({app, [=](std::ostream &out, std::ostream &) {
                        Corpus c = args->Load();
                        const std::vector<EntitySpan> spans = entities->Load(c);
                        const ReplacementLog log =
                            CorrectCorpusEntities(c, spans, {*tau, entities->Scope()});
                        FillWorkingText(c);
                        out << "replacements " << log.size() << "\n";
                        Outputs outputs{{*out_path, SerializeCorpus(c)}};
                        if (!log_path->empty()) outputs.push_back({*log_path, ReplacementLogToCsv(log)});
                        return outputs;
                      }});
}

void AddTuneThreshold(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand("tune-threshold",
                                  "Pick the CER threshold minimizing mean corrected CER");
  auto args = std::make_shared<CorpusArgs>();
  auto entities = std::make_shared<EntityArgs>();
  auto grid = std::make_shared<std::vector<double>>(DefaultThresholdGrid());
  auto out_path = std::make_shared<std::string>();
  args->Register(app);
  entities->Register(app);
  app->add_option("--grid", *grid, "Comma-separated thresholds (default 0,0.05,...,0.5)")
      ->check(CLI::Range(0.0, 1.0))
      ->delimiter(',');
  app->add_option("--out", *out_path, "Objective curve CSV");
  commands.push_back({app, [=](std::ostream &out, std::ostream &) {
                        const Corpus c = args->Load();
                        const std::vector<EntitySpan> spans = entities->Load(c);
                        const TuningResult r = TuneThreshold(c, spans, *grid, entities->Scope());
                        out << "best_tau " << FormatFixed(r.best_threshold, 2) << "\n";
                        if (out_path->empty()) return Outputs{};
                        std::string csv = "threshold,mean_cer,replacements\n";
                        for (const ThresholdPoint &p : r.curve) {
                          csv += FormatFixed(p.threshold, 2) + "," + FormatFixed(p.objective, 6) +
                                 "," + std::to_string(p.replacements) + "\n";
                        }
                        return Outputs{{*out_path, csv}};
                      }});
}

void AddEstimateMatrix(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand("estimate-matrix",
                                  "Estimate a character error matrix from gold/ASR pairs");
  auto args = std::make_shared<CorpusArgs>();
  auto variant = std::make_shared<std::string>("hyp");
  auto out_path = std::make_shared<std::string>();
  args->Register(app);
  app->add_option("--variant", *variant, "Noisy text variant paired with gold")
      ->check(CLI::IsMember({"hyp", "working"}))
      ->capture_default_str();
  app->add_option("--out", *out_path, "Matrix JSON")->required();
  commands.push_back({app, [=](std::ostream &out, std::ostream &) {
                        const Corpus c = args->Load();
                        std::vector<std::pair<std::string, std::string>> pairs;
                        for (const Dialogue &d : c.dialogues()) {
                          for (const Turn &t : d.turns) {
                            const auto &noisy = *variant == "hyp" ? t.hyp_text : t.working_text;
                            if (t.is_user() && noisy) pairs.emplace_back(t.gold_text, *noisy);
                          }
                        }
                        const ErrorMatrix m = ErrorMatrix::Estimate(pairs);
                        out << "pairs " << pairs.size() << "\nalphabet "
                            << m.alphabet().size() << "\n";
                        return Outputs{{*out_path, m.ToJson()}};
                      }});
}

void AddAugment(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand("augment", "Inject matrix-guided errors into slot values");
  auto args = std::make_shared<CorpusArgs>();
  auto matrix_path = std::make_shared<std::string>();
  auto config = std::make_shared<InjectionConfig>();
  auto ops = std::make_shared<std::vector<std::string>>(
      std::vector<std::string>{"insert", "delete", "substitute"});
  auto fixed = std::make_shared<std::size_t>(0);
  auto out_path = std::make_shared<std::string>();
  auto edits_path = std::make_shared<std::string>();
  args->Register(app);
  app->add_option("--matrix", *matrix_path, "Matrix JSON from estimate-matrix")->required();
  app->add_option("--lambda", config->lambda, "Poisson mean of edits per value")
      ->check(CLI::Range(0.0, 30.0))
      ->required();
  app->add_option("--seed", config->seed, "Random seed")->required();
  app->add_option("--ops", *ops, "Allowed edit kinds")
      ->check(CLI::IsMember({"insert", "delete", "substitute"}))
      ->delimiter(',');
  auto *fixed_opt = app->add_option("--fixed-edits", *fixed, "Edits per value instead of Poisson");
  app->add_flag("--last-turn-only", config->last_turn_only, "Corrupt only each last user turn");
  app->add_option("--out", *out_path, "Output corpus JSONL")->required();
  app->add_option("--edits", *edits_path, "Edit log CSV");
  commands.push_back({app, [=](std::ostream &out, std::ostream &) {
                        InjectionConfig cfg = *config;
                        cfg.allow_insert = cfg.allow_delete = cfg.allow_substitute = false;
                        for (const std::string &op : *ops) {
                          if (op == "insert") cfg.allow_insert = true;
                          if (op == "delete") cfg.allow_delete = true;
                          if (op == "substitute") cfg.allow_substitute = true;
                        }
                        if (fixed_opt->count() > 0) cfg.fixed_edits = *fixed;
                        const Corpus c = args->Load();
                        const ErrorMatrix m = ErrorMatrix::Load(*matrix_path);
                        const AugmentResult r = AugmentCorpus(c, m, cfg);
                        out << "user_turns " << r.stats.user_turns << "\nturns_corrupted "
                            << r.stats.turns_corrupted << "\nspans_targeted "
                            << r.stats.spans_targeted << "\nvalues_skipped "
                            << r.stats.values_skipped << "\n";
                        Outputs outputs{{*out_path, SerializeCorpus(r.corpus)}};
                        if (!edits_path->empty()) {
                          outputs.push_back({*edits_path, AugmentEditsToCsv(r.edits)});
                        }
                        return outputs;
                      }});
}

struct TaxonomyArgs {
  CorpusArgs corpus;
  PredictionArgs preds;
  BudgetArgs budget;
  std::string source = "hyp";

  void Register(CLI::App *app) {
    corpus.Register(app);
    preds.Register(app);
    budget.Register(app);
    app->add_option("--source", source, "User text the tracker consumed")
        ->check(CLI::IsMember({"gold", "hyp", "working", "oracle_context"}))
        ->capture_default_str();
  }

  TaxonomyOptions Options() const { return {kSources.at(source), budget.budget}; }
};

void AddCategorize(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand("categorize", "Count non-categorical errors by category");
  auto args = std::make_shared<TaxonomyArgs>();
  auto out_path = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("csv");
  auto instances_path = std::make_shared<std::string>();
  args->Register(app);
  app->add_option("--out", *out_path, "Category counts")->required();
  app->add_option("--format", *format, "Counts format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app->add_option("--instances", *instances_path, "Per-instance CSV");
  commands.push_back({app, [=](std::ostream &out, std::ostream &err) {
                        const Corpus c = args->corpus.Load();
                        const PredictionSet p = args->preds.Load(c, err);
                        const std::vector<TaxonomyInstance> instances =
                            ClassifyInstances(p, c, args->Options());
                        TaxonomyCounts counts;
                        for (const TaxonomyInstance &i : instances) {
                          ++counts.counts[static_cast<std::size_t>(i.category)];
                          ++counts.total;
                        }
                        for (ErrorCategory cat : kAllCategories) {
                          out << CategoryName(cat) << " " << counts[cat] << "\n";
                        }
                        Outputs outputs{{*out_path, *format == "json" ? TaxonomyCountsToJson(counts)
                                                                      : TaxonomyCountsToCsv(counts)}};
                        if (!instances_path->empty()) {
                          std::string csv = "dialogue_id,user_turn,slot,gold_value,predicted_value,category\n";
                          for (const TaxonomyInstance &i : instances) {
                            csv += CsvField(i.dialogue_id) + "," + std::to_string(i.user_turn) + "," +
                                   i.slot + "," + CsvField(i.gold_value) + "," +
                                   CsvField(i.predicted_value) + "," +
                                   std::string(CategoryName(i.category)) + "\n";
                          }
                          outputs.push_back({*instances_path, csv});
                        }
                        return outputs;
                      }});
}

void AddSimilarityHist(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand("similarity-hist",
                                  "Histogram of context similarity for context-missing values");
  auto args = std::make_shared<TaxonomyArgs>();
  auto bin_width = std::make_shared<double>(5.0);
  auto out_path = std::make_shared<std::string>();
  auto rows_path = std::make_shared<std::string>();
  args->Register(app);
  app->add_option("--bin-width", *bin_width, "Histogram bin width")
      ->check(CLI::Range(0.5, 100.0))
      ->capture_default_str();
  app->add_option("--out", *out_path, "Histogram CSV")->required();
  app->add_option("--rows", *rows_path, "Per-value CSV");
  commands.push_back({app, [=](std::ostream &out, std::ostream &err) {
                        const Corpus c = args->corpus.Load();
                        const PredictionSet p = args->preds.Load(c, err);
                        const SimilarityHistogram h =
                            SimilarityDistribution(p, c, args->Options(), *bin_width);
                        out << "values " << h.rows.size() << "\n";
                        Outputs outputs{{*out_path, HistogramToCsv(h)}};
                        if (!rows_path->empty()) outputs.push_back({*rows_path, SimilarityRowsToCsv(h)});
                        return outputs;
                      }});
}

void AddContextAblation(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand(
      "context-ablation", "Write all-hypothesis and gold-prior-context model inputs");
  auto args = std::make_shared<CorpusArgs>();
  auto budget = std::make_shared<BudgetArgs>();
  auto prefix = std::make_shared<std::string>();
  auto use_working = std::make_shared<bool>(false);
  args->Register(app);
  budget->Register(app);
  app->add_flag("--use-working", *use_working, "Treat working text as the hypothesis");
  app->add_option("--out-prefix", *prefix, "Writes <prefix>.condA.jsonl and <prefix>.condB.jsonl")
      ->required();
  commands.push_back({app, [=](std::ostream &, std::ostream &) {
                        Corpus c = args->Load();
                        if (*use_working) {
                          for (Dialogue &d : c.mutable_dialogues()) {
                            for (Turn &t : d.turns) {
                              if (t.is_user() && t.working_text) t.hyp_text = t.working_text;
                            }
                          }
                        }
                        const ContextAblation a = BuildContextAblation(c, budget->budget);
                        return Outputs{{*prefix + ".condA.jsonl", a.condition_a},
                                       {*prefix + ".condB.jsonl", a.condition_b}};
                      }});
}

void AddReport(CLI::App &root, std::vector<Command> &commands) {
  auto *app = root.add_subcommand("report", "Markdown summary of metrics and error analysis");
  auto args = std::make_shared<TaxonomyArgs>();
  auto oracle = std::make_shared<PredictionArgs>();
  auto bin_width = std::make_shared<double>(5.0);
  auto title = std::make_shared<std::string>(ReportInputs{}.title);
  auto out_path = std::make_shared<std::string>();
  args->Register(app);
  oracle->Register(app, "--oracle-predictions", false);
  app->add_option("--bin-width", *bin_width, "Histogram bin width")
      ->check(CLI::Range(0.5, 100.0))
      ->capture_default_str();
  app->add_option("--title", *title, "Report title");
  app->add_option("--out", *out_path, "Markdown output")->required();
  commands.push_back({app, [=](std::ostream &, std::ostream &err) {
                        const Corpus c = args->corpus.Load();
                        const PredictionSet p = args->preds.Load(c, err);
                        std::optional<PredictionSet> o;
                        if (!oracle->path.empty()) o = oracle->Load(c, err);
                        ReportInputs in;
                        in.corpus = &c;
                        in.predictions = &p;
                        in.oracle = o ? &*o : nullptr;
                        in.taxonomy = args->Options();
                        in.bin_width = *bin_width;
                        in.title = *title;
                        return Outputs{{*out_path, RenderMarkdownReport(in)}};
                      }});
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Spoken dialogue state tracking toolkit", "sdst"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  std::vector<Command> commands;
  AddIngest(app, commands);
  AddAttachHyp(app, commands);
  AddSerializeInputs(app, commands);
  AddEvaluate(app, commands);
  AddNormalize(app, commands);
  AddCorrectEntities(app, commands);
  AddTuneThreshold(app, commands);
  AddEstimateMatrix(app, commands);
  AddAugment(app, commands);
  AddCategorize(app, commands);
  AddSimilarityHist(app, commands);
  AddContextAblation(app, commands);
  AddReport(app, commands);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (const Command &cmd : commands) {
    if (!cmd.app->parsed()) continue;
    try {
      WriteOutputs(cmd.run(out, err));
      return 0;
    } catch (const std::exception &e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 2;
}

}  // namespace sdst
