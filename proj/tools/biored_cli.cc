// Copyright 2026 The biored-kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// biored: command-line front end.
//
// Exit status: 0 success, 1 data or validation error, 2 usage error.
// Reports go to the -o path (default <subcommand>.<format> in the working
// directory); "-" selects standard output. Summaries go to standard error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "biored/corpus.h"
#include "biored/eval.h"
#include "biored/preprocess.h"
#include "biored/pubtator.h"
#include "biored/stats.h"
#include "biored/synthesis.h"
#include "json.hpp"

namespace {

using namespace biored;
namespace fs = std::filesystem;

enum class Format { kCsv, kJson, kMd };

// Raised for conditions that are the data's fault (exit 1).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format ParseFormat(const std::string& s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  return Format::kMd;
}

class Output {
 public:
  Output(const std::string& path) {
    if (path == "-") {
      out_ = &std::cout;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw DataError("cannot open output file " + path);
    out_ = file_.get();
  }
  std::ostream& stream() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
};

std::string DefaultOutput(const std::string& name, const std::string& format) {
  return name + "." + format;
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

struct Common {
  std::string type_map;
  int jobs = 0;
  uint64_t seed = 42;
};

EntityTypeMap Types(const Common& c) {
  if (c.type_map.empty()) return EntityTypeMap::Default();
  auto in = OpenInput(c.type_map);
  return EntityTypeMap::FromTsv(in);
}

Corpus Load(const std::string& path, const Common& c) {
  return LoadPubtatorFile(path, Types(c));
}

Corpus SortedById(Corpus corpus) {
  std::stable_sort(corpus.documents.begin(), corpus.documents.end(),
                   [](const Document& a, const Document& b) {
                     return a.id() < b.id();
                   });
  return corpus;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::vector<std::string> inputs;
  bool strict = false;
  std::string format = "csv";
  std::string output;
};

int RunValidate(const ValidateArgs& a, const Common& c) {
  const EntityTypeMap types = Types(c);
  std::vector<ValidationReport> reports;
  size_t docs = 0;
  for (const auto& path : a.inputs) {
    const Corpus corpus = SortedById(LoadPubtatorFile(path, types));
    docs += corpus.size();
    for (const auto& d : corpus.documents) {
      reports.push_back(ValidateDocument(d, a.strict, types));
    }
  }
  size_t errors = 0, warnings = 0;
  for (const auto& r : reports) {
    errors += r.errors.size();
    warnings += r.warnings.size();
  }
  if (!a.output.empty()) {
    Output out(a.output);
    std::ostream& os = out.stream();
    const Format f = ParseFormat(a.format);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    if (f == Format::kCsv) os << "doc_id,severity,code,offset,index,message\n";
    if (f == Format::kMd) {
      os << "| doc_id | severity | code | offset | index | message |\n"
         << "|---|---|---|---:|---:|---|\n";
    }
    for (const auto& r : reports) {
      auto emit = [&](const ValidationIssue& i, const char* severity) {
        if (f == Format::kJson) {
          j.push_back({{"doc_id", r.doc_id},
                       {"severity", severity},
                       {"code", i.code},
                       {"offset", i.offset},
                       {"index", i.index},
                       {"message", i.message}});
        } else if (f == Format::kCsv) {
          std::string msg = i.message;
          std::replace(msg.begin(), msg.end(), '"', '\'');
          os << r.doc_id << ',' << severity << ',' << i.code << ','
             << i.offset << ',' << i.index << ",\"" << msg << "\"\n";
        } else {
          std::string msg = i.message;
          std::replace(msg.begin(), msg.end(), '|', '/');
          os << "| " << r.doc_id << " | " << severity << " | " << i.code
             << " | " << i.offset << " | " << i.index << " | " << msg
             << " |\n";
        }
      };
      for (const auto& i : r.errors) emit(i, "error");
      for (const auto& i : r.warnings) emit(i, "warning");
    }
    if (f == Format::kJson) os << j.dump(2) << '\n';
  }
  std::cerr << "validate: " << docs << " documents, " << errors
            << " errors, " << warnings << " warnings\n";
  return errors == 0 ? 0 : 1;
}

// ------------------------------------------------------------------- stats

struct StatsArgs {
  std::vector<std::string> splits;
  std::vector<std::string> names;
  bool case_insensitive = false;
  std::string format = "csv";
  std::string output;
};

int RunStats(const StatsArgs& a, const Common& c) {
  if (!a.names.empty() && a.names.size() != a.splits.size()) {
    throw CLI::ValidationError("--names", "needs one name per split");
  }
  const EntityTypeMap types = Types(c);
  std::vector<Corpus> corpora;
  for (const auto& p : a.splits) corpora.push_back(LoadPubtatorFile(p, types));
  std::vector<std::pair<std::string, const Corpus*>> inputs;
  for (size_t i = 0; i < corpora.size(); ++i) {
    const std::string name =
        a.names.empty() ? fs::path(a.splits[i]).stem().string() : a.names[i];
    inputs.emplace_back(name, &corpora[i]);
  }
  StatsOptions options;
  options.case_insensitive_unique = a.case_insensitive;
  options.jobs = c.jobs;
  const StatsTable table = CorpusStats(inputs, options);

  Output out(a.output.empty() ? DefaultOutput("stats", a.format) : a.output);
  switch (ParseFormat(a.format)) {
    case Format::kCsv: WriteStatsCsv(table, out.stream()); break;
    case Format::kJson: WriteStatsJson(table, out.stream()); break;
    case Format::kMd: WriteStatsMarkdown(table, out.stream()); break;
  }
  const SplitStats& last = table.splits.back();
  std::cerr << "stats: " << table.splits.size() << " splits; " << last.name
            << ": " << last.abstracts << " abstracts, " << last.relations
            << " relations\n";
  return 0;
}

// ---------------------------------------------------------------- emit-bio

struct EmitBioArgs {
  std::string input;
  std::string tokenize = "whitespace";
  std::string output;
  bool verbose = false;
};

TokenizeMode ParseTokenize(const std::string& s) {
  return s == "punct" ? TokenizeMode::kSplitPunctuation
                      : TokenizeMode::kWhitespace;
}

int RunEmitBio(const EmitBioArgs& a, const Common& c) {
  const Corpus corpus = SortedById(Load(a.input, c));
  const auto results = EmitBioCorpus(corpus, ParseTokenize(a.tokenize), c.jobs);
  Output out(a.output.empty() ? "emit-bio.jsonl" : a.output);
  size_t tokens = 0, warnings = 0;
  for (const auto& r : results) {
    out.stream() << BioToJson(r.sequence) << '\n';
    tokens += r.sequence.tokens.size();
    warnings += r.warnings.size();
    if (a.verbose) {
      for (const auto& w : r.warnings) {
        std::cerr << r.sequence.doc_id << ": " << w << '\n';
      }
    }
  }
  std::cerr << "emit-bio: " << results.size() << " documents, " << tokens
            << " tokens, " << warnings << " dropped mentions\n";
  return 0;
}

// ----------------------------------------------------------------- emit-re

struct EmitReArgs {
  std::string input;
  int window = 1;
  int context = 1;
  double negative_ratio = -1;
  std::string output;
  std::string reachability;
};

int RunEmitRe(const EmitReArgs& a, const Common& c) {
  const Corpus corpus = SortedById(Load(a.input, c));
  ReOptions options;
  options.pair_window = a.window;
  options.context = a.context;
  options.seed = c.seed;
  if (a.negative_ratio >= 0) options.negative_keep_ratio = a.negative_ratio;
  const ReCorpusResult result = GenerateReCorpus(corpus, options, c.jobs);

  Output out(a.output.empty() ? "emit-re.jsonl" : a.output);
  size_t n = 0;
  for (const auto& doc : result.instances) {
    for (const auto& inst : doc) {
      out.stream() << ReInstanceToJson(inst) << '\n';
      ++n;
    }
  }
  const Reachability& r = result.reachability;
  const std::string fraction = FormatRatio(r.reachable, r.gold_relations);
  if (!a.reachability.empty()) {
    Output rout(a.reachability);
    nlohmann::ordered_json j;
    j["window"] = a.window;
    j["gold_relations"] = r.gold_relations;
    j["reachable"] = r.reachable;
    j["fraction"] = fraction;
    rout.stream() << j.dump(2) << '\n';
  }
  std::cerr << "emit-re: " << n << " instances from " << corpus.size()
            << " documents; window " << a.window << " reachability "
            << r.reachable << "/" << r.gold_relations << " = " << fraction
            << '\n';
  return 0;
}

// ------------------------------------------------------------------ prompt

struct PromptArgs {
  std::string examples;
  std::string queries;
  std::string output_dir = ".";
};

int RunPrompt(const PromptArgs& a, const Common& c) {
  const Corpus pool = Load(a.examples, c);
  std::vector<Document> examples;
  if (static_cast<int>(pool.size()) == kPromptExamples) {
    examples = pool.documents;
  } else {
    examples = SelectFewshotExamples(pool, c.seed);
  }
  const Corpus queries = SortedById(Load(a.queries, c));
  fs::create_directories(a.output_dir);
  size_t files = 0;
  const std::span<const Document> all(queries.documents);
  for (size_t i = 0; i < all.size(); i += kMaxPromptQueries) {
    const size_t n = std::min<size_t>(kMaxPromptQueries, all.size() - i);
    const PromptBundle bundle = BuildFewshotPrompt(examples, all.subspan(i, n));
    char name[32];
    std::snprintf(name, sizeof(name), "prompt_%03zu.txt", files + 1);
    Output out((fs::path(a.output_dir) / name).string());
    out.stream() << bundle.rendered;
    ++files;
  }
  std::cerr << "prompt: " << files << " files for " << queries.size()
            << " query documents; examples";
  for (const auto& e : examples) std::cerr << ' ' << e.id();
  std::cerr << '\n';
  return 0;
}

// --------------------------------------------------------------- score-ner

struct ScoreArgs {
  std::string gold;
  std::string pred;
  std::string instances;
  std::string mode = "strict";
  std::string tokenize = "whitespace";
  bool label_insensitive = false;
  std::string format = "csv";
  std::string output;
};

void WriteReport(const MetricReport& report, const std::string& title,
                 const std::string& format, std::ostream& out) {
  switch (ParseFormat(format)) {
    case Format::kCsv: WriteMetricsCsv(report, out); break;
    case Format::kJson: WriteMetricsJson(report, title, out); break;
    case Format::kMd: WriteMetricsMarkdown(report, title, out); break;
  }
}

std::string Summary(const std::string& what, const MetricReport& r) {
  const Counts& o = r.overall();
  return what + ": overall P=" + FormatRatio(o.tp, o.tp + o.fp) +
         " R=" + FormatRatio(o.tp, o.tp + o.fn) +
         " F1=" + FormatRatio(2 * o.tp, 2 * o.tp + o.fp + o.fn);
}

int RunScoreNer(const ScoreArgs& a, const Common& c) {
  const Corpus gold = Load(a.gold, c);
  const Corpus pred = Load(a.pred, c);
  NerOptions options;
  options.mode = a.mode == "relaxed" ? MatchMode::kRelaxed : MatchMode::kStrict;
  options.tokenize = ParseTokenize(a.tokenize);
  options.jobs = c.jobs;
  const MetricReport report = ScoreNer(gold, pred, options);
  Output out(a.output.empty() ? DefaultOutput("score-ner", a.format)
                              : a.output);
  WriteReport(report, "ner-" + a.mode, a.format, out.stream());
  std::cerr << Summary("score-ner (" + a.mode + ")", report) << '\n';
  return 0;
}

// ---------------------------------------------------------------- score-re

std::vector<InstancePrediction> LoadInstancePredictions(
    const std::string& path) {
  auto in = OpenInput(path);
  std::vector<InstancePrediction> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      InstancePrediction p;
      p.instance = ReInstanceFromJson(line);
      const auto j = nlohmann::json::parse(line);
      if (j.contains("pred_label") && j["pred_label"].is_string()) {
        const std::string label = j["pred_label"].get<std::string>();
        if (label != "None") p.label = NormalizeRelationLabel(label);
      }
      p.confidence = j.value("confidence", 1.0);
      out.push_back(std::move(p));
    } catch (const std::exception& e) {
      throw DataError(path + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

int RunScoreRe(const ScoreArgs& a, const Common& c) {
  const Corpus gold = Load(a.gold, c);
  std::vector<RelationKey> keys;
  if (!a.instances.empty()) {
    keys = AggregateInstancePredictions(LoadInstancePredictions(a.instances));
  } else {
    keys = PredictedRelationKeys(Load(a.pred, c), &gold);
  }
  ReScoreOptions options;
  options.label_sensitive = !a.label_insensitive;
  const MetricReport report = ScoreRe(gold, keys, options);
  const std::string title = a.label_insensitive ? "re-pair" : "re-label";
  Output out(a.output.empty() ? DefaultOutput("score-re", a.format)
                              : a.output);
  WriteReport(report, title, a.format, out.stream());
  std::cerr << Summary("score-re (" + title + ")", report) << '\n';
  return 0;
}

// ------------------------------------------------------------------ report

int RunReport(const ScoreArgs& a, const Common& c) {
  const Corpus gold = Load(a.gold, c);
  const Corpus pred = Load(a.pred, c);
  std::vector<std::pair<std::string, MetricReport>> reports;
  for (MatchMode mode : {MatchMode::kStrict, MatchMode::kRelaxed}) {
    NerOptions options;
    options.mode = mode;
    options.tokenize = ParseTokenize(a.tokenize);
    options.jobs = c.jobs;
    reports.emplace_back("ner-" + std::string(MatchModeName(mode)),
                         ScoreNer(gold, pred, options));
  }
  const auto keys = PredictedRelationKeys(pred, &gold);
  reports.emplace_back("re-label", ScoreRe(gold, keys, {true}));
  reports.emplace_back("re-pair", ScoreRe(gold, keys, {false}));

  Output out(a.output.empty() ? DefaultOutput("report", a.format) : a.output);
  std::ostream& os = out.stream();
  const Format f = ParseFormat(a.format);
  if (f == Format::kJson) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& [title, r] : reports) {
      std::ostringstream s;
      WriteMetricsJson(r, title, s);
      j.push_back(nlohmann::ordered_json::parse(s.str()));
    }
    os << j.dump(2) << '\n';
  } else if (f == Format::kCsv) {
    os << "report,category,tp,fp,fn,precision,recall,f1\n";
    for (const auto& [title, r] : reports) {
      std::ostringstream s;
      WriteMetricsCsv(r, s);
      std::istringstream lines(s.str());
      std::string line;
      std::getline(lines, line);  // header
      while (std::getline(lines, line)) os << title << ',' << line << '\n';
    }
  } else {
    for (size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) os << '\n';
      WriteMetricsMarkdown(reports[i].second, reports[i].first, os);
    }
  }
  std::cerr << Summary("report ner-strict", reports[0].second) << "; "
            << Summary("re-label", reports[2].second) << '\n';
  return 0;
}

// -------------------------------------------------------------- synthesize

struct SynthesizeArgs {
  std::string reference;
  std::string synonyms;
  std::string findings;
  std::vector<std::string> preds;
  std::string name_map;
  std::string source_kind = "P";
  std::string format = "md";
  std::string output;
};

int RunSynthesize(const SynthesizeArgs& a, const Common& c) {
  auto table_in = OpenInput(a.reference);
  ReferenceTable reference;
  if (a.synonyms.empty()) {
    reference = LoadReferenceTable(table_in);
  } else {
    auto syn_in = OpenInput(a.synonyms);
    reference = LoadReferenceTable(table_in, &syn_in);
  }
  std::vector<Finding> findings;
  if (!a.findings.empty()) {
    auto in = OpenInput(a.findings);
    findings = LoadFindingsCsv(in);
  }
  if (!a.preds.empty()) {
    std::map<std::string, std::string> names;
    if (!a.name_map.empty()) {
      auto in = OpenInput(a.name_map);
      names = LoadNameMap(in);
    }
    std::vector<Corpus> corpora;
    for (const auto& p : a.preds) corpora.push_back(SortedById(Load(p, c)));
    const auto kind = ParseSourceKind(a.source_kind);
    if (!kind) throw CLI::ValidationError("--source-kind", "expected P or A");
    auto more = AggregateFindings(corpora, names, *kind);
    findings.insert(findings.end(), more.begin(), more.end());
  }
  const CoverageReport report = MatchFindings(reference, findings);
  Output out(a.output.empty() ? DefaultOutput("synthesize", a.format)
                              : a.output);
  switch (ParseFormat(a.format)) {
    case Format::kCsv: WriteCoverageCsv(report, out.stream()); break;
    case Format::kJson: WriteCoverageJson(report, out.stream()); break;
    case Format::kMd: WriteCoverageMarkdown(report, out.stream()); break;
  }
  std::cerr << "synthesize: " << findings.size() << " findings; matched "
            << report.matched << "/" << report.total << " (coverage "
            << FormatRatio(report.matched, report.total) << ")\n";
  return 0;
}

// -------------------------------------------------------------------- main

void AddFormat(CLI::App* cmd, std::string* format) {
  cmd->add_option("--format", *format, "Report format")
      ->check(CLI::IsMember({"csv", "json", "md"}))
      ->capture_default_str();
}

void AddOutput(CLI::App* cmd, std::string* output) {
  cmd->add_option("-o,--output", *output,
                  "Output path; '-' for standard output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BioRED-style corpus toolkit"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--type-map", common.type_map,
                    "TSV of raw type -> core type overrides")
        ->check(CLI::ExistingFile);
    cmd->add_option("--jobs", common.jobs, "Worker threads (0 = all)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", common.seed, "Random seed")
        ->capture_default_str();
  };

  ValidateArgs validate;
  auto* v = app.add_subcommand("validate", "Check spans and references");
  v->add_option("inputs", validate.inputs, "PubTator files")
      ->required()
      ->check(CLI::ExistingFile);
  v->add_flag("--strict", validate.strict,
              "Treat surface mismatches as errors");
  AddFormat(v, &validate.format);
  AddOutput(v, &validate.output);
  add_common(v);

  StatsArgs stats;
  auto* s = app.add_subcommand("stats", "Entity and relation counts");
  s->add_option("--splits", stats.splits, "PubTator files, one per split")
      ->required()
      ->delimiter(',')
      ->check(CLI::ExistingFile);
  s->add_option("--names", stats.names, "Split names")->delimiter(',');
  s->add_flag("--case-insensitive-unique", stats.case_insensitive,
              "Count unique mentions ignoring ASCII case");
  AddFormat(s, &stats.format);
  AddOutput(s, &stats.output);
  add_common(s);

  EmitBioArgs bio;
  auto* b = app.add_subcommand("emit-bio", "Token-level BIO sequences");
  b->add_option("--input", bio.input)->required()->check(CLI::ExistingFile);
  b->add_option("--tokenize", bio.tokenize)
      ->check(CLI::IsMember({"whitespace", "punct"}))
      ->capture_default_str();
  b->add_flag("--verbose", bio.verbose, "Print each dropped mention");
  AddOutput(b, &bio.output);
  add_common(b);

  EmitReArgs re;
  auto* r = app.add_subcommand("emit-re", "Marker-decorated RE instances");
  r->add_option("--input", re.input)->required()->check(CLI::ExistingFile);
  r->add_option("--window", re.window, "Max sentence distance of a pair")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  r->add_option("--context", re.context, "Context sentences per side")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  r->add_option("--negative-ratio", re.negative_ratio,
                "Fraction of None instances kept")
      ->check(CLI::Range(0.0, 1.0));
  r->add_option("--reachability", re.reachability,
                "Write the reachability summary as JSON");
  AddOutput(r, &re.output);
  add_common(r);

  PromptArgs prompt;
  auto* p = app.add_subcommand("prompt", "Few-shot NER prompts");
  p->add_option("--examples", prompt.examples,
                "Five example documents, or a pool to draw five from")
      ->required()
      ->check(CLI::ExistingFile);
  p->add_option("--queries", prompt.queries)
      ->required()
      ->check(CLI::ExistingFile);
  p->add_option("--output-dir", prompt.output_dir)->capture_default_str();
  add_common(p);

  ScoreArgs ner;
  auto* sn = app.add_subcommand("score-ner", "NER precision/recall/F1");
  sn->add_option("--gold", ner.gold)->required()->check(CLI::ExistingFile);
  sn->add_option("--pred", ner.pred)->required()->check(CLI::ExistingFile);
  sn->add_option("--mode", ner.mode)
      ->check(CLI::IsMember({"strict", "relaxed"}))
      ->capture_default_str();
  sn->add_option("--tokenize", ner.tokenize)
      ->check(CLI::IsMember({"whitespace", "punct"}))
      ->capture_default_str();
  AddFormat(sn, &ner.format);
  AddOutput(sn, &ner.output);
  add_common(sn);

  ScoreArgs rel;
  auto* sr = app.add_subcommand("score-re", "Document-level RE scores");
  sr->add_option("--gold", rel.gold)->required()->check(CLI::ExistingFile);
  auto* pred_opt =
      sr->add_option("--pred", rel.pred)->check(CLI::ExistingFile);
  auto* inst_opt = sr->add_option("--instances", rel.instances,
                                  "JSONL instance predictions")
                       ->check(CLI::ExistingFile);
  pred_opt->excludes(inst_opt);
  sr->add_flag("--label-insensitive", rel.label_insensitive,
               "Compare concept pairs only");
  AddFormat(sr, &rel.format);
  AddOutput(sr, &rel.output);
  add_common(sr);

  ScoreArgs rep;
  auto* rp = app.add_subcommand("report", "NER and RE scores in one report");
  rp->add_option("--gold", rep.gold)->required()->check(CLI::ExistingFile);
  rp->add_option("--pred", rep.pred)->required()->check(CLI::ExistingFile);
  rp->add_option("--tokenize", rep.tokenize)
      ->check(CLI::IsMember({"whitespace", "punct"}))
      ->capture_default_str();
  rep.format = "md";
  AddFormat(rp, &rep.format);
  AddOutput(rp, &rep.output);
  add_common(rp);

  SynthesizeArgs syn;
  auto* sy = app.add_subcommand("synthesize", "Coverage of a findings table");
  sy->add_option("--reference", syn.reference)
      ->required()
      ->check(CLI::ExistingFile);
  sy->add_option("--synonyms", syn.synonyms)->check(CLI::ExistingFile);
  sy->add_option("--findings", syn.findings, "Findings CSV")
      ->check(CLI::ExistingFile);
  sy->add_option("--pred", syn.preds, "Predicted PubTator files")
      ->check(CLI::ExistingFile);
  sy->add_option("--name-map", syn.name_map, "concept_id,name CSV")
      ->check(CLI::ExistingFile);
  sy->add_option("--source-kind", syn.source_kind)
      ->check(CLI::IsMember({"P", "A"}))
      ->capture_default_str();
  AddFormat(sy, &syn.format);
  AddOutput(sy, &syn.output);
  add_common(sy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*v) return RunValidate(validate, common);
    if (*s) return RunStats(stats, common);
    if (*b) return RunEmitBio(bio, common);
    if (*r) return RunEmitRe(re, common);
    if (*p) return RunPrompt(prompt, common);
    if (*sn) return RunScoreNer(ner, common);
    if (*sr) {
      if (rel.pred.empty() && rel.instances.empty()) {
        throw CLI::RequiredError("--pred or --instances");
      }
      return RunScoreRe(rel, common);
    }
    if (*rp) return RunReport(rep, common);
    if (*sy) {
      if (syn.findings.empty() && syn.preds.empty()) {
        throw CLI::RequiredError("--findings or --pred");
      }
      return RunSynthesize(syn, common);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
