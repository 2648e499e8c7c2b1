// Copyright 2026 The leichtkit Authors.
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

// leichtkit: command-line entry point.
//
// Exit codes: 0 success, 1 invalid arguments or configuration, 2 I/O
// failure, 3 computation failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cli_support.h"
#include "json.hpp"
#include "leichtkit/complexity.h"
#include "leichtkit/desk_corpus.h"
#include "leichtkit/errors.h"
#include "leichtkit/metrics.h"
#include "leichtkit/ngram_lm.h"
#include "leichtkit/parallel.h"
#include "leichtkit/preprocess.h"
#include "leichtkit/split.h"
#include "leichtkit/textstats.h"

namespace leichtkit::cli {
namespace {

constexpr size_t kBatchSize = 2048;

struct GlobalOptions {
  std::string out;
  uint64_t seed = 42;
  size_t threads = 0;
  bool pretty = false;

  size_t worker_count() const {
    if (threads > 0) return threads;
    return std::max<size_t>(1, std::thread::hardware_concurrency());
  }
};

// Sorted summation keeps aggregates independent of input order.
double SortedMean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

void WriteJson(const GlobalOptions& global, const Json& json) {
  OutputSink sink(global.out);
  sink.stream() << json.dump(2) << "\n";
  sink.Close();
}

NgramModel LoadLanguageModel(const std::string& flag, const std::string& path) {
  try {
    return NgramModel::Deserialize(ReadFileOrThrow(path));
  } catch (const IoError& e) {
    throw IoError(flag + " '" + path + "': " + e.what());
  }
}

// Text the analysis commands read: the stored clean text, or the
// markup-stripped raw text when the document was not preprocessed.
std::string ModelText(const Document& doc) {
  return doc.clean_text ? *doc.clean_text : PreprocessText(doc.raw_text);
}

// ---- preprocess ---------------------------------------------------------

struct PreprocessArgs {
  std::string input;
  std::string lexicon;
};

void RunPreprocess(const CLI::App& cmd, const GlobalOptions& global,
                   const PreprocessArgs& args) {
  std::optional<HyphenationLexicon> lexicon;
  if (!args.lexicon.empty()) {
    lexicon = HyphenationLexicon::FromJson(ReadFileOrThrow(args.lexicon));
  }
  OutputSink sink(global.out);
  size_t count = 0;
  ForEachDocumentBatch(args.input, kBatchSize, [&](std::vector<Document>& docs, size_t) {
    std::vector<Document> clean(docs.size());
    internal::ParallelFor(docs.size(), global.worker_count(), [&](size_t i) {
      clean[i] = Preprocess(docs[i], lexicon ? &*lexicon : nullptr);
    });
    for (const Document& doc : clean) {
      sink.stream() << DocumentToJson(doc).dump() << "\n";
    }
    count += docs.size();
  });
  sink.Close();
  WriteSidecarStamp(sink, ConfigStamp(cmd));
  std::cerr << "preprocessed " << count << " documents\n";
}

// ---- split --------------------------------------------------------------

struct SplitArgs {
  std::string input;
  std::vector<double> ratios = {0.9, 0.1};
  std::string out_dir;
};

void RunSplit(const CLI::App& cmd, const GlobalOptions& global,
              const SplitArgs& args) {
  // First pass counts and validates; the second streams each document to
  // its part.
  size_t n = 0;
  {
    JsonlReader reader(args.input);
    nlohmann::json record;
    while (reader.Next(record)) {
      ParseDocument(record, reader.line());
      ++n;
    }
  }
  const auto parts = WithFlag("--ratios", [&] {
    return SplitIndices(n, args.ratios, global.seed);
  });
  static const char* kNames[] = {"train", "validation", "test"};
  std::vector<size_t> part_of(n);
  for (size_t p = 0; p < parts.size(); ++p) {
    for (size_t index : parts[p]) part_of[index] = p;
  }

  std::vector<std::unique_ptr<OutputSink>> sinks;
  std::vector<std::vector<std::string>> ids(parts.size());
  for (size_t p = 0; p < parts.size(); ++p) {
    sinks.push_back(std::make_unique<OutputSink>(args.out_dir + "/" + kNames[p] + ".jsonl"));
  }
  {
    JsonlReader reader(args.input);
    nlohmann::json record;
    size_t index = 0;
    while (reader.Next(record)) {
      const Document doc = ParseDocument(record, reader.line());
      const size_t p = part_of[index++];
      sinks[p]->stream() << DocumentToJson(doc).dump() << "\n";
      ids[p].push_back(doc.id);
    }
  }
  for (auto& sink : sinks) sink->Close();

  Json manifest;
  manifest["config"] = ConfigStamp(cmd);
  manifest["seed"] = global.seed;
  manifest["ratios"] = args.ratios;
  manifest["document_count"] = n;
  manifest["splits"] = Json::object();
  for (size_t p = 0; p < parts.size(); ++p) {
    Json part;
    part["file"] = std::string(kNames[p]) + ".jsonl";
    part["count"] = ids[p].size();
    part["ids"] = ids[p];
    manifest["splits"][kNames[p]] = part;
  }
  WriteFileOrThrow(args.out_dir + "/manifest.json", manifest.dump(2) + "\n");
  if (global.pretty) {
    std::vector<std::vector<std::string>> rows;
    for (size_t p = 0; p < parts.size(); ++p) {
      rows.push_back({kNames[p], std::to_string(ids[p].size()),
                      Fixed(args.ratios[p], 3)});
    }
    OutputSink sink(global.out);
    PrintTable(sink.stream(), {"split", "documents", "ratio"}, rows);
    sink.Close();
  } else {
    WriteJson(global, manifest);
  }
}

// ---- lexicon ------------------------------------------------------------

struct LexiconArgs {
  std::string input;
  size_t min_count = kDefaultLexiconMinCount;
};

void RunLexicon(const CLI::App& cmd, const GlobalOptions& global,
                const LexiconArgs& args) {
  if (args.min_count < 1) throw ConfigError("--min-count must be at least 1");
  HyphenationCounter counter;
  ForEachDocumentBatch(args.input, kBatchSize, [&](std::vector<Document>& docs, size_t) {
    for (const Document& doc : docs) counter.Add(ModelText(doc));
  });
  const HyphenationLexicon lexicon = counter.Build(args.min_count);
  if (global.pretty) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, form] : lexicon.entries()) {
      rows.push_back({key, form, std::to_string(lexicon.frequency().at(form))});
    }
    OutputSink sink(global.out);
    PrintTable(sink.stream(), {"key", "form", "count"}, rows);
    sink.Close();
    return;
  }
  Json json = Json::parse(lexicon.ToJson());
  Json out;
  out["config"] = ConfigStamp(cmd);
  out["entries"] = json["entries"];
  out["frequency"] = json["frequency"];
  WriteJson(global, out);
}

// ---- stats --------------------------------------------------------------

struct StatsArgs {
  std::string input;
  std::string format = "json";
  std::string abbreviations;
};

Json StatsRow(const std::string& id, const EasyLanguageReport& r) {
  Json row;
  row["id"] = id;
  row["fre"] = r.readability.fre;
  row["avg_sentence_length_words"] = r.readability.avg_sentence_length_words;
  row["avg_syllables_per_word"] = r.readability.avg_syllables_per_word;
  row["sentence_count"] = r.readability.sentence_count;
  row["word_count"] = r.readability.word_count;
  row["syllable_count"] = r.readability.syllable_count;
  row["newline_count"] = r.newline_count;
  row["newlines_per_sentence"] = r.readability.newlines_per_sentence;
  row["comma_count"] = r.comma_count;
  row["commas_per_sentence"] = r.commas_per_sentence;
  return row;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string CsvNumber(const Json& v) { return v.dump(); }

void RunStats(const CLI::App& cmd, const GlobalOptions& global,
              const StatsArgs& args) {
  AbbreviationList custom;
  const AbbreviationList* abbreviations = &AbbreviationList::Default();
  if (!args.abbreviations.empty()) {
    custom = AbbreviationList::FromFile(args.abbreviations);
    abbreviations = &custom;
  }
  static const char* kColumns[] = {
      "id", "fre", "avg_sentence_length_words", "avg_syllables_per_word",
      "sentence_count", "word_count", "syllable_count", "newline_count",
      "newlines_per_sentence", "comma_count", "commas_per_sentence"};

  OutputSink sink(global.out);
  std::vector<std::vector<std::string>> table;
  std::vector<double> fre, nps, cps;
  if (args.format == "csv" && !global.pretty) {
    for (size_t i = 0; i < std::size(kColumns); ++i) {
      sink.stream() << (i ? "," : "") << kColumns[i];
    }
    sink.stream() << "\n";
  }
  ForEachDocumentBatch(args.input, kBatchSize, [&](std::vector<Document>& docs, size_t) {
    std::vector<EasyLanguageReport> reports(docs.size());
    internal::ParallelFor(docs.size(), global.worker_count(), [&](size_t i) {
      reports[i] = EasyLanguageStats(ModelText(docs[i]), *abbreviations);
    });
    for (size_t i = 0; i < docs.size(); ++i) {
      const Json row = StatsRow(docs[i].id, reports[i]);
      fre.push_back(reports[i].readability.fre);
      nps.push_back(reports[i].readability.newlines_per_sentence);
      cps.push_back(reports[i].commas_per_sentence);
      if (global.pretty) {
        table.push_back({docs[i].id, Fixed(reports[i].readability.fre, 1),
                         Fixed(reports[i].readability.avg_sentence_length_words, 2),
                         Fixed(reports[i].readability.avg_syllables_per_word, 2),
                         std::to_string(reports[i].readability.sentence_count),
                         Fixed(reports[i].readability.newlines_per_sentence, 2),
                         Fixed(reports[i].commas_per_sentence, 2)});
      } else if (args.format == "csv") {
        sink.stream() << CsvField(docs[i].id);
        for (size_t c = 1; c < std::size(kColumns); ++c) {
          sink.stream() << "," << CsvNumber(row[kColumns[c]]);
        }
        sink.stream() << "\n";
      } else {
        sink.stream() << row.dump() << "\n";
      }
    }
  });
  if (global.pretty) {
    table.push_back({"(mean)", Fixed(SortedMean(fre), 1), "", "", "",
                     Fixed(SortedMean(nps), 2), Fixed(SortedMean(cps), 2)});
    PrintTable(sink.stream(),
               {"id", "fre", "asl", "asw", "sentences", "nl/sent", "commas/sent"},
               table);
  }
  sink.Close();
  if (!global.pretty) WriteSidecarStamp(sink, ConfigStamp(cmd));
}

// ---- train-lm -----------------------------------------------------------

struct TrainLmArgs {
  std::string input;
  int order = 3;
  std::string smoothing = "kneser-ney";
  double discount = 0.75;
  uint64_t min_count = 2;
  std::string unit = "document";
};

void RunTrainLm(const CLI::App& cmd, const GlobalOptions& global,
                const TrainLmArgs& args) {
  if (global.out.empty() || global.out == "-") {
    throw ConfigError("--out: a model file path is required");
  }
  NgramOptions options;
  options.order = args.order;
  options.smoothing = WithFlag("--smoothing", [&] { return ParseSmoothing(args.smoothing); });
  options.discount = args.discount;
  options.min_vocab_count = args.min_count;

  std::vector<TokenSequence> corpus;
  ForEachDocumentBatch(args.input, kBatchSize, [&](std::vector<Document>& docs, size_t) {
    for (const Document& doc : docs) {
      if (args.unit == "document") {
        corpus.push_back(Tokenize(ModelText(doc)));
        continue;
      }
      const TokenizedText t = Analyze(ModelText(doc));
      for (const SentenceSpan& s : t.sentence_spans) {
        corpus.emplace_back(t.tokens.begin() + static_cast<std::ptrdiff_t>(s.begin),
                            t.tokens.begin() + static_cast<std::ptrdiff_t>(s.end));
      }
    }
  });
  const Json stamp = ConfigStamp(cmd);
  NgramModel model = WithFlag("train-lm", [&] { return NgramModel::Train(corpus, options); });
  model.set_metadata(stamp.dump());
  WriteFileOrThrow(global.out, model.Serialize());

  Json summary;
  summary["config"] = stamp;
  summary["model"] = global.out;
  summary["order"] = model.order();
  summary["smoothing"] = SmoothingName(model.smoothing());
  summary["vocab_size"] = model.vocab_size();
  summary["trained_tokens"] = model.trained_tokens();
  summary["sequences"] = corpus.size();
  std::cerr << "trained order-" << model.order() << " "
            << SmoothingName(model.smoothing()) << " model on " << corpus.size()
            << " sequences, vocabulary " << model.vocab_size() << "\n";
  std::cout << summary.dump(2) << "\n";
}

// ---- perplexity ---------------------------------------------------------

// Like ForEachDocumentBatch, but an empty "text" becomes an empty sample so
// that scoring reports it as a computation error naming the sample.
template <typename Fn>
void ForEachSampleBatch(const std::string& path, Fn&& fn) {
  JsonlReader reader(path);
  std::vector<Sample> samples;
  std::vector<Document> docs;
  nlohmann::json record;
  auto flush = [&] {
    fn(samples, docs);
    samples.clear();
    docs.clear();
  };
  while (reader.Next(record)) {
    auto text = record.find("text");
    if (text != record.end() && text->is_string() && text->get<std::string>().empty()) {
      std::string id = "line-" + std::to_string(reader.line());
      if (auto it = record.find("id"); it != record.end()) {
        id = it->is_string() ? it->get<std::string>() : it->dump();
      }
      throw ComputeError("sample '" + id + "' is empty");
    }
    docs.push_back(ParseDocument(record, reader.line()));
    samples.push_back({docs.back().id, Tokenize(ModelText(docs.back()))});
    if (samples.size() == kBatchSize) flush();
  }
  if (!samples.empty()) flush();
}

struct PerplexityArgs {
  std::string input;
  std::string model;
  std::string model_id;
};

void RunPerplexity(const CLI::App& cmd, const GlobalOptions& global,
                   const PerplexityArgs& args) {
  const NgramModel model = LoadLanguageModel("--model", args.model);
  const std::string model_id = args.model_id.empty() ? args.model : args.model_id;
  OutputSink sink(global.out);
  std::ostream& out = sink.stream();

  // The per-sample array is streamed; only the numbers needed for the two
  // aggregates are kept.
  std::vector<double> ppls;
  double log_prob_sum = 0.0;
  size_t positions = 0;
  std::vector<std::vector<std::string>> table;
  bool first = true;
  ForEachSampleBatch(args.input, [&](std::vector<Sample>& samples, std::vector<Document>&) {
    const PerplexityResult batch =
        CorpusPerplexity(model, samples, model_id, global.worker_count());
    if (first && !global.pretty) {
      Json head;
      head["config"] = ConfigStamp(cmd);
      head["model_id"] = model_id;
      std::string text = head.dump(2);
      text.pop_back();  // reopen the object
      while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.pop_back();
      out << text << ",\n  \"per_sample\": [";
    }
    for (const SampleScore& s : batch.per_sample) {
      ppls.push_back(s.ppl);
      log_prob_sum += s.log_prob;
      positions += s.token_count + 1;
      if (global.pretty) {
        table.push_back({s.id, Fixed(s.ppl, 2), std::to_string(s.token_count)});
        continue;
      }
      Json row;
      row["id"] = s.id;
      row["ppl"] = s.ppl;
      row["token_count"] = s.token_count;
      row["log_prob"] = s.log_prob;
      out << (first ? "\n    " : ",\n    ") << row.dump();
      first = false;
    }
  });
  if (ppls.empty()) throw ComputeError("--input: no samples to score");
  const double mean = SortedMean(ppls);
  const double pooled = std::exp(-log_prob_sum / static_cast<double>(positions));
  if (global.pretty) {
    PrintTable(out, {"id", "ppl", "tokens"}, table);
    out << "\nmodel " << model_id << ": mean ppl " << Fixed(mean, 3)
        << " (pooled " << Fixed(pooled, 3) << ") over " << ppls.size()
        << " samples\n";
  } else {
    Json tail;
    tail["mean_ppl"] = mean;
    tail["pooled_ppl"] = pooled;
    tail["sample_count"] = ppls.size();
    out << "\n  ],\n  \"mean_ppl\": " << tail["mean_ppl"].dump()
        << ",\n  \"pooled_ppl\": " << tail["pooled_ppl"].dump()
        << ",\n  \"sample_count\": " << tail["sample_count"].dump() << "\n}\n";
  }
  sink.Close();
}

// ---- discriminate -------------------------------------------------------

struct DiscriminateArgs {
  std::string input;
  std::string easy_model;
  std::string normal_model;
};

void RunDiscriminate(const CLI::App& cmd, const GlobalOptions& global,
                     const DiscriminateArgs& args) {
  const NgramModel easy = LoadLanguageModel("--easy-model", args.easy_model);
  const NgramModel normal = LoadLanguageModel("--normal-model", args.normal_model);
  Json decisions = Json::array();
  std::vector<std::vector<std::string>> table;
  size_t easy_count = 0, total = 0, labeled = 0, correct = 0;
  ForEachSampleBatch(args.input, [&](std::vector<Sample>& samples, std::vector<Document>& docs) {
    for (const Sample& sample : samples) {
      if (sample.tokens.empty()) throw ComputeError("sample '" + sample.id + "' has no tokens");
    }
    std::vector<StyleDecision> batch(docs.size());
    internal::ParallelFor(docs.size(), global.worker_count(), [&](size_t i) {
      batch[i] = DiscriminateStyle(easy, normal, samples[i].tokens);
    });
    for (size_t i = 0; i < docs.size(); ++i) {
      const StyleDecision& d = batch[i];
      const std::string label(StyleLabelName(d.label));
      ++total;
      if (d.label == StyleLabel::kEasy) ++easy_count;
      Json row;
      row["id"] = docs[i].id;
      row["label"] = label;
      row["easy_ppl"] = d.easy_ppl;
      row["normal_ppl"] = d.normal_ppl;
      if (auto it = docs[i].meta.find("style"); it != docs[i].meta.end()) {
        ++labeled;
        if (it->second == label) ++correct;
        row["expected"] = it->second;
      }
      if (global.pretty) {
        table.push_back({docs[i].id, label, Fixed(d.easy_ppl, 2), Fixed(d.normal_ppl, 2)});
      } else {
        decisions.push_back(row);
      }
    }
  });
  if (global.pretty) {
    OutputSink sink(global.out);
    PrintTable(sink.stream(), {"id", "label", "easy_ppl", "normal_ppl"}, table);
    sink.stream() << "\n" << easy_count << " of " << total << " labeled easy";
    if (labeled > 0) {
      sink.stream() << "; accuracy " << Fixed(static_cast<double>(correct) / labeled, 3)
                    << " on " << labeled << " samples with a known style";
    }
    sink.stream() << "\n";
    sink.Close();
    return;
  }
  Json out;
  out["config"] = ConfigStamp(cmd);
  out["decisions"] = decisions;
  out["sample_count"] = total;
  out["easy_count"] = easy_count;
  out["normal_count"] = total - easy_count;
  if (labeled > 0) {
    out["labeled_count"] = labeled;
    out["accuracy"] = static_cast<double>(correct) / static_cast<double>(labeled);
  }
  WriteJson(global, out);
}

// ---- evaluate -----------------------------------------------------------

struct EvaluateArgs {
  std::string input;
  std::string metrics = "sari,bleu,rouge-l";
};

void RunEvaluate(const CLI::App& cmd, const GlobalOptions& global,
                 const EvaluateArgs& args) {
  const std::vector<Metric> metrics =
      WithFlag("--metrics", [&] { return ParseMetrics(args.metrics); });
  // Corpus BLEU needs every instance, so instances are kept (tokenized).
  std::vector<EvalInstance> instances;
  JsonlReader reader(args.input);
  nlohmann::json record;
  while (reader.Next(record)) {
    const std::string where = args.input + ":" + std::to_string(reader.line());
    auto text_field = [&](const char* name, bool required) -> std::string {
      auto it = record.find(name);
      if (it == record.end()) {
        if (required) throw ConfigError(where + ": missing \"" + name + "\"");
        return "";
      }
      if (!it->is_string()) throw ConfigError(where + ": \"" + name + "\" must be a string");
      return it->get<std::string>();
    };
    const std::string source = text_field("source", metrics.end() != std::find(
        metrics.begin(), metrics.end(), Metric::kSari));
    const std::string hypothesis = text_field("hypothesis", true);
    std::vector<std::string> references;
    auto refs = record.find("references");
    if (refs == record.end() || !refs->is_array() || refs->empty()) {
      throw ConfigError(where + ": \"references\" must be a non-empty array");
    }
    for (const auto& ref : *refs) {
      if (!ref.is_string()) throw ConfigError(where + ": references must be strings");
      references.push_back(ref.get<std::string>());
    }
    instances.push_back(MakeEvalInstance(source, hypothesis, references));
  }
  if (instances.empty()) throw ComputeError("--input: no instances to evaluate");
  const MetricReport report = Evaluate(instances, metrics);

  if (global.pretty) {
    std::vector<std::vector<std::string>> rows;
    if (report.sari) {
      rows.push_back({"SARI", Fixed(report.sari->sari, 2),
                      "keep " + Fixed(report.sari->f_keep, 2) + ", add " +
                          Fixed(report.sari->f_add, 2) + ", del " +
                          Fixed(report.sari->p_del, 2)});
    }
    if (report.bleu) {
      std::string detail = "BP " + Fixed(report.bleu->brevity_penalty, 3) + ", p =";
      for (double p : report.bleu->precisions) detail += " " + Fixed(p, 3);
      rows.push_back({"BLEU", Fixed(report.bleu->bleu, 2), detail});
    }
    if (report.rouge_l) {
      rows.push_back({"ROUGE-L", Fixed(report.rouge_l->f1, 4),
                      "P " + Fixed(report.rouge_l->precision, 4) + ", R " +
                          Fixed(report.rouge_l->recall, 4)});
    }
    OutputSink sink(global.out);
    PrintTable(sink.stream(), {"metric", "score", "details"}, rows);
    sink.stream() << "\n" << report.instance_count << " instances\n";
    sink.Close();
    return;
  }
  Json out;
  out["config"] = ConfigStamp(cmd);
  out["instance_count"] = report.instance_count;
  if (report.sari) {
    out["sari"] = {{"sari", report.sari->sari},
                   {"f_keep", report.sari->f_keep},
                   {"f_add", report.sari->f_add},
                   {"p_del", report.sari->p_del}};
  }
  if (report.bleu) {
    const BleuScore& b = *report.bleu;
    out["bleu"] = {{"bleu", b.bleu},
                   {"precisions", b.precisions},
                   {"matches", b.matches},
                   {"totals", b.totals},
                   {"brevity_penalty", b.brevity_penalty},
                   {"hypothesis_length", b.hypothesis_length},
                   {"reference_length", b.reference_length},
                   {"effective_order", b.effective_order}};
  }
  if (report.rouge_l) {
    out["rouge_l"] = {{"precision", report.rouge_l->precision},
                      {"recall", report.rouge_l->recall},
                      {"f1", report.rouge_l->f1}};
  }
  WriteJson(global, out);
}

// ---- complexity ---------------------------------------------------------

struct ComplexityArgs {
  std::string input;
  std::string model;
  double lambda = kDefaultLambda;
  std::vector<double> split = {0.8, 0.1, 0.1};
  size_t train_limit = 0;
  std::string easy_model;
  std::string normal_model;
};

struct LanguageModelPair {
  std::optional<NgramModel> easy;
  std::optional<NgramModel> normal;
  const NgramModel* easy_ptr() const { return easy ? &*easy : nullptr; }
  const NgramModel* normal_ptr() const { return normal ? &*normal : nullptr; }
};

LanguageModelPair LoadPair(const ComplexityArgs& args) {
  if (args.easy_model.empty() != args.normal_model.empty()) {
    throw ConfigError("--easy-model and --normal-model must be given together");
  }
  LanguageModelPair pair;
  if (!args.easy_model.empty()) {
    pair.easy = LoadLanguageModel("--easy-model", args.easy_model);
    pair.normal = LoadLanguageModel("--normal-model", args.normal_model);
  }
  return pair;
}

std::vector<LabeledSentence> ReadLabeled(const std::string& path) {
  std::vector<LabeledSentence> out;
  JsonlReader reader(path);
  nlohmann::json record;
  while (reader.Next(record)) {
    const std::string where = path + ":" + std::to_string(reader.line());
    auto text = record.find("text");
    auto label = record.find("complexity");
    if (text == record.end() || !text->is_string()) {
      throw ConfigError(where + ": missing string field \"text\"");
    }
    if (label == record.end() || !label->is_number()) {
      throw ConfigError(where + ": missing numeric field \"complexity\"");
    }
    out.push_back({text->get<std::string>(), label->get<double>()});
  }
  return out;
}

double MseOf(const ComplexityModel& model, const std::vector<LabeledSentence>& data,
             const LanguageModelPair& lms, size_t threads) {
  std::vector<double> predictions(data.size());
  std::vector<double> labels(data.size());
  internal::ParallelFor(data.size(), threads, [&](size_t i) {
    predictions[i] = model.Predict(data[i].text, lms.easy_ptr(), lms.normal_ptr());
    labels[i] = data[i].complexity;
  });
  return MeanSquaredError(predictions, labels);
}

double ConstantMse(double value, const std::vector<LabeledSentence>& data) {
  std::vector<double> labels;
  for (const auto& s : data) labels.push_back(s.complexity);
  const std::vector<double> predictions(labels.size(), value);
  return MeanSquaredError(predictions, labels);
}

void RunComplexityFit(const CLI::App& cmd, const GlobalOptions& global,
                      const ComplexityArgs& args) {
  if (args.model.empty()) throw ConfigError("--model: an output path is required");
  if (args.lambda < 0) throw ConfigError("--lambda must be non-negative");
  const LanguageModelPair lms = LoadPair(args);
  const std::vector<LabeledSentence> data = ReadLabeled(args.input);
  const auto parts = WithFlag("--split", [&] {
    return SplitIndices(data.size(), args.split, global.seed);
  });
  auto gather = [&](const std::vector<size_t>& indices, size_t limit) {
    std::vector<LabeledSentence> out;
    for (size_t i : indices) {
      if (limit > 0 && out.size() == limit) break;
      out.push_back(data[i]);
    }
    return out;
  };
  const auto train = gather(parts[0], args.train_limit);
  const auto validation = gather(parts[1], 0);
  const auto test = parts.size() > 2 ? gather(parts[2], 0) : std::vector<LabeledSentence>{};

  const ComplexityModel model = ComplexityModel::Fit(train, args.lambda, lms.easy_ptr(),
                                                     lms.normal_ptr());
  std::vector<double> train_labels;
  for (const auto& s : train) train_labels.push_back(s.complexity);
  const double train_mean = SortedMean(train_labels);
  const size_t threads = global.worker_count();
  const Json stamp = ConfigStamp(cmd);

  Json report;
  report["config"] = stamp;
  report["model"] = args.model;
  report["spec_version"] = model.spec_version();
  report["counts"] = {{"train", train.size()},
                      {"validation", validation.size()},
                      {"test", test.size()}};
  report["train_label_mean"] = train_mean;
  report["train_mse"] = MseOf(model, train, lms, threads);
  report["validation_mse"] = MseOf(model, validation, lms, threads);
  report["baseline_validation_mse"] = ConstantMse(train_mean, validation);
  if (!test.empty()) {
    report["test_mse"] = MseOf(model, test, lms, threads);
    report["baseline_test_mse"] = ConstantMse(train_mean, test);
  }
  Json weights = Json::object();
  const auto w = model.weights();
  for (size_t j = 0; j < kFeatureCount; ++j) weights[std::string(kFeatureNames[j])] = w[j];
  weights["bias"] = w.back();
  report["weights"] = weights;

  Json model_json = Json::parse(model.ToJson());
  model_json["config"] = stamp;
  WriteFileOrThrow(args.model, model_json.dump(2) + "\n");

  if (global.pretty) {
    std::vector<std::vector<std::string>> rows = {
        {"train", std::to_string(train.size()), Fixed(report["train_mse"].get<double>(), 4), ""},
        {"validation", std::to_string(validation.size()),
         Fixed(report["validation_mse"].get<double>(), 4),
         Fixed(report["baseline_validation_mse"].get<double>(), 4)}};
    if (!test.empty()) {
      rows.push_back({"test", std::to_string(test.size()),
                      Fixed(report["test_mse"].get<double>(), 4),
                      Fixed(report["baseline_test_mse"].get<double>(), 4)});
    }
    OutputSink sink(global.out);
    PrintTable(sink.stream(), {"split", "sentences", "mse", "mean-predictor mse"}, rows);
    sink.Close();
  } else {
    WriteJson(global, report);
  }
}

ComplexityModel LoadComplexityModel(const std::string& path) {
  if (path.empty()) throw ConfigError("--model is required");
  return ComplexityModel::FromJson(ReadFileOrThrow(path));
}

void RunComplexityPredict(const CLI::App& cmd, const GlobalOptions& global,
                          const ComplexityArgs& args) {
  const ComplexityModel model = LoadComplexityModel(args.model);
  const LanguageModelPair lms = LoadPair(args);
  OutputSink sink(global.out);
  std::vector<std::vector<std::string>> table;
  ForEachDocumentBatch(args.input, kBatchSize, [&](std::vector<Document>& docs, size_t) {
    std::vector<double> predictions(docs.size());
    internal::ParallelFor(docs.size(), global.worker_count(), [&](size_t i) {
      predictions[i] = model.Predict(ModelText(docs[i]), lms.easy_ptr(), lms.normal_ptr());
    });
    for (size_t i = 0; i < docs.size(); ++i) {
      if (global.pretty) {
        table.push_back({docs[i].id, Fixed(predictions[i], 3)});
        continue;
      }
      Json row;
      row["id"] = docs[i].id;
      row["complexity"] = predictions[i];
      sink.stream() << row.dump() << "\n";
    }
  });
  if (global.pretty) PrintTable(sink.stream(), {"id", "complexity"}, table);
  sink.Close();
  if (!global.pretty) WriteSidecarStamp(sink, ConfigStamp(cmd));
}

void RunComplexityEval(const CLI::App& cmd, const GlobalOptions& global,
                       const ComplexityArgs& args) {
  const ComplexityModel model = LoadComplexityModel(args.model);
  const LanguageModelPair lms = LoadPair(args);
  const std::vector<LabeledSentence> data = ReadLabeled(args.input);
  if (data.empty()) throw ComputeError("--input: empty evaluation set");
  const double mse = MseOf(model, data, lms, global.worker_count());
  if (global.pretty) {
    OutputSink sink(global.out);
    sink.stream() << "MSE " << Fixed(mse, 4) << " on " << data.size() << " sentences\n";
    sink.Close();
    return;
  }
  Json out;
  out["config"] = ConfigStamp(cmd);
  out["count"] = data.size();
  out["mse"] = mse;
  WriteJson(global, out);
}

// ---- desk-corpus --------------------------------------------------------

struct DeskArgs {
  std::string kind = "easy";
  size_t count = 100;
};

void RunDeskCorpus(const CLI::App& cmd, const GlobalOptions& global,
                   const DeskArgs& args) {
  OutputSink sink(global.out);
  char id[32];
  if (args.kind == "complexity") {
    const auto sentences = desk::ComplexitySentences(args.count, global.seed);
    for (size_t i = 0; i < sentences.size(); ++i) {
      std::snprintf(id, sizeof id, "complexity-%06zu", i + 1);
      Json row;
      row["id"] = id;
      row["text"] = sentences[i].text;
      row["complexity"] = sentences[i].complexity;
      sink.stream() << row.dump() << "\n";
    }
  } else {
    const bool easy = args.kind == "easy";
    const auto paragraphs = easy ? desk::EasyParagraphs(args.count, global.seed)
                                 : desk::NormalParagraphs(args.count, global.seed);
    for (size_t i = 0; i < paragraphs.size(); ++i) {
      std::snprintf(id, sizeof id, "%s-%06zu", args.kind.c_str(), i + 1);
      Json row;
      row["id"] = id;
      row["text"] = paragraphs[i].text;
      row["meta"] = {{"style", args.kind}};
      sink.stream() << row.dump() << "\n";
    }
  }
  sink.Close();
  WriteSidecarStamp(sink, ConfigStamp(cmd));
}

// ---- wiring ---------------------------------------------------------------

int Fail(int code, const std::string& message) {
  std::cerr << "leichtkit: " << message << "\n";
  return code;
}

int Main(int argc, char** argv) {
  CLI::App app{"leichtkit: Easy Language corpus preparation, readability, "
               "language-model and metric tools"};
  app.name("leichtkit");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.option_defaults()->always_capture_default();
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.config_formatter(std::make_shared<JsonOrTomlConfig>());
  app.set_config("--config", "", "JSON or TOML file with option defaults; flags override it")
      ->envname("LEICHTKIT_CONFIG");

  GlobalOptions global;
  app.add_option("--out", global.out, "Output file (default: stdout)");
  app.add_option("--seed", global.seed, "Seed for every random choice");
  app.add_option("--threads", global.threads,
                 "Worker threads (0: one per core); results do not depend on it");
  app.add_flag("--pretty", global.pretty, "Human-readable table instead of JSON");

  PreprocessArgs pre;
  auto* preprocess = app.add_subcommand("preprocess", "Strip markup, flatten bullets, hyphenate compounds");
  preprocess->add_option("--input", pre.input, "Documents (JSONL; - for stdin)")->required();
  preprocess->add_option("--lexicon", pre.lexicon, "Hyphenation lexicon (JSON)");

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "Seeded train/validation[/test] split");
  split_cmd->add_option("--input", split.input, "Documents (JSONL)")->required();
  split_cmd->add_option("--ratios", split.ratios, "Two or three fractions summing to 1")
      ->delimiter(',')
      ->expected(2, 3);
  split_cmd->add_option("--out-dir", split.out_dir, "Directory for the split files")
      ->required()
      ->check(CLI::ExistingDirectory);

  LexiconArgs lex;
  auto* lexicon = app.add_subcommand("lexicon", "Collect hyphenated compounds into a lexicon");
  lexicon->add_option("--input", lex.input, "Documents (JSONL)")->required();
  lexicon->add_option("--min-count", lex.min_count, "Minimum occurrences of a form");

  StatsArgs st;
  auto* stats = app.add_subcommand("stats", "Readability and Easy Language statistics per document");
  stats->add_option("--input", st.input, "Documents (JSONL)")->required();
  stats->add_option("--format", st.format, "json (JSONL rows) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  stats->add_option("--abbreviations", st.abbreviations, "Abbreviation list replacing the built-in one")
      ->check(CLI::ExistingFile);

  TrainLmArgs tl;
  auto* train_lm = app.add_subcommand("train-lm", "Train a smoothed n-gram language model");
  train_lm->add_option("--input", tl.input, "Documents (JSONL)")->required();
  train_lm->add_option("--order", tl.order, "n-gram order (1-5)");
  train_lm->add_option("--smoothing", tl.smoothing, "kneser-ney or witten-bell");
  train_lm->add_option("--discount", tl.discount, "Kneser-Ney discount in (0, 1)");
  train_lm->add_option("--min-count", tl.min_count, "Minimum count for a vocabulary entry");
  train_lm->add_option("--unit", tl.unit, "Training sequence: document or sentence")
      ->check(CLI::IsMember({"document", "sentence"}));

  PerplexityArgs pp;
  auto* perplexity = app.add_subcommand("perplexity", "Sample-wise perplexity under a model");
  perplexity->add_option("--input", pp.input, "Samples (JSONL documents)")->required();
  perplexity->add_option("--model", pp.model, "Model file from train-lm")->required();
  perplexity->add_option("--model-id", pp.model_id, "Name reported for the model");

  DiscriminateArgs dc;
  auto* discriminate = app.add_subcommand("discriminate", "Label samples easy or normal by perplexity");
  discriminate->add_option("--input", dc.input, "Samples (JSONL documents)")->required();
  discriminate->add_option("--easy-model", dc.easy_model, "Model trained on easy-style text")->required();
  discriminate->add_option("--normal-model", dc.normal_model, "Model trained on normal-style text")->required();

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "SARI, BLEU and ROUGE-L over simplification outputs");
  evaluate->add_option("--input", ev.input, "JSONL with source, hypothesis, references")->required();
  evaluate->add_option("--metrics", ev.metrics, "Comma-separated: sari, bleu, rouge-l");

  ComplexityArgs cx;
  auto* complexity = app.add_subcommand("complexity", "Sentence complexity regression on the 1-7 scale");
  complexity->require_subcommand(1);
  complexity->fallthrough();
  auto add_lm_flags = [&](CLI::App* sub) {
    sub->add_option("--easy-model", cx.easy_model, "Easy-style model for perplexity features");
    sub->add_option("--normal-model", cx.normal_model, "Normal-style model for perplexity features");
  };
  auto* fit = complexity->add_subcommand("fit", "Split, fit and report MSE");
  fit->add_option("--input", cx.input, "Labeled sentences (JSONL: text, complexity)")->required();
  fit->add_option("--model", cx.model, "Where to write the fitted model (JSON)")->required();
  fit->add_option("--lambda", cx.lambda, "Ridge penalty");
  fit->add_option("--split", cx.split, "Train/validation[/test] fractions")
      ->delimiter(',')
      ->expected(2, 3);
  fit->add_option("--train-limit", cx.train_limit,
                  "Use only the first N shuffled training sentences (0: all)");
  add_lm_flags(fit);
  auto* predict = complexity->add_subcommand("predict", "Predict complexity per document");
  predict->add_option("--input", cx.input, "Documents (JSONL)")->required();
  predict->add_option("--model", cx.model, "Model from complexity fit")->required();
  add_lm_flags(predict);
  auto* eval = complexity->add_subcommand("eval", "MSE on a labeled set");
  eval->add_option("--input", cx.input, "Labeled sentences (JSONL)")->required();
  eval->add_option("--model", cx.model, "Model from complexity fit")->required();
  add_lm_flags(eval);

  DeskArgs desk_args;
  auto* desk = app.add_subcommand("desk-corpus", "Generate the synthetic contrasting corpora");
  desk->add_option("--kind", desk_args.kind, "easy, normal or complexity")
      ->check(CLI::IsMember({"easy", "normal", "complexity"}));
  desk->add_option("--count", desk_args.count, "Number of paragraphs or sentences");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::FileError& e) {
    // A missing --config file is an I/O problem, not a usage error.
    return Fail(2, e.what());
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*preprocess) RunPreprocess(*preprocess, global, pre);
    if (*split_cmd) RunSplit(*split_cmd, global, split);
    if (*lexicon) RunLexicon(*lexicon, global, lex);
    if (*stats) RunStats(*stats, global, st);
    if (*train_lm) RunTrainLm(*train_lm, global, tl);
    if (*perplexity) RunPerplexity(*perplexity, global, pp);
    if (*discriminate) RunDiscriminate(*discriminate, global, dc);
    if (*evaluate) RunEvaluate(*evaluate, global, ev);
    if (*fit) RunComplexityFit(*fit, global, cx);
    if (*predict) RunComplexityPredict(*predict, global, cx);
    if (*eval) RunComplexityEval(*eval, global, cx);
    if (*desk) RunDeskCorpus(*desk, global, desk_args);
  } catch (const ConfigError& e) {
    return Fail(1, e.what());
  } catch (const IoError& e) {
    return Fail(2, e.what());
  } catch (const ComputeError& e) {
    return Fail(3, e.what());
  } catch (const std::exception& e) {
    return Fail(3, e.what());
  }
  return 0;
}

}  // namespace
}  // namespace leichtkit::cli

int main(int argc, char** argv) { return leichtkit::cli::Main(argc, argv); }
