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

// Plumbing shared by the leichtkit subcommands: JSONL streaming, output
// sinks, the reproducibility stamp and the JSON/TOML config reader.

#ifndef LEICHTKIT_TOOLS_CLI_SUPPORT_H_
#define LEICHTKIT_TOOLS_CLI_SUPPORT_H_

#include <cstddef>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "leichtkit/errors.h"
#include "leichtkit/preprocess.h"

namespace leichtkit::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "0.1.0";

// Reads one JSON object per non-blank line. "-" reads stdin.
class JsonlReader {
 public:
  explicit JsonlReader(const std::string& path);

  // False at end of input. Throws IoError on malformed lines.
  bool Next(nlohmann::json& record);
  size_t line() const { return line_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ifstream file_;
  std::istream* in_;
  size_t line_ = 0;
};

// Document from a {"id", "text", "clean_text"?, "meta"?} record; the id
// defaults to the line number.
Document ParseDocument(const nlohmann::json& record, size_t line);
nlohmann::json DocumentToJson(const Document& doc);

// Reads a whole JSONL file of documents in batches of `batch` and calls
// fn(batch_docs, first_line_index) for each.
template <typename Fn>
void ForEachDocumentBatch(const std::string& path, size_t batch, Fn&& fn) {
  JsonlReader reader(path);
  std::vector<Document> docs;
  nlohmann::json record;
  size_t first = 0;
  while (reader.Next(record)) {
    docs.push_back(ParseDocument(record, reader.line()));
    if (docs.size() == batch) {
      fn(docs, first);
      first += docs.size();
      docs.clear();
    }
  }
  if (!docs.empty()) fn(docs, first);
}

// stdout, or a file when `path` is non-empty. Opening or write failures
// throw IoError.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path);
  std::ostream& stream() { return *out_; }
  void Close();
  bool is_file() const { return !path_.empty(); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

void WriteFileOrThrow(const std::string& path, const std::string& content);
std::string ReadFileOrThrow(const std::string& path);

// The resolved options of `command` (and the global options of its parents)
// as a JSON object. Options that cannot change results (output path,
// thread count, config file, help, pretty printing) are left out so that
// runs differing only in those produce identical artifacts.
Json ConfigStamp(const CLI::App& command);

// Writes `stamp` next to a streamed output file as "<path>.config.json".
void WriteSidecarStamp(const OutputSink& sink, const Json& stamp);

// Accepts a JSON object (nested objects are subcommand sections, arrays
// are multi-value options) or, when the text does not start with '{', the
// TOML subset CLI11 understands.
class JsonOrTomlConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also,
                        bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

// Rethrows a ConfigError from `fn` with the flag name prefixed.
template <typename Fn>
auto WithFlag(const std::string& flag, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    throw ConfigError(flag + ": " + e.what());
  }
}

// Formats a double for tables.
std::string Fixed(double value, int precision = 3);

// Left-aligned text table.
void PrintTable(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

}  // namespace leichtkit::cli

#endif  // LEICHTKIT_TOOLS_CLI_SUPPORT_H_
