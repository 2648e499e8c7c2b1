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

#include "cli_support.h"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <utility>

namespace leichtkit::cli {

JsonlReader::JsonlReader(const std::string& path) : path_(path), in_(&std::cin) {
  if (path != "-") {
    file_.open(path);
    if (!file_) throw IoError("cannot open input file '" + path + "'");
    in_ = &file_;
  }
}

bool JsonlReader::Next(nlohmann::json& record) {
  std::string text;
  while (std::getline(*in_, text)) {
    ++line_;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      record = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw IoError(path_ + ":" + std::to_string(line_) + ": malformed JSON (" +
                    e.what() + ")");
    }
    if (!record.is_object()) {
      throw IoError(path_ + ":" + std::to_string(line_) +
                    ": expected a JSON object");
    }
    return true;
  }
  if (in_->bad()) throw IoError("read error on '" + path_ + "'");
  return false;
}

Document ParseDocument(const nlohmann::json& record, size_t line) {
  auto text = record.find("text");
  if (text == record.end() || !text->is_string()) {
    throw ConfigError("line " + std::to_string(line) +
                      ": document needs a string field \"text\"");
  }
  std::string id = "line-" + std::to_string(line);
  if (auto it = record.find("id"); it != record.end()) {
    id = it->is_string() ? it->get<std::string>() : it->dump();
  }
  std::map<std::string, std::string> meta;
  if (auto it = record.find("meta"); it != record.end() && it->is_object()) {
    for (const auto& [key, value] : it->items()) {
      meta[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  Document doc = Document::Create(std::move(id), text->get<std::string>(),
                                  std::move(meta));
  if (auto it = record.find("clean_text"); it != record.end() && it->is_string()) {
    doc.clean_text = it->get<std::string>();
  }
  return doc;
}

nlohmann::json DocumentToJson(const Document& doc) {
  nlohmann::ordered_json out;
  out["id"] = doc.id;
  out["text"] = doc.raw_text;
  if (doc.clean_text) out["clean_text"] = *doc.clean_text;
  if (!doc.meta.empty()) out["meta"] = doc.meta;
  return nlohmann::json::parse(out.dump());
}

OutputSink::OutputSink(const std::string& path) : path_(path), out_(&std::cout) {
  if (!path.empty() && path != "-") {
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open output file '" + path + "'");
    out_ = file_.get();
  } else {
    path_.clear();
  }
}

void OutputSink::Close() {
  out_->flush();
  if (!*out_) throw IoError("write error on '" + (path_.empty() ? "stdout" : path_) + "'");
  if (file_) file_->close();
}

void WriteFileOrThrow(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  out << content;
  out.close();
  if (!out) throw IoError("write error on '" + path + "'");
}

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read error on '" + path + "'");
  return buffer.str();
}

namespace {

bool IsStampExcluded(const std::string& name) {
  static const char* kExcluded[] = {"help", "help-all", "config", "out",
                                    "threads", "pretty", "version"};
  return std::find(std::begin(kExcluded), std::end(kExcluded), name) !=
         std::end(kExcluded);
}

void AddOptions(const CLI::App& app, Json& options) {
  for (const CLI::Option* opt : app.get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || IsStampExcluded(name)) continue;
    std::string value;
    if (opt->count() > 0) {
      const auto& results = opt->results();
      for (size_t i = 0; i < results.size(); ++i) {
        if (i > 0) value += ",";
        value += results[i];
      }
    } else {
      value = opt->get_default_str();
    }
    options[name] = value;
  }
}

}  // namespace

Json ConfigStamp(const CLI::App& command) {
  std::vector<const CLI::App*> chain;
  for (const CLI::App* app = &command; app != nullptr; app = app->get_parent()) {
    chain.push_back(app);
  }
  std::reverse(chain.begin(), chain.end());
  std::string name;
  Json options = Json::object();
  for (const CLI::App* app : chain) {
    if (app->get_parent() != nullptr) {
      if (!name.empty()) name += " ";
      name += app->get_name();
    }
    AddOptions(*app, options);
  }
  Json sorted = Json::object();
  std::vector<std::string> keys;
  for (const auto& [key, value] : options.items()) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  for (const auto& key : keys) sorted[key] = options[key];

  Json stamp;
  stamp["tool"] = "leichtkit";
  stamp["version"] = kVersion;
  stamp["command"] = name;
  stamp["options"] = sorted;
  return stamp;
}

void WriteSidecarStamp(const OutputSink& sink, const Json& stamp) {
  if (!sink.is_file()) return;
  WriteFileOrThrow(sink.path() + ".config.json", stamp.dump(2) + "\n");
}

namespace {

void Flatten(const nlohmann::json& node, std::vector<std::string>& parents,
             std::vector<CLI::ConfigItem>& items) {
  for (const auto& [key, value] : node.items()) {
    if (value.is_object()) {
      parents.push_back(key);
      Flatten(value, parents, items);
      parents.pop_back();
      continue;
    }
    if (value.is_null()) continue;
    CLI::ConfigItem item;
    item.parents = parents;
    item.name = key;
    auto scalar = [](const nlohmann::json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (value.is_array()) {
      for (const auto& element : value) item.inputs.push_back(scalar(element));
    } else {
      item.inputs.push_back(scalar(value));
    }
    items.push_back(std::move(item));
  }
}

}  // namespace

std::string JsonOrTomlConfig::to_config(const CLI::App* app, bool default_also,
                                        bool write_description,
                                        std::string prefix) const {
  return CLI::ConfigTOML().to_config(app, default_also, write_description,
                                     std::move(prefix));
}

std::vector<CLI::ConfigItem> JsonOrTomlConfig::from_config(
    std::istream& input) const {
  std::ostringstream buffer;
  buffer << input.rdbuf();
  const std::string text = buffer.str();
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') {
    std::istringstream toml(text);
    return CLI::ConfigTOML().from_config(toml);
  }
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CLI::ConfigError(std::string("malformed JSON config: ") + e.what());
  }
  std::vector<CLI::ConfigItem> items;
  std::vector<std::string> parents;
  Flatten(json, parents, items);
  return items;
}

std::string Fixed(double value, int precision) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << value;
  return out.str();
}

void PrintTable(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size(), 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  measure(header);
  for (const auto& row : rows) measure(row);
  auto print = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << "\n";
  };
  print(header);
  size_t total = 0;
  for (size_t w : width) total += w + 2;
  out << std::string(total > 2 ? total - 2 : 0, '-') << "\n";
  for (const auto& row : rows) print(row);
}

}  // namespace leichtkit::cli
