// Copyright 2026 The MCG Authors. All rights reserved.
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

#include "mcg/cli/cache.h"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>
#include <utility>

#include "mcg/error.h"

namespace mcg::cli {

namespace {

std::string CanonicalFlags(const ModelOptions& model) {
  return std::string("symmetric=") + (model.symmetric ? "1" : "0") +
         ";relaxed_queries=" + (model.relaxed_queries ? "1" : "0");
}

Json FlagsToJson(const ModelOptions& model) {
  return {{"symmetric", model.symmetric},
          {"relaxed_queries", model.relaxed_queries}};
}

Json EntryToJson(const CacheEntry& e) {
  return {{"n", e.spec.n},
          {"d", e.spec.d},
          {"k", e.spec.k},
          {"variant", VariantName(e.spec.variant)},
          {"flags", FlagsToJson(e.model)},
          {"value", e.value},
          {"stats", e.stats},
          {"tool_version", e.tool_version},
          {"timestamp", e.timestamp}};
}

CacheEntry EntryFromJson(const Json& j, const std::string& path) {
  try {
    CacheEntry e;
    e.spec.n = j.at("n").get<int>();
    e.spec.d = j.at("d").get<int>();
    e.spec.k = j.at("k").get<int>();
    e.spec.variant = ParseVariant(j.at("variant").get<std::string>());
    e.model.symmetric = j.at("flags").at("symmetric").get<bool>();
    e.model.relaxed_queries = j.at("flags").at("relaxed_queries").get<bool>();
    e.value = j.at("value").get<std::string>();
    RationalFromJson(j.at("value"), path + ".value");
    e.stats = j.value("stats", Json::object());
    e.tool_version = j.value("tool_version", "");
    e.timestamp = j.value("timestamp", "");
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput("cache entry " + path + ": " + ex.what());
  }
}

}  // namespace

std::string FlagsHash(const ModelOptions& model) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : CanonicalFlags(model)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

std::string CacheKey(const GameSpec& spec, const ModelOptions& model) {
  return std::to_string(spec.n) + "," + std::to_string(spec.d) + "," +
         std::to_string(spec.k) + "," + VariantName(spec.variant) + "," +
         FlagsHash(model);
}

std::string UtcTimestamp() {
  std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

void ResultCache::Load() {
  if (!persistent() || !std::filesystem::exists(path_)) return;
  std::ifstream in(path_);
  if (!in) throw InvalidInput("cannot read cache file " + path_);
  std::stringstream text;
  text << in.rdbuf();
  Json doc = ParseJson(text.str());
  if (!doc.is_object() || doc.value("schema", "") != kCacheSchema) {
    throw InvalidInput("cache file " + path_ + " does not have schema " +
                       kCacheSchema);
  }
  if (!doc.contains("entries") || !doc["entries"].is_object()) {
    throw InvalidInput("cache file " + path_ + " has no entries object");
  }
  std::map<std::string, CacheEntry> loaded;
  for (const auto& [key, j] : doc["entries"].items()) {
    CacheEntry e = EntryFromJson(j, "entries." + key);
    if (CacheKey(e.spec, e.model) != key) {
      throw InvalidInput("cache entry " + key + " does not match its key");
    }
    loaded.emplace(key, std::move(e));
  }
  std::lock_guard<std::mutex> lock(mu_);
  entries_ = std::move(loaded);
}

void ResultCache::Save() const {
  if (!persistent()) return;
  std::lock_guard<std::mutex> save_lock(save_mu_);
  Json doc = {{"schema", kCacheSchema},
              {"tool_version", kToolVersion},
              {"entries", Json::object()}};
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [key, e] : entries_) doc["entries"][key] = EntryToJson(e);
  }
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump(2) << "\n";
    out.flush();
    if (!out) throw InvalidInput("cannot write cache file " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) {
    throw InvalidInput("cannot replace cache file " + path_ + ": " +
                       ec.message());
  }
}

std::optional<CacheEntry> ResultCache::Get(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::Put(const std::string& key, CacheEntry entry) {
  std::lock_guard<std::mutex> lock(mu_);
  entries_[key] = std::move(entry);
}

std::map<std::string, CacheEntry> ResultCache::Entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_;
}

}  // namespace mcg::cli
