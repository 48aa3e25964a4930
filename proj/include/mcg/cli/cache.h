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

#ifndef MCG_CLI_CACHE_H_
#define MCG_CLI_CACHE_H_

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "mcg/game.h"
#include "mcg/json_io.h"
#include "mcg/search_model.h"

namespace mcg::cli {

inline constexpr char kCacheSchema[] = "mcg-result-cache/1";
inline constexpr char kToolVersion[] = "0.1.0";

// One stored game value together with what is needed to recompute it.
struct CacheEntry {
  GameSpec spec;
  ModelOptions model;
  // Exact value as "p/q".
  std::string value;
  Json stats = Json::object();
  std::string tool_version = kToolVersion;
  // UTC, ISO 8601.
  std::string timestamp;
};

// Stable 64-bit FNV-1a digest (16 hex digits) of every flag that can change
// a game value, so results under different flags never collide.
std::string FlagsHash(const ModelOptions& model);

// "n,d,k,variant,flags-hash".
std::string CacheKey(const GameSpec& spec, const ModelOptions& model);

// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string UtcTimestamp();

// A persistent map from CacheKey to CacheEntry stored as one JSON document
// with a schema field. An empty path gives a cache that never touches disk.
// Get and Put are safe to call from several threads.
class ResultCache {
 public:
  explicit ResultCache(std::string path = "");

  // Reads the file if it exists. Throws InvalidInput when the file is not a
  // cache document of the supported schema.
  void Load();
  // Writes the whole document to a temporary sibling file and renames it
  // over the target, so readers never observe a partial file.
  void Save() const;

  std::optional<CacheEntry> Get(const std::string& key) const;
  void Put(const std::string& key, CacheEntry entry);
  std::map<std::string, CacheEntry> Entries() const;

  const std::string& path() const { return path_; }
  bool persistent() const { return !path_.empty(); }

 private:
  std::string path_;
  mutable std::mutex mu_;
  // Serializes writers of the temporary file.
  mutable std::mutex save_mu_;
  std::map<std::string, CacheEntry> entries_;
};

}  // namespace mcg::cli

#endif  // MCG_CLI_CACHE_H_
