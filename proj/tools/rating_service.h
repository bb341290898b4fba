// Copyright 2026 The dialect-tod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// HTTP service that hands out eval items to annotators and collects ratings.
//
//   GET  /api/items?annotator=<id>     items (no rule or dataset) plus that
//                                      annotator's current rating, if any
//   POST /api/ratings                  {"item_id", "annotator_id", "score",
//                                      "comment"}; score is 1..5 or "idk"
//   GET  /api/progress?annotator=<id>  {"rated": n, "total": N}
//   GET  /api/export                   materialized ratings, one per line
//
// Ratings are appended to a log file and materialized last-write-wins, so a
// crash loses at most the request in flight.

#ifndef DIALECT_TOOLS_RATING_SERVICE_H_
#define DIALECT_TOOLS_RATING_SERVICE_H_

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "dialect/records.h"

namespace httplib {
class Server;
}

namespace dialect::tools {

// Thread-safe view over the append-only ratings log.
class RatingStore {
 public:
  // Replays an existing log; a missing file starts empty.
  explicit RatingStore(std::filesystem::path log);

  // Appends and flushes. Throws Error when the log cannot be written.
  void Submit(const RatingRecord& record);
  std::vector<RatingRecord> Materialized() const;
  std::optional<RatingRecord> Find(const std::string& item_id,
                                   const std::string& annotator_id) const;

 private:
  using Key = std::pair<std::string, std::string>;

  std::filesystem::path path_;
  mutable std::shared_mutex mu_;
  std::ofstream log_;
  std::vector<RatingRecord> records_;  // materialized, first-appearance order
  std::map<Key, std::size_t> index_;
};

struct ServiceOptions {
  std::filesystem::path ratings_log;
  // Served at "/" when set (the annotation UI bundle).
  std::optional<std::filesystem::path> static_dir;
  // Source of record timestamps; defaults to the UTC wall clock.
  std::function<std::string()> clock;
};

class RatingService {
 public:
  RatingService(std::vector<EvalItem> items, ServiceOptions options);
  ~RatingService();

  RatingService(const RatingService&) = delete;
  RatingService& operator=(const RatingService&) = delete;

  // Blocks until Stop(). Returns false when the address cannot be bound.
  bool Listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it, or -1.
  int BindToAnyPort(const std::string& host);
  // Serves on a socket bound by BindToAnyPort; blocks until Stop().
  bool ListenAfterBind();
  void Stop();
  void WaitUntilReady() const;

 private:
  void Routes();

  std::vector<EvalItem> items_;
  std::map<std::string, std::size_t> item_index_;
  ServiceOptions options_;
  RatingStore store_;
  std::unique_ptr<httplib::Server> server_;
};

// "2026-03-01T10:00:00Z".
std::string UtcTimestamp();

// "host:port" -> parts; throws Error on a malformed address.
std::pair<std::string, int> ParseBindAddress(const std::string& bind);

}  // namespace dialect::tools

#endif  // DIALECT_TOOLS_RATING_SERVICE_H_
