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

#include "rating_service.h"

#include <fmt/format.h>

#include <charconv>
#include <ctime>
#include <mutex>

#include "httplib.h"
#include "json.hpp"

namespace dialect::tools {
namespace {

using nlohmann::json;

void SendJson(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, int status, const std::string& msg) {
  SendJson(res, {{"error", msg}}, status);
}

json ScoreJson(int score) {
  return score == RatingRecord::kIdk ? json("idk") : json(score);
}

}  // namespace

std::string UtcTimestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::pair<std::string, int> ParseBindAddress(const std::string& bind) {
  const auto colon = bind.rfind(':');
  int port = -1;
  if (colon != std::string::npos && colon > 0) {
    const char* first = bind.data() + colon + 1;
    const char* last = bind.data() + bind.size();
    auto [ptr, ec] = std::from_chars(first, last, port);
    if (ec != std::errc() || ptr != last) port = -1;
  }
  if (port < 0 || port > 65535) {
    throw Error(fmt::format("bind address must be host:port, got '{}'", bind));
  }
  return {bind.substr(0, colon), port};
}

RatingStore::RatingStore(std::filesystem::path log) : path_(std::move(log)) {
  if (std::filesystem::is_regular_file(path_)) {
    for (const RatingRecord& r : MaterializeRatings(ReadRatingsFile(path_))) {
      index_[{r.item_id, r.annotator_id}] = records_.size();
      records_.push_back(r);
    }
  } else if (!std::filesystem::exists(path_) && path_.has_parent_path()) {
    std::filesystem::create_directories(path_.parent_path());
  }
  log_.open(path_, std::ios::app);
  if (!log_) throw Error(fmt::format("cannot open ratings log {}", path_.string()));
}

void RatingStore::Submit(const RatingRecord& record) {
  const std::string line = ToJson(record);  // validates the score
  std::unique_lock lock(mu_);
  log_ << line << '\n';
  log_.flush();
  if (!log_) {
    log_.clear();
    throw Error(fmt::format("cannot append to {}", path_.string()));
  }
  auto [it, fresh] =
      index_.emplace(Key(record.item_id, record.annotator_id), records_.size());
  if (fresh) {
    records_.push_back(record);
  } else {
    records_[it->second] = record;
  }
}

std::vector<RatingRecord> RatingStore::Materialized() const {
  std::shared_lock lock(mu_);
  return records_;
}

std::optional<RatingRecord> RatingStore::Find(
    const std::string& item_id, const std::string& annotator_id) const {
  std::shared_lock lock(mu_);
  auto it = index_.find({item_id, annotator_id});
  if (it == index_.end()) return std::nullopt;
  return records_[it->second];
}

RatingService::RatingService(std::vector<EvalItem> items, ServiceOptions options)
    : items_(std::move(items)),
      options_(std::move(options)),
      store_(options_.ratings_log),
      server_(std::make_unique<httplib::Server>()) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (!item_index_.emplace(items_[i].item_id, i).second) {
      throw Error(fmt::format("duplicate item id {}", items_[i].item_id));
    }
  }
  if (!options_.clock) options_.clock = UtcTimestamp;
  Routes();
}

RatingService::~RatingService() = default;

void RatingService::Routes() {
  httplib::Server& s = *server_;

  s.Get("/api/items", [this](const httplib::Request& req,
                             httplib::Response& res) {
    const std::string annotator = req.get_param_value("annotator");
    if (annotator.empty()) return SendError(res, 400, "annotator is required");
    json out = json::array();
    for (const EvalItem& item : items_) {
      // Rule and dataset stay hidden from annotators.
      json j = {{"item_id", item.item_id},
                {"sentence_a", item.sentence_a},
                {"sentence_b", item.sentence_b}};
      if (auto r = store_.Find(item.item_id, annotator)) {
        j["score"] = ScoreJson(r->score);
        j["comment"] = r->comment;
      }
      out.push_back(std::move(j));
    }
    SendJson(res, out);
  });

  s.Post("/api/ratings", [this](const httplib::Request& req,
                                httplib::Response& res) {
    RatingRecord r;
    try {
      r = RatingFromJson(req.body);
    } catch (const Error& e) {
      return SendError(res, 400, e.what());
    }
    if (r.annotator_id.empty()) return SendError(res, 400, "empty annotator_id");
    if (!item_index_.contains(r.item_id)) {
      return SendError(res, 404, fmt::format("unknown item {}", r.item_id));
    }
    r.timestamp = options_.clock();
    try {
      store_.Submit(r);
    } catch (const Error& e) {
      return SendError(res, 500, e.what());
    }
    SendJson(res, json::parse(ToJson(r)), 201);
  });

  s.Get("/api/progress", [this](const httplib::Request& req,
                                httplib::Response& res) {
    const std::string annotator = req.get_param_value("annotator");
    if (annotator.empty()) return SendError(res, 400, "annotator is required");
    int rated = 0;
    for (const EvalItem& item : items_) {
      if (store_.Find(item.item_id, annotator)) ++rated;
    }
    SendJson(res, {{"rated", rated}, {"total", items_.size()}});
  });

  s.Get("/api/export", [this](const httplib::Request&, httplib::Response& res) {
    std::string body;
    for (const RatingRecord& r : store_.Materialized()) {
      body += ToJson(r);
      body += '\n';
    }
    res.set_content(body, "application/x-ndjson");
  });

  if (options_.static_dir) {
    if (!s.set_mount_point("/", options_.static_dir->string())) {
      throw Error(fmt::format("static directory {} does not exist",
                              options_.static_dir->string()));
    }
  }
}

bool RatingService::Listen(const std::string& host, int port) {
  return server_->listen(host, port);
}

int RatingService::BindToAnyPort(const std::string& host) {
  return server_->bind_to_any_port(host);
}

bool RatingService::ListenAfterBind() { return server_->listen_after_bind(); }

void RatingService::Stop() { server_->stop(); }

void RatingService::WaitUntilReady() const { server_->wait_until_ready(); }

}  // namespace dialect::tools
