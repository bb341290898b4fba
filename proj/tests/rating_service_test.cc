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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace dialect::tools {
namespace {

using nlohmann::json;
using ::testing::HasSubstr;
using ::testing::Not;

std::vector<EvalItem> Items() {
  std::vector<EvalItem> items;
  for (int i = 1; i <= 6; ++i) {
    const std::string id = "s" + std::to_string(i);
    items.push_back({"xsid/article_name/" + id, id, "xsid", "article_name",
                     "Ich muss Papa jetzt anrufen .",
                     "Ich muss den Papa jetzt anrufen ."});
  }
  return items;
}

class RatingServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    log_ = std::filesystem::temp_directory_path() /
           ("ratings_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name() +
            ".jsonl");
    std::filesystem::remove(log_);
    Start();
  }

  void TearDown() override {
    StopService();
    std::filesystem::remove(log_);
  }

  void Start() {
    ServiceOptions options;
    options.ratings_log = log_;
    options.clock = [] { return std::string("2026-05-01T12:00:00Z"); };
    service_ = std::make_unique<RatingService>(Items(), options);
    port_ = service_->BindToAnyPort("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { service_->ListenAfterBind(); });
    service_->WaitUntilReady();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }

  void StopService() {
    if (!service_) return;
    service_->Stop();
    thread_.join();
    service_.reset();
  }

  httplib::Result Post(const std::string& item, const std::string& annotator,
                       const json& score, const std::string& comment = "") {
    const json body = {{"item_id", item},
                       {"annotator_id", annotator},
                       {"score", score},
                       {"comment", comment}};
    return client_->Post("/api/ratings", body.dump(), "application/json");
  }

  json GetJson(const std::string& path) {
    auto res = client_->Get(path);
    EXPECT_TRUE(res);
    EXPECT_EQ(res->status, 200) << res->body;
    return json::parse(res->body);
  }

  std::filesystem::path log_;
  std::unique_ptr<RatingService> service_;
  std::thread thread_;
  int port_ = 0;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(RatingServiceTest, RejectsScoresOutsideTheScale) {
  for (const json& bad : {json(6), json(0), json("great"), json(3.5)}) {
    auto res = Post("xsid/article_name/s1", "ann", bad);
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400) << bad;
  }
  EXPECT_EQ(GetJson("/api/progress?annotator=ann")["rated"], 0);
}

TEST_F(RatingServiceTest, UnknownItemAndMissingAnnotator) {
  auto res = Post("nope", "ann", 3);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  EXPECT_EQ(client_->Get("/api/items")->status, 400);
  EXPECT_EQ(client_->Get("/api/progress")->status, 400);
}

TEST_F(RatingServiceTest, PostedRatingShowsUpInItems) {
  auto res = Post("xsid/article_name/s2", "ann", 4, "ok");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 201);
  const json items = GetJson("/api/items?annotator=ann");
  ASSERT_EQ(items.size(), 6u);
  EXPECT_FALSE(items[0].contains("score"));
  EXPECT_EQ(items[1]["score"], 4);
  EXPECT_EQ(items[1]["comment"], "ok");
  // Other annotators do not see it.
  EXPECT_FALSE(GetJson("/api/items?annotator=other")[1].contains("score"));
}

TEST_F(RatingServiceTest, ItemsAreBlinded) {
  auto res = client_->Get("/api/items?annotator=ann");
  ASSERT_TRUE(res);
  EXPECT_THAT(res->body, Not(HasSubstr("\"rule\"")));
  EXPECT_THAT(res->body, Not(HasSubstr("\"dataset\"")));
  const json items = json::parse(res->body);
  EXPECT_EQ(items[0]["sentence_a"], "Ich muss Papa jetzt anrufen .");
  EXPECT_EQ(items[0]["sentence_b"], "Ich muss den Papa jetzt anrufen .");
}

TEST_F(RatingServiceTest, ResubmissionReplacesPreviousRecord) {
  ASSERT_EQ(Post("xsid/article_name/s1", "ann", 2)->status, 201);
  ASSERT_EQ(Post("xsid/article_name/s1", "ann", "idk")->status, 201);
  auto res = client_->Get("/api/export");
  ASSERT_TRUE(res);
  std::istringstream body(res->body);
  const auto exported = ReadRatings(body);
  ASSERT_EQ(exported.size(), 1u);
  EXPECT_TRUE(exported[0].idk());
  EXPECT_EQ(exported[0].timestamp, "2026-05-01T12:00:00Z");
  // The log itself keeps both lines.
  EXPECT_EQ(ReadRatingsFile(log_).size(), 2u);
}

TEST_F(RatingServiceTest, SessionResumesAfterRestart) {
  const std::vector<json> scores = {5, 4, "idk", 1, 3};
  for (int i = 0; i < 5; ++i) {
    ASSERT_EQ(Post("xsid/article_name/s" + std::to_string(i + 1), "ann",
                   scores[i])
                  ->status,
              201);
  }
  const std::string before = client_->Get("/api/export")->body;
  StopService();
  Start();
  const json progress = GetJson("/api/progress?annotator=ann");
  EXPECT_EQ(progress["rated"], 5);
  EXPECT_EQ(progress["total"], 6);
  const json items = GetJson("/api/items?annotator=ann");
  EXPECT_EQ(items[2]["score"], "idk");
  EXPECT_FALSE(items[5].contains("score"));  // first unrated is item 6
  EXPECT_EQ(client_->Get("/api/export")->body, before);
}

TEST_F(RatingServiceTest, ConcurrentPostsAreAllKept) {
  std::vector<std::thread> workers;
  for (int a = 0; a < 4; ++a) {
    workers.emplace_back([this, a] {
      httplib::Client c("127.0.0.1", port_);
      for (int i = 1; i <= 6; ++i) {
        const json body = {{"item_id", "xsid/article_name/s" + std::to_string(i)},
                           {"annotator_id", "ann" + std::to_string(a)},
                           {"score", 1 + i % 5}};
        c.Post("/api/ratings", body.dump(), "application/json");
      }
    });
  }
  for (auto& w : workers) w.join();
  EXPECT_EQ(ReadRatingsFile(log_).size(), 24u);
  for (int a = 0; a < 4; ++a) {
    EXPECT_EQ(GetJson("/api/progress?annotator=ann" + std::to_string(a))["rated"],
              6);
  }
}

TEST(RatingStoreTest, WriteFailureIsReported) {
  // Every write to /dev/full fails with ENOSPC.
  RatingStore store("/dev/full");
  EXPECT_THROW(store.Submit({"i", "a", 3, "", ""}), Error);
  EXPECT_FALSE(store.Find("i", "a").has_value());
}

TEST(RatingServiceErrorTest, WriteFailureIsServerError) {
  ServiceOptions options;
  options.ratings_log = "/dev/full";
  RatingService service(Items(), options);
  const int port = service.BindToAnyPort("127.0.0.1");
  std::thread t([&] { service.ListenAfterBind(); });
  service.WaitUntilReady();
  httplib::Client client("127.0.0.1", port);
  const json body = {
      {"item_id", "xsid/article_name/s1"}, {"annotator_id", "a"}, {"score", 5}};
  auto res = client.Post("/api/ratings", body.dump(), "application/json");
  service.Stop();
  t.join();
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 500);
}

TEST(BindAddressTest, Parses) {
  EXPECT_EQ(ParseBindAddress("127.0.0.1:8080"),
            (std::pair<std::string, int>("127.0.0.1", 8080)));
  EXPECT_EQ(ParseBindAddress("0.0.0.0:0").second, 0);
  for (const char* bad : {"8080", ":80", "host:", "host:99999", "h:1x"}) {
    EXPECT_THROW(ParseBindAddress(bad), Error) << bad;
  }
}

}  // namespace
}  // namespace dialect::tools
