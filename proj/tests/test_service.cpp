/*
 * Copyright (C) 2026 The Pattern Lock Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "patternlock/service.h"

using namespace patternlock;
using nlohmann::json;

namespace {

class ServiceTest : public ::testing::Test {
  protected:
    void SetUp() override {
        logPath_ = std::filesystem::temp_directory_path() /
                   ("patternlock_service_" + std::to_string(reinterpret_cast<uintptr_t>(this)) + ".jsonl");
        std::filesystem::remove(logPath_);
        sessions_ = std::make_unique<SessionManager>(2024, logPath_);
        service_ = std::make_unique<StudyService>(*sessions_);
        port_ = service_->bindAnyPort("127.0.0.1");
        thread_ = std::thread([this] { service_->listen(); });
        service_->waitUntilReady();
        client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    }

    void TearDown() override {
        service_->stop();
        thread_.join();
        std::filesystem::remove(logPath_);
    }

    json post(const std::string& path, const json& body, int expectStatus = 200) {
        auto res = client_->Post(path, body.dump(), "application/json");
        EXPECT_TRUE(res);
        if (!res) return {};
        EXPECT_EQ(res->status, expectStatus) << res->body;
        return json::parse(res->body);
    }

    json event(const std::string& id, const char* phase, const char* digits, int expectStatus = 200) {
        return post("/api/sessions/" + id + "/events", {{"phase", phase}, {"pattern", digits}, {"elapsedMs", 1000}},
                    expectStatus);
    }

    std::filesystem::path logPath_;
    std::unique_ptr<SessionManager> sessions_;
    std::unique_ptr<StudyService> service_;
    std::unique_ptr<httplib::Client> client_;
    std::thread thread_;
    int port_ = 0;
};

}  // namespace

TEST_F(ServiceTest, ReachableQuery) {
    auto res = client_->Get("/api/reachable?current=3&connected=3");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_EQ(json::parse(res->body)["reachable"], json::array({2, 4, 5, 6, 8}));

    const json body = post("/api/reachable", {{"current", 1}, {"connected", {3, 8, 5, 1}}});
    EXPECT_EQ(body["reachable"], json::array({2, 4, 6, 9}));

    auto bad = client_->Get("/api/reachable?current=3&connected=1");
    ASSERT_TRUE(bad);
    EXPECT_EQ(bad->status, 400);
}

TEST_F(ServiceTest, TransitionTable) {
    auto res = client_->Get("/api/transition-table");
    ASSERT_TRUE(res);
    EXPECT_EQ(json::parse(res->body).size(), 2304U);
}

TEST_F(ServiceTest, CreateSessionWithThreeDots) {
    const json s = post("/api/sessions", {{"group", "ThreeDot"}}, 201);
    ASSERT_TRUE(s.contains("sessionId"));
    const auto dots = s["mandatedDots"].get<std::vector<int>>();
    EXPECT_EQ(dots.size(), 3U);
    EXPECT_EQ(std::set<int>(dots.begin(), dots.end()).size(), 3U);
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(post("/api/sessions/" + s["sessionId"].get<std::string>() + "/reset", json::object())["mandatedDots"],
                  s["mandatedDots"]);
    }
    post("/api/sessions", {{"group", "FourDot"}}, 400);
    post("/api/sessions", {{"colour", "red"}}, 400);
}

TEST_F(ServiceTest, InvalidPatternNamesTheRule) {
    const std::string id = post("/api/sessions", {{"group", "Original"}}, 201)["sessionId"];
    const json r = event(id, "training", "1379");
    EXPECT_EQ(r["result"], "ruleError");
    EXPECT_EQ(r["rule"], "IllegalJump");
    const json shortOne = event(id, "create", "123");
    EXPECT_EQ(shortOne["rule"], "TooShort");
    EXPECT_EQ(shortOne["message"], "Connect at least 4 dots. Try again");
}

TEST_F(ServiceTest, FullFlowAndExport) {
    const std::string id = post("/api/sessions", {{"group", "TinPal"}}, 201)["sessionId"];
    EXPECT_EQ(event(id, "create", "385196427")["stage"], "confirm");
    EXPECT_EQ(event(id, "recall", "385196427", 409).count("error"), 1U);
    EXPECT_EQ(event(id, "confirm", "385196427")["attemptsLeft"], 5);
    post("/api/sessions/" + id + "/survey", {{"hand", "right"}});
    const json miss = event(id, "recall", "1234");
    EXPECT_EQ(miss["result"], "recallResult");
    EXPECT_EQ(miss["success"], false);
    EXPECT_EQ(miss["attemptsLeft"], 4);
    const json hit = event(id, "recall", "385196427");
    EXPECT_EQ(hit["success"], true);
    EXPECT_EQ(hit["stage"], "complete");

    auto res = client_->Get("/api/export");
    ASSERT_TRUE(res);
    const json line = json::parse(res->body.substr(0, res->body.find('\n')));
    EXPECT_EQ(line["sessionId"], id);
    EXPECT_EQ(line["finalPattern"], "385196427");
    EXPECT_EQ(line["survey"]["hand"], "right");
}

TEST_F(ServiceTest, ErrorStatuses) {
    event("missing", "training", "1234", 404);
    auto res = client_->Post("/api/sessions", "{not json", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400);
    const std::string id = post("/api/sessions", {{"group", "Original"}}, 201)["sessionId"];
    post("/api/sessions/" + id + "/events", {{"phase", "distraction"}, {"pattern", "1234"}, {"elapsedMs", 1}}, 400);
}

TEST_F(ServiceTest, SecondBindOnSamePortFails) {
    SessionManager other(1, logPath_.string() + ".other");
    StudyService second(other);
    EXPECT_THROW(second.bind("127.0.0.1", port_), std::runtime_error);
}
