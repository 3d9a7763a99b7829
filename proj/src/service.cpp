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

#include "patternlock/service.h"

#include <sstream>
#include <stdexcept>

#include <httplib.h>
#include <json.hpp>

namespace patternlock {

namespace {

using nlohmann::json;

constexpr const char* kJson = "application/json";

void sendJson(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), kJson);
}

void sendError(httplib::Response& res, int status, const std::string& message) {
    sendJson(res, status, {{"error", message}});
}

int statusFor(SessionError::Kind kind) {
    switch (kind) {
        case SessionError::Kind::UnknownSession: return 404;
        case SessionError::Kind::WrongPhase: return 409;
        case SessionError::Kind::BadRequest: return 400;
    }
    return 400;
}

json outcomeJson(const EventOutcome& o) {
    json j = {{"result", toString(o.kind)}, {"stage", toString(o.stage)}};
    switch (o.kind) {
        case EventOutcome::Kind::RuleError:
            j["rule"] = toString(*o.rule);
            j["position"] = o.position;
            j["message"] = o.message;
            break;
        case EventOutcome::Kind::PolicyError:
            j["missingDots"] = o.missing.labels();
            j["message"] = o.message;
            break;
        case EventOutcome::Kind::Mismatch:
            j["message"] = o.message;
            break;
        case EventOutcome::Kind::RecallResult:
            j["success"] = o.success;
            j["attemptsLeft"] = o.attemptsLeft;
            break;
        case EventOutcome::Kind::Accepted:
            if (o.stage == Stage::Recall) j["attemptsLeft"] = o.attemptsLeft;
            break;
    }
    return j;
}

DotSet parseConnected(const json& labels) {
    DotSet s;
    for (const auto& v : labels) s.insert(Dot(v.get<int>()));
    return s;
}

DotSet parseConnectedQuery(const std::string& csv) {
    DotSet s;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        const int label = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad dot '" + item + "'");
        s.insert(Dot(label));
    }
    return s;
}

json reachableJson(Dot current, DotSet connected) {
    const TransitionEntry entry{{current, connected}, reachable({current, connected})};
    return json::parse(transitionRecordJson(entry));
}

}  // namespace

struct StudyService::Impl {
    SessionManager& sessions;
    httplib::Server server;
    std::string tableJson;

    explicit Impl(SessionManager& s) : sessions(s) {
        // No SO_REUSEPORT: a second server on the same port must fail to bind.
        server.set_socket_options([](socket_t sock) {
            int yes = 1;
            setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
        });
        std::ostringstream out;
        writeTransitionTable(out, exportTransitionTable());
        tableJson = out.str();
        routes();
    }

    template <typename Fn>
    static void guarded(httplib::Response& res, Fn&& fn) {
        try {
            fn();
        } catch (const SessionError& e) {
            sendError(res, statusFor(e.kind()), e.what());
        } catch (const json::exception& e) {
            sendError(res, 400, std::string("malformed body: ") + e.what());
        } catch (const std::invalid_argument& e) {
            sendError(res, 400, e.what());
        } catch (const std::out_of_range& e) {
            sendError(res, 400, e.what());
        } catch (const std::exception& e) {
            sendError(res, 500, e.what());
        }
    }

    void routes() {
        server.Post("/api/sessions", [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                const json body = json::parse(req.body);
                const auto group = policyFromString(body.at("group").get<std::string>());
                if (!group) throw SessionError(SessionError::Kind::BadRequest, "unknown group");
                const CreatedSession created = sessions.createSession(*group);
                sendJson(res, 201,
                         {{"sessionId", created.sessionId},
                          {"group", toString(*group)},
                          {"mandatedDots", created.assignment.mandatedDots.labels()}});
            });
        });

        server.Post(R"(/api/sessions/([^/]+)/reset)", [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                const SysPalAssignment a = sessions.reset(req.matches[1]);
                sendJson(res, 200, {{"mandatedDots", a.mandatedDots.labels()}});
            });
        });

        server.Post(R"(/api/sessions/([^/]+)/events)", [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                const json body = json::parse(req.body);
                const auto phase = phaseFromString(body.at("phase").get<std::string>());
                if (!phase) throw SessionError(SessionError::Kind::BadRequest, "unknown phase");
                const EventOutcome o = sessions.submit(req.matches[1], *phase, body.at("pattern").get<std::string>(),
                                                       body.at("elapsedMs").get<int64_t>());
                sendJson(res, 200, outcomeJson(o));
            });
        });

        server.Post(R"(/api/sessions/([^/]+)/survey)", [this](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                const json body = json::parse(req.body);
                sessions.setSurvey(req.matches[1], body.get<std::map<std::string, std::string>>());
                sendJson(res, 200, {{"result", "accepted"}});
            });
        });

        server.Get("/api/reachable", [](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                if (!req.has_param("current")) throw std::invalid_argument("missing 'current'");
                const Dot current(std::stoi(req.get_param_value("current")));
                DotSet connected = parseConnectedQuery(req.get_param_value("connected"));
                if (!connected.contains(current)) throw std::invalid_argument("current must be connected");
                sendJson(res, 200, reachableJson(current, connected));
            });
        });

        server.Post("/api/reachable", [](const httplib::Request& req, httplib::Response& res) {
            guarded(res, [&] {
                const json body = json::parse(req.body);
                const Dot current(body.at("current").get<int>());
                const DotSet connected = parseConnected(body.at("connected"));
                if (!connected.contains(current)) throw std::invalid_argument("current must be connected");
                sendJson(res, 200, reachableJson(current, connected));
            });
        });

        server.Get("/api/transition-table", [this](const httplib::Request&, httplib::Response& res) {
            res.set_content(tableJson, kJson);
        });

        server.Get("/api/export", [this](const httplib::Request&, httplib::Response& res) {
            res.set_content(sessions.exportLog(), "application/x-ndjson");
        });
    }
};

StudyService::StudyService(SessionManager& sessions) : impl_(std::make_unique<Impl>(sessions)) {}

StudyService::~StudyService() {
    stop();
}

void StudyService::bind(const std::string& host, int port) {
    if (!impl_->server.bind_to_port(host, port)) {
        throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port) + " (port in use?)");
    }
}

int StudyService::bindAnyPort(const std::string& host) {
    const int port = impl_->server.bind_to_any_port(host);
    if (port < 0) throw std::runtime_error("cannot bind an ephemeral port on " + host);
    return port;
}

void StudyService::listen() {
    impl_->server.listen_after_bind();
}

void StudyService::stop() {
    if (impl_) impl_->server.stop();
}

bool StudyService::running() const {
    return impl_->server.is_running();
}

void StudyService::waitUntilReady() const {
    impl_->server.wait_until_ready();
}

}  // namespace patternlock
