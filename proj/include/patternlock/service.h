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

#pragma once

#include <memory>
#include <string>

#include "patternlock/study.h"

namespace patternlock {

/*
 * JSON-over-HTTP front end for the companion UI.
 *
 *   POST /api/sessions                 {"group":"TinPal"} -> {"sessionId","group","mandatedDots"}
 *   POST /api/sessions/{id}/reset      -> {"mandatedDots"}
 *   POST /api/sessions/{id}/events     {"phase","pattern","elapsedMs"} -> {"result", ...}
 *   POST /api/sessions/{id}/survey     {"question":"answer",...}
 *   GET  /api/reachable?current=3&connected=3,8   (POST with a JSON body also works)
 *   GET  /api/transition-table         the exported table
 *   GET  /api/export                   the session log (JSON lines)
 *
 * Unknown sessions give 404, events out of order 409, malformed bodies 400.
 */
class StudyService {
  public:
    explicit StudyService(SessionManager& sessions);
    ~StudyService();

    StudyService(const StudyService&) = delete;
    StudyService& operator=(const StudyService&) = delete;

    // Throws std::runtime_error if the port cannot be bound (e.g. in use).
    void bind(const std::string& host, int port);
    // Binds an ephemeral port and returns it.
    int bindAnyPort(const std::string& host);
    // Blocks until stop() is called from another thread.
    void listen();
    void stop();
    bool running() const;
    void waitUntilReady() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace patternlock
