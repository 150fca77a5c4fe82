// Copyright 2026 The TextDecepter Authors
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

#include "textdecepter/http_victim.hpp"

#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "textdecepter/errors.hpp"

namespace textdecepter {

HttpOracle::HttpOracle(std::string endpoint, Options options)
    : options_(std::move(options)) {
  const std::size_t scheme = endpoint.find("://");
  if (scheme == std::string::npos) {
    throw OracleProtocolError("endpoint must be a http:// URL: " + endpoint);
  }
  const std::size_t path = endpoint.find('/', scheme + 3);
  if (path == std::string::npos) {
    scheme_host_ = endpoint;
    path_ = "/";
  } else {
    scheme_host_ = endpoint.substr(0, path);
    path_ = endpoint.substr(path);
  }
  if (scheme_host_.rfind("http://", 0) != 0) {
    throw OracleProtocolError("only plain http endpoints are supported: " +
                              endpoint);
  }
}

Label HttpOracle::classify(const std::string& text) {
  const std::string body = nlohmann::json{{"text", text}}.dump();

  std::string last_error;
  auto backoff = options_.initial_backoff;
  for (int attempt = 0; attempt < options_.attempts; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff = std::chrono::milliseconds(static_cast<long>(
          static_cast<double>(backoff.count()) * options_.backoff_multiplier));
    }
    // One client per request keeps concurrent classify calls safe.
    httplib::Client client(scheme_host_);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    client.set_write_timeout(options_.timeout);
    httplib::Headers headers;
    if (!options_.bearer_token.empty()) {
      headers.emplace("Authorization", "Bearer " + options_.bearer_token);
    }
    httplib::Result res =
        client.Post(path_, headers, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;  // transport failure: retry
    }
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;  // server error: retry
    }
    if (res->status != 200) {
      throw OracleProtocolError("unexpected HTTP status " +
                                std::to_string(res->status));
    }
    nlohmann::json reply;
    try {
      reply = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception&) {
      throw OracleProtocolError("reply body is not valid JSON");
    }
    if (!reply.is_object() || !reply.contains("label") ||
        !reply["label"].is_string()) {
      throw OracleProtocolError("reply lacks a string \"label\" field");
    }
    return Label{reply["label"].get<std::string>()};
  }
  throw OracleUnavailableError("oracle unreachable after " +
                               std::to_string(options_.attempts) +
                               " attempts: " + last_error);
}

}  // namespace textdecepter
