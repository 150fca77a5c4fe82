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

#ifndef TEXTDECEPTER_HTTP_VICTIM_HPP_
#define TEXTDECEPTER_HTTP_VICTIM_HPP_

#include <chrono>
#include <string>

#include "textdecepter/victim.hpp"

namespace textdecepter {

// Adapter for a remote hard-label classifier. Wire protocol:
//   POST <endpoint>  Content-Type: application/json  {"text": "<document>"}
//   200 with body {"label": "<class-id>"}
// Transport failures and 5xx replies are retried with exponential backoff;
// exhausting the retries raises OracleUnavailableError. Anything else that
// deviates from the reply schema raises OracleProtocolError.
class HttpOracle : public Oracle {
 public:
  struct Options {
    std::chrono::seconds timeout{10};
    int attempts = 3;
    std::chrono::milliseconds initial_backoff{100};
    double backoff_multiplier = 2.0;
    std::string bearer_token;  // empty: no Authorization header
  };

  // `endpoint` is a plain-http URL, e.g. "http://localhost:8080/classify".
  HttpOracle(std::string endpoint, Options options);

  Label classify(const std::string& text) override;

 private:
  std::string scheme_host_;
  std::string path_;
  Options options_;
};

}  // namespace textdecepter

#endif  // TEXTDECEPTER_HTTP_VICTIM_HPP_
