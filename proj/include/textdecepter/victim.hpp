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

#ifndef TEXTDECEPTER_VICTIM_HPP_
#define TEXTDECEPTER_VICTIM_HPP_

#include <atomic>
#include <cstdint>
#include <map>
#include <string>

namespace textdecepter {

struct Label {
  std::string value;

  friend bool operator==(const Label& a, const Label& b) {
    return a.value == b.value;
  }
  friend bool operator!=(const Label& a, const Label& b) {
    return a.value != b.value;
  }
};

// The hard-label oracle: one final decision per query, no scores. This is
// the only surface the attack is allowed to see.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual Label classify(const std::string& text) = 0;
};

class QueryCounter {
 public:
  void increment() { count_.fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t count() const { return count_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> count_{0};
};

// Counts one logical query per classify call, regardless of what the inner
// adapter does (e.g. HTTP retries).
class CountingOracle : public Oracle {
 public:
  explicit CountingOracle(Oracle& inner) : inner_(inner) {}

  Label classify(const std::string& text) override {
    counter_.increment();
    return inner_.classify(text);
  }

  const QueryCounter& counter() const { return counter_; }

 private:
  Oracle& inner_;
  QueryCounter counter_;
};

// Deterministic in-process victim: sums per-word weights over the normalized
// word tokens of the text and decides positive iff sum + bias > 0 (ties go
// negative). Out-of-vocabulary words contribute zero.
class LexiconClassifier : public Oracle {
 public:
  LexiconClassifier(std::map<std::string, double> weights, double bias,
                    Label positive_label, Label negative_label);

  // JSON object {"word": weight, ...} with reserved keys "__bias__",
  // "__positive_label__", "__negative_label__".
  static LexiconClassifier load(const std::string& path);

  Label classify(const std::string& text) override;

  const Label& positive_label() const { return positive_label_; }
  const Label& negative_label() const { return negative_label_; }

 private:
  std::map<std::string, double> weights_;
  double bias_ = 0.0;
  Label positive_label_;
  Label negative_label_;
};

}  // namespace textdecepter

#endif  // TEXTDECEPTER_VICTIM_HPP_
