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

#ifndef TEXTDECEPTER_HARNESS_HPP_
#define TEXTDECEPTER_HARNESS_HPP_

#include <string>
#include <vector>

#include "textdecepter/attack.hpp"
#include "textdecepter/embeddings.hpp"
#include "textdecepter/pos_tagger.hpp"
#include "textdecepter/similarity.hpp"
#include "textdecepter/victim.hpp"

namespace textdecepter {

struct LabeledExample {
  std::string id;
  Label label;
  std::string text;
};

// JSONL, one object per line: {"id": ..., "label": ..., "text": ...}.
// Order-preserving; duplicate ids or missing/empty fields are format errors.
std::vector<LabeledExample> load_dataset(const std::string& path);

struct Metrics {
  double original_accuracy = 0.0;     // percent
  double after_attack_accuracy = 0.0; // percent
  double attack_success_rate = 0.0;   // percent, relative formula
  double mean_perturbed_pct = 0.0;    // over successful attacks
  double mean_queries = 0.0;          // over attacked (non-skipped) examples
  std::size_t examples_attacked = 0;
};

// (original - after) / original * 100; zero when nothing was originally
// classified correctly.
double attack_success_rate_percent(double original_pct, double after_pct);

// One result per example, same order. Throws EmptyCampaignError on empty
// input and FormatError on a size mismatch.
Metrics compute_metrics(const std::vector<AttackResult>& results,
                        const std::vector<LabeledExample>& truths);

// Convenience: segmentation + tokenization + tagging in one call.
Document analyze_document(std::string id, std::string raw,
                          const PosTagger& tagger);

struct CampaignOptions {
  AttackConfig config;
  int jobs = 1;
};

// Attacks every example, writes the JSON report (config, per-example
// records, aggregate metrics) to `report_path`, and returns the metrics.
// Deterministic given a deterministic oracle. If the oracle breaks down the
// partial report is still written and OracleUnavailableError is thrown.
Metrics run_suite(const std::vector<LabeledExample>& dataset, Oracle& victim,
                  const EmbeddingStore& store, const SimilarityScorer& scorer,
                  const PosTagger& tagger, const CampaignOptions& options,
                  const std::string& report_path);

}  // namespace textdecepter

#endif  // TEXTDECEPTER_HARNESS_HPP_
