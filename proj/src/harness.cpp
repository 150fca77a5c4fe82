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

#include "textdecepter/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <optional>
#include <thread>
#include <unordered_set>

#include "json.hpp"
#include "textdecepter/errors.hpp"

namespace textdecepter {

std::vector<LabeledExample> load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open dataset: " + path);
  }
  std::vector<LabeledExample> examples;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json row;
    try {
      row = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw FormatError("invalid JSON", line_no);
    }
    if (!row.is_object() || !row.contains("id") || !row.contains("label") ||
        !row.contains("text") || !row["id"].is_string() ||
        !row["label"].is_string() || !row["text"].is_string()) {
      throw FormatError("expected {\"id\", \"label\", \"text\"} strings",
                        line_no);
    }
    LabeledExample ex{row["id"].get<std::string>(),
                      Label{row["label"].get<std::string>()},
                      row["text"].get<std::string>()};
    const bool blank_text =
        std::all_of(ex.text.begin(), ex.text.end(), [](unsigned char c) {
          return std::isspace(c) != 0;
        });
    if (ex.id.empty() || ex.label.value.empty() || blank_text) {
      throw FormatError("empty field", line_no);
    }
    if (!ids.insert(ex.id).second) {
      throw FormatError("duplicate id '" + ex.id + "'", line_no);
    }
    examples.push_back(std::move(ex));
  }
  return examples;
}

double attack_success_rate_percent(double original_pct, double after_pct) {
  if (original_pct <= 0.0) return 0.0;
  return (original_pct - after_pct) / original_pct * 100.0;
}

Metrics compute_metrics(const std::vector<AttackResult>& results,
                        const std::vector<LabeledExample>& truths) {
  if (results.empty()) {
    throw EmptyCampaignError("no results to aggregate");
  }
  if (results.size() != truths.size()) {
    throw FormatError("results/examples size mismatch");
  }
  const double total = static_cast<double>(results.size());
  std::size_t skipped = 0;
  std::size_t successes = 0;
  double perturbed_sum = 0.0;
  double query_sum = 0.0;
  for (const AttackResult& r : results) {
    if (r.status == AttackStatus::SKIPPED_MISCLASSIFIED) {
      ++skipped;
      continue;
    }
    query_sum += static_cast<double>(r.queries);
    if (r.status == AttackStatus::SUCCESS) {
      ++successes;
      perturbed_sum += r.perturbed_word_pct;
    }
  }
  const std::size_t attacked = results.size() - skipped;

  Metrics m;
  m.original_accuracy = 100.0 * static_cast<double>(attacked) / total;
  m.after_attack_accuracy =
      100.0 * static_cast<double>(attacked - successes) / total;
  m.attack_success_rate =
      attack_success_rate_percent(m.original_accuracy, m.after_attack_accuracy);
  m.mean_perturbed_pct =
      successes > 0 ? perturbed_sum / static_cast<double>(successes) : 0.0;
  m.mean_queries =
      attacked > 0 ? query_sum / static_cast<double>(attacked) : 0.0;
  m.examples_attacked = attacked;
  return m;
}

Document analyze_document(std::string id, std::string raw,
                          const PosTagger& tagger) {
  const std::vector<Sentence> boundaries = segment_sentences(raw);
  Document doc = tokenize(std::move(id), std::move(raw), boundaries);
  tag_pos(doc, tagger);
  return doc;
}

namespace {

nlohmann::ordered_json config_json(const CampaignOptions& options) {
  const AttackConfig& c = options.config;
  nlohmann::ordered_json j;
  j["epsilon"] = c.epsilon;
  j["top_k"] = c.top_k;
  j["min_cosine"] = c.min_cosine;
  j["pos_mode"] = c.pos_mode == PosMode::Fine ? "fine" : "coarse";
  j["p_max"] = c.p_max;
  j["query_budget"] = c.query_budget;
  j["aggregate_budget"] = c.aggregate_budget;
  j["use_aggregates"] = c.use_aggregates;
  j["jobs"] = options.jobs;
  return j;
}

nlohmann::ordered_json example_json(const LabeledExample& ex,
                                    const AttackResult& r, int word_count) {
  nlohmann::ordered_json j;
  j["id"] = ex.id;
  j["ground_truth"] = ex.label.value;
  j["status"] = std::string(to_string(r.status));
  j["queries"] = r.queries;
  j["word_count"] = word_count;
  j["similarity"] = r.similarity;
  j["perturbed_word_pct"] = r.perturbed_word_pct;
  auto perts = nlohmann::ordered_json::array();
  for (const Perturbation& p : r.perturbations) {
    perts.push_back({{"position", p.position},
                     {"original", p.original},
                     {"replacement", p.replacement},
                     {"tier", std::string(to_string(p.accepted_via))}});
  }
  j["perturbations"] = std::move(perts);
  if (r.adversarial_text) {
    j["adversarial_text"] = *r.adversarial_text;
  } else {
    j["adversarial_text"] = nullptr;
  }
  if (!r.error.empty()) {
    j["error"] = r.error;
  }
  return j;
}

nlohmann::ordered_json metrics_json(const Metrics& m, std::size_t total) {
  nlohmann::ordered_json j;
  j["original_accuracy"] = m.original_accuracy;
  j["after_attack_accuracy"] = m.after_attack_accuracy;
  j["attack_success_rate"] = m.attack_success_rate;
  j["mean_perturbed_pct"] = m.mean_perturbed_pct;
  j["mean_queries"] = m.mean_queries;
  j["examples_attacked"] = m.examples_attacked;
  j["examples_total"] = total;
  return j;
}

struct ExampleOutcome {
  AttackResult result;
  int word_count = 0;
  bool done = false;
};

}  // namespace

Metrics run_suite(const std::vector<LabeledExample>& dataset, Oracle& victim,
                  const EmbeddingStore& store, const SimilarityScorer& scorer,
                  const PosTagger& tagger, const CampaignOptions& options,
                  const std::string& report_path) {
  if (dataset.empty()) {
    throw EmptyCampaignError("dataset has no examples");
  }
  const AttackEngine engine(store, scorer, tagger, options.config);

  std::vector<ExampleOutcome> outcomes(dataset.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= dataset.size()) break;
      const LabeledExample& ex = dataset[i];
      Document doc = analyze_document(ex.id, ex.text, tagger);
      outcomes[i].result = engine.attack(doc, ex.label, victim);
      outcomes[i].word_count = doc.word_count;
      outcomes[i].done = true;
      if (outcomes[i].result.oracle_failure) {
        stop.store(true);
      }
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  // On oracle failure the report covers the contiguous prefix of finished
  // examples, ending at the failed one.
  std::size_t included = 0;
  std::optional<std::string> failure;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].done) break;
    ++included;
    if (outcomes[i].result.oracle_failure) {
      failure = outcomes[i].result.error;
      break;
    }
  }

  std::vector<AttackResult> results;
  std::vector<LabeledExample> truths;
  auto records = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < included; ++i) {
    results.push_back(outcomes[i].result);
    truths.push_back(dataset[i]);
    records.push_back(
        example_json(dataset[i], outcomes[i].result, outcomes[i].word_count));
  }

  Metrics metrics;
  if (!results.empty()) {
    metrics = compute_metrics(results, truths);
  }

  nlohmann::ordered_json report;
  report["config"] = config_json(options);
  report["aborted"] = failure.has_value();
  report["metrics"] = metrics_json(metrics, results.size());
  report["examples"] = std::move(records);

  std::ofstream out(report_path);
  if (!out) {
    throw IoError("cannot write report: " + report_path);
  }
  out << report.dump(2) << '\n';
  out.close();

  if (failure) {
    throw OracleUnavailableError("campaign aborted: " + *failure +
                                 " (partial report at " + report_path + ")");
  }
  return metrics;
}

}  // namespace textdecepter
