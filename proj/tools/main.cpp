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

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "textdecepter/errors.hpp"
#include "textdecepter/harness.hpp"
#include "textdecepter/http_victim.hpp"

namespace td = textdecepter;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitOracle = 2;

std::unique_ptr<td::Oracle> make_victim(const std::string& spec,
                                        double timeout_seconds) {
  if (spec.rfind("lexicon:", 0) == 0) {
    return std::make_unique<td::LexiconClassifier>(
        td::LexiconClassifier::load(spec.substr(8)));
  }
  if (spec.rfind("http://", 0) == 0) {
    td::HttpOracle::Options options;
    options.timeout =
        std::chrono::seconds(static_cast<long>(timeout_seconds));
    if (const char* token = std::getenv("TEXTDECEPTER_TOKEN")) {
      options.bearer_token = token;
    }
    return std::make_unique<td::HttpOracle>(spec, options);
  }
  throw td::IoError("victim must be lexicon:PATH or an http:// URL, got '" +
                    spec + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hard-label black-box word-substitution attack on text "
               "classifiers"};
  app.require_subcommand(1);

  CLI::App* attack = app.add_subcommand(
      "attack", "Run an attack campaign over a dataset and write a report");

  std::string dataset_path;
  std::string embeddings_path;
  std::string victim_spec;
  std::string output_path;
  td::CampaignOptions options;
  std::string pos_mode = "coarse";
  bool no_aggregates = false;
  double timeout_seconds = 10.0;

  attack->add_option("--dataset", dataset_path, "JSONL dataset path")
      ->required();
  attack->add_option("--embeddings", embeddings_path, "word-vector file")
      ->required();
  attack
      ->add_option("--victim", victim_spec,
                   "victim oracle: lexicon:PATH or http://host[:port]/path")
      ->required();
  attack->add_option("--output", output_path, "JSON report path")->required();
  attack->add_option("--epsilon", options.config.epsilon,
                     "semantic similarity floor (default 0.7)");
  attack->add_option("--top-k", options.config.top_k,
                     "synonyms per word (default 50)");
  attack->add_option("--min-cosine", options.config.min_cosine,
                     "synonym cosine floor (default 0.5)");
  attack
      ->add_option("--pos-mode", pos_mode,
                   "POS mask granularity: coarse|fine (default coarse)")
      ->check(CLI::IsMember({"coarse", "fine"}));
  attack->add_option("--p-max", options.config.p_max,
                     "sentence combination cap (default 3)");
  attack->add_option("--query-budget", options.config.query_budget,
                     "max oracle queries per example (default 20000)");
  attack->add_flag("--no-aggregates", no_aggregates,
                   "disable the aggregate acceptance tier");
  attack->add_option("--jobs", options.jobs,
                     "examples attacked in parallel (default 1)");
  attack->add_option("--timeout", timeout_seconds,
                     "HTTP victim timeout in seconds (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  options.config.pos_mode =
      pos_mode == "fine" ? td::PosMode::Fine : td::PosMode::Coarse;
  options.config.use_aggregates = !no_aggregates;

  try {
    const auto dataset = td::load_dataset(dataset_path);
    const auto store = td::EmbeddingStore::load(embeddings_path);
    const td::MeanVectorScorer scorer(store);
    const td::LexiconSuffixTagger tagger;
    auto victim = make_victim(victim_spec, timeout_seconds);

    const td::Metrics metrics =
        td::run_suite(dataset, *victim, store, scorer, tagger, options,
                      output_path);

    std::cout << "examples:             " << dataset.size() << "\n"
              << "attacked:             " << metrics.examples_attacked << "\n"
              << "original accuracy:    " << metrics.original_accuracy << "%\n"
              << "after-attack accuracy: " << metrics.after_attack_accuracy
              << "%\n"
              << "attack success rate:  " << metrics.attack_success_rate
              << "%\n"
              << "mean perturbed words: " << metrics.mean_perturbed_pct
              << "%\n"
              << "mean queries:         " << metrics.mean_queries << "\n"
              << "report:               " << output_path << "\n";
    return kExitOk;
  } catch (const td::OracleUnavailableError& e) {
    std::cerr << "oracle failure: " << e.what() << "\n";
    return kExitOracle;
  } catch (const td::OracleProtocolError& e) {
    std::cerr << "oracle failure: " << e.what() << "\n";
    return kExitOracle;
  } catch (const td::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
