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
//
// Acceptance suite. Each test case covers one release criterion and prints
// one "[criterion N] PASS/FAIL" line; the whole binary must stay green for
// a release.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

#include "json.hpp"
#include "rank_oracle.hpp"
#include "test_support.hpp"
#include "textdecepter/attack.hpp"
#include "textdecepter/harness.hpp"

using namespace textdecepter;

namespace {

struct Criterion {
  int number;
  const char* name;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  double elapsed_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
  void report(bool ok) const {
    std::printf("[criterion %d] %s - %s (%.2fs)\n", number,
                ok ? "PASS" : "FAIL", name, elapsed_s());
    std::fflush(stdout);
  }
};

struct Stack {
  EmbeddingStore store =
      EmbeddingStore::load(tdtest::fixture_path("embeddings_50d.txt"));
  MeanVectorScorer scorer{store};
  LexiconSuffixTagger tagger;
  LexiconClassifier victim =
      LexiconClassifier::load(tdtest::fixture_path("victim_lexicon.json"));
  std::vector<LabeledExample> corpus =
      load_dataset(tdtest::fixture_path("reviews.jsonl"));
  AttackConfig config;  // defaults: epsilon 0.7, k 50, coarse, p_max 3
};

Stack& stack() {
  static Stack s;
  return s;
}

nlohmann::json run_campaign(bool use_aggregates, const std::string& name) {
  Stack& s = stack();
  CampaignOptions options;
  options.config = s.config;
  options.config.use_aggregates = use_aggregates;
  const std::string path = (tdtest::temp_dir() / name).string();
  run_suite(s.corpus, s.victim, s.store, s.scorer, s.tagger, options, path);
  return nlohmann::json::parse(tdtest::read_file(path));
}

const nlohmann::json& report_with_aggregates() {
  static const nlohmann::json r = run_campaign(true, "acc_with.json");
  return r;
}

const nlohmann::json& report_without_aggregates() {
  static const nlohmann::json r = run_campaign(false, "acc_without.json");
  return r;
}

}  // namespace

TEST_CASE("criterion 1: success-rate arithmetic reproduces reference cells") {
  Criterion c{1, "metric arithmetic on reference accuracy pairs"};
  // (original %, after-attack %, expected success rate) pairs covering both
  // POS-mask granularities; realized as synthetic 1000-example campaigns.
  const std::vector<std::array<double, 3>> cells = {
      {78.0, 18.9, 75.8}, {89.4, 17.3, 80.6}, {80.7, 18.9, 76.6},
      {90.3, 32.5, 64.0}, {90.4, 42.3, 53.2}, {88.3, 30.9, 65.0},
      {76.4, 16.6, 78.3}, {78.0, 20.7, 73.5}, {89.4, 18.9, 78.9},
      {80.7, 21.2, 73.7}, {90.3, 34.4, 61.9}, {90.4, 45.9, 49.2},
      {88.3, 33.3, 62.3},
  };
  bool ok = true;
  for (const auto& [orig, after, expected] : cells) {
    const auto skipped = static_cast<std::size_t>(1000 - orig * 10 + 0.5);
    const auto successes =
        static_cast<std::size_t>(orig * 10 - after * 10 + 0.5);
    std::vector<AttackResult> results;
    std::vector<LabeledExample> truths;
    for (std::size_t i = 0; i < 1000; ++i) {
      AttackResult r;
      if (i < skipped) {
        r.status = AttackStatus::SKIPPED_MISCLASSIFIED;
      } else if (i < skipped + successes) {
        r.status = AttackStatus::SUCCESS;
      } else {
        r.status = AttackStatus::FAILED;
      }
      results.push_back(std::move(r));
      truths.push_back({"e" + std::to_string(i), Label{"POS"}, "x"});
    }
    const Metrics m = compute_metrics(results, truths);
    ok = ok && std::abs(m.original_accuracy - orig) < 1e-9;
    ok = ok && std::abs(m.after_attack_accuracy - after) < 1e-9;
    ok = ok && std::abs(m.attack_success_rate - expected) <= 0.05;
    CHECK(std::abs(m.attack_success_rate - expected) <= 0.05);
    // The pure arithmetic agrees with the campaign-level computation.
    CHECK(attack_success_rate_percent(orig, after) ==
          doctest::Approx(m.attack_success_rate));
  }
  ok = ok && c.elapsed_s() < 1.0;
  CHECK(c.elapsed_s() < 1.0);
  c.report(ok);
}

TEST_CASE("criterion 2: every successful attack is a valid adversarial example") {
  Criterion c{2, "adversarial validity on the fixture campaign"};
  Stack& s = stack();
  const auto& report = report_with_aggregates();

  bool ok = true;
  std::size_t successes = 0;
  for (const auto& ex : report["examples"]) {
    if (ex["status"] != "SUCCESS") continue;
    ++successes;
    const std::string id = ex["id"];
    const auto& source =
        *std::find_if(s.corpus.begin(), s.corpus.end(),
                      [&](const LabeledExample& e) { return e.id == id; });
    const std::string adversarial = ex["adversarial_text"];

    // (a) the oracle still disagrees with the original label
    const bool flipped = s.victim.classify(adversarial) != source.label;
    // (b) similarity gate
    const double sim = ex["similarity"];
    const bool similar = sim >= s.config.epsilon &&
                         s.scorer.score(source.text, adversarial) >=
                             s.config.epsilon;
    // (c) the perturbation list reproduces the text exactly
    Document doc = analyze_document(id, source.text, s.tagger);
    Substitutions subs;
    for (const auto& p : ex["perturbations"]) {
      subs[p["position"].get<int>()] = p["replacement"].get<std::string>();
    }
    const bool exact = render(doc, subs) == adversarial;
    // (d) token count is preserved
    Document adv = analyze_document(id, adversarial, s.tagger);
    const bool same_shape = adv.tokens.size() == doc.tokens.size() &&
                            adv.word_count == doc.word_count;

    ok = ok && flipped && similar && exact && same_shape;
    CHECK(flipped);
    CHECK(similar);
    CHECK(exact);
    CHECK(same_shape);
  }
  ok = ok && successes > 0 && c.elapsed_s() < 30.0;
  CHECK(successes > 0);
  CHECK(c.elapsed_s() < 30.0);
  c.report(ok);
}

TEST_CASE("criterion 3: ranking equals exhaustive subset enumeration") {
  Criterion c{3, "sentence-ranking oracle equivalence (p_max 5)"};
  Stack& s = stack();
  const auto reference = tdtest::load_reference_lexicon(
      tdtest::fixture_path("victim_lexicon.json"));

  bool ok = true;
  std::size_t checked = 0;
  for (const auto& ex : s.corpus) {
    Document doc = analyze_document(ex.id, ex.text, s.tagger);
    if (doc.sentences.size() > 5) continue;
    ++checked;
    // Ranking is defined relative to the victim's own decision.
    const Label y0 = s.victim.classify(ex.text);
    const Partition partition = partition_sentences(doc, y0, s.victim);
    auto [importance, aggregates] =
        rank_sentences(doc, partition, y0, s.victim, {5, 500});

    auto expected = tdtest::enumerate_ranking(
        partition.set_a, partition.set_b, doc.sentences.size(), 5, 500,
        [&](const std::vector<int>& members) {
          return reference.label(render_sentences(doc, members, {})) == y0;
        });

    bool same = importance.levels == expected.levels &&
                aggregates.size() == expected.aggregates.size();
    if (same) {
      for (std::size_t i = 0; i < aggregates.size(); ++i) {
        same = same && aggregates[i].members == expected.aggregates[i];
      }
    }
    ok = ok && same;
    CHECK(same);
  }
  ok = ok && checked >= 25 && c.elapsed_s() < 10.0;
  CHECK(checked >= 25);
  CHECK(c.elapsed_s() < 10.0);
  c.report(ok);
}

TEST_CASE("criterion 4: attack succeeds wherever brute force finds a small flip") {
  Criterion c{4, "exhaustive two-substitution search implies attack success"};
  Stack& s = stack();
  const auto& report = report_with_aggregates();
  const AttackEngine engine(s.store, s.scorer, s.tagger, s.config);

  bool ok = true;
  std::size_t brute_hits = 0;
  for (std::size_t i = 0; i < s.corpus.size(); ++i) {
    const LabeledExample& ex = s.corpus[i];
    const std::string status = report["examples"][i]["status"];
    if (status == "SKIPPED_MISCLASSIFIED") continue;

    Document doc = analyze_document(ex.id, ex.text, s.tagger);
    const std::string original = render(doc, {});
    const Label y0 = ex.label;
    SimilarityMatrix matrix(doc, s.store);
    const Partition partition = partition_sentences(doc, y0, s.victim);
    const std::set<int> in_a(partition.set_a.begin(), partition.set_a.end());

    // The attack's own candidate sets over the attackable positions: words
    // of sentences that individually carry the document label.
    std::vector<std::pair<int, std::vector<std::string>>> options;
    for (const Token& tok : doc.tokens) {
      if (!tok.is_word || !in_a.contains(tok.sentence_index)) continue;
      if (!matrix.has_row(tok.normalized)) continue;
      auto raw = matrix.top_k_synonyms(tok.normalized, s.config.top_k,
                                       s.config.min_cosine);
      auto filtered = filter_candidates(doc, {}, tok.position, raw, s.config,
                                        s.scorer, s.tagger, original);
      if (filtered.empty()) continue;
      std::vector<std::string> words;
      for (const auto& f : filtered) words.push_back(f.candidate.word);
      options.push_back({tok.position, std::move(words)});
    }

    auto adversarial = [&](const Substitutions& subs) {
      const std::string text = render(doc, subs);
      return s.victim.classify(text) != y0 &&
             s.scorer.score(original, text) >= s.config.epsilon;
    };

    bool found = false;
    for (std::size_t a = 0; a < options.size() && !found; ++a) {
      for (const auto& wa : options[a].second) {
        if (adversarial({{options[a].first, wa}})) {
          found = true;
          break;
        }
      }
    }
    for (std::size_t a = 0; a < options.size() && !found; ++a) {
      for (std::size_t b = a + 1; b < options.size() && !found; ++b) {
        for (const auto& wa : options[a].second) {
          for (const auto& wb : options[b].second) {
            if (adversarial(
                    {{options[a].first, wa}, {options[b].first, wb}})) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
      }
    }

    if (found) {
      ++brute_hits;
      ok = ok && status == "SUCCESS";
      CHECK(status == "SUCCESS");
    }
  }
  ok = ok && brute_hits > 0 && c.elapsed_s() < 60.0;
  CHECK(brute_hits > 0);
  CHECK(c.elapsed_s() < 60.0);
  c.report(ok);
}

TEST_CASE("criterion 5: removing aggregates weakens the attack") {
  Criterion c{5, "ablation direction and golden campaign values"};
  const auto& with = report_with_aggregates()["metrics"];
  const auto& without = report_without_aggregates()["metrics"];

  const double after_with = with["after_attack_accuracy"];
  const double after_without = without["after_attack_accuracy"];
  bool ok = after_without >= after_with;   // direction
  ok = ok && after_without > after_with;   // strict on this corpus
  CHECK(after_without > after_with);

  const auto golden = nlohmann::json::parse(
      tdtest::read_file(tdtest::test_data_path("golden_campaign.json")));
  ok = ok &&
       std::abs(after_with -
                golden["with_aggregates"]["after_attack_accuracy"]
                    .get<double>()) < 1e-9;
  ok = ok &&
       std::abs(after_without -
                golden["without_aggregates"]["after_attack_accuracy"]
                    .get<double>()) < 1e-9;
  CHECK(after_with ==
        doctest::Approx(
            golden["with_aggregates"]["after_attack_accuracy"].get<double>()));
  CHECK(after_without ==
        doctest::Approx(golden["without_aggregates"]["after_attack_accuracy"]
                            .get<double>()));
  CHECK(with["attack_success_rate"].get<double>() ==
        doctest::Approx(
            golden["with_aggregates"]["attack_success_rate"].get<double>()));

  // Per-example statuses match the frozen expectations.
  for (const auto& [id, status] : golden["statuses"].items()) {
    for (const auto& ex : report_with_aggregates()["examples"]) {
      if (ex["id"] == id) {
        ok = ok && ex["status"] == status;
        CHECK(ex["status"] == status);
      }
    }
  }
  c.report(ok);
}

TEST_CASE("criterion 6: recorded query counts replay exactly") {
  Criterion c{6, "query accounting replays against a counting oracle"};
  Stack& s = stack();
  const auto& report = report_with_aggregates();
  const AttackEngine engine(s.store, s.scorer, s.tagger, s.config);

  bool ok = true;
  for (std::size_t i = 0; i < s.corpus.size(); ++i) {
    const LabeledExample& ex = s.corpus[i];
    Document doc = analyze_document(ex.id, ex.text, s.tagger);
    CountingOracle counted(s.victim);
    const AttackResult result = engine.attack(doc, ex.label, counted);

    const auto recorded = report["examples"][i]["queries"].get<std::uint64_t>();
    ok = ok && counted.counter().count() == result.queries;
    ok = ok && result.queries == recorded;
    ok = ok && result.queries <= s.config.query_budget + 1;
    CHECK(counted.counter().count() == result.queries);
    CHECK(result.queries == recorded);
    CHECK(result.queries <= s.config.query_budget + 1);
  }
  c.report(ok);
}

TEST_CASE("criterion 7: queries stay proportional to text length") {
  Criterion c{7, "query/length ratio is finite and sane"};
  const auto& report = report_with_aggregates();
  double ratio_sum = 0.0;
  std::size_t attacked = 0;
  for (const auto& ex : report["examples"]) {
    if (ex["status"] == "SKIPPED_MISCLASSIFIED") continue;
    ++attacked;
    ratio_sum += ex["queries"].get<double>() / ex["word_count"].get<double>();
  }
  const double mean_ratio = ratio_sum / static_cast<double>(attacked);
  std::printf("[criterion 7] mean queries-per-word ratio: %.3f\n", mean_ratio);
  const bool ok = std::isfinite(mean_ratio) && mean_ratio < 50.0;
  CHECK(std::isfinite(mean_ratio));
  CHECK(mean_ratio < 50.0);
  c.report(ok);
}

TEST_CASE("criterion 8: similarity-matrix memory tracks the text size") {
  Criterion c{8, "matrix rows bounded by distinct in-text words"};
  Stack& s = stack();
  bool ok = true;
  for (const auto& ex : s.corpus) {
    Document doc = analyze_document(ex.id, ex.text, s.tagger);
    SimilarityMatrix matrix(doc, s.store);
    std::set<std::string> distinct;
    for (const Token& tok : doc.tokens) {
      if (tok.is_word) distinct.insert(tok.normalized);
    }
    ok = ok && matrix.row_count() <= distinct.size();
    CHECK(matrix.row_count() <= distinct.size());
  }

  // IMDB-length document: a 215-word text allocates at most 215 rows.
  std::string long_text;
  for (int i = 0; i < 215; ++i) {
    if (!long_text.empty()) long_text += ' ';
    long_text += s.store.vocabulary()[static_cast<std::size_t>(i * 3) %
                                      s.store.size()];
  }
  Document long_doc = analyze_document("long", long_text, s.tagger);
  SimilarityMatrix matrix(long_doc, s.store);
  ok = ok && matrix.row_count() <= 215 && matrix.row_count() < s.store.size();
  CHECK(matrix.row_count() <= 215);
  c.report(ok);
}

TEST_CASE("criterion 9: identical campaigns produce identical reports") {
  Criterion c{9, "byte-identical reports across runs"};
  Stack& s = stack();
  CampaignOptions options;
  options.config = s.config;
  const auto path_a = (tdtest::temp_dir() / "det_a.json").string();
  const auto path_b = (tdtest::temp_dir() / "det_b.json").string();
  run_suite(s.corpus, s.victim, s.store, s.scorer, s.tagger, options, path_a);
  run_suite(s.corpus, s.victim, s.store, s.scorer, s.tagger, options, path_b);
  const bool ok = tdtest::read_file(path_a) == tdtest::read_file(path_b) &&
                  !tdtest::read_file(path_a).empty();
  CHECK(ok);
  c.report(ok);
}
