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

#ifndef TEXTDECEPTER_ATTACK_HPP_
#define TEXTDECEPTER_ATTACK_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "textdecepter/embeddings.hpp"
#include "textdecepter/pos_tagger.hpp"
#include "textdecepter/ranking.hpp"
#include "textdecepter/similarity.hpp"
#include "textdecepter/textproc.hpp"
#include "textdecepter/victim.hpp"

namespace textdecepter {

struct AttackConfig {
  double epsilon = 0.7;          // semantic similarity floor
  std::size_t top_k = 50;        // synonyms considered per word
  double min_cosine = 0.5;       // synonym cosine floor
  PosMode pos_mode = PosMode::Coarse;
  int p_max = 3;                 // sentence-combination size cap
  std::uint64_t query_budget = 20000;
  std::uint64_t aggregate_budget = 500;
  bool use_aggregates = true;    // ablation switch for the third tier
};

// Acceptance tiers in preference order: flipping the whole text beats
// flipping the word's sentence beats flipping its aggregate.
enum class AcceptTier { FULL_TEXT, SENTENCE, AGGREGATE };

std::string_view to_string(AcceptTier tier);

struct Perturbation {
  int position = 0;
  std::string original;
  std::string replacement;
  AcceptTier accepted_via = AcceptTier::FULL_TEXT;
};

enum class AttackStatus { SUCCESS, FAILED, BUDGET_EXHAUSTED, SKIPPED_MISCLASSIFIED };

std::string_view to_string(AttackStatus status);

struct AttackResult {
  AttackStatus status = AttackStatus::FAILED;
  std::optional<std::string> adversarial_text;
  std::vector<Perturbation> perturbations;
  std::uint64_t queries = 0;
  double similarity = 1.0;
  double perturbed_word_pct = 0.0;
  // Set when the result is FAILED because the oracle itself broke down.
  bool oracle_failure = false;
  std::string error;
};

// A synonym candidate together with the semantic similarity between the
// original text and the current text with this candidate substituted in.
struct ScoredCandidate {
  SynonymCandidate candidate;
  double text_similarity = 0.0;
};

// Drops candidates that change the word's POS tag or push whole-text
// similarity below epsilon; survivors are sorted by descending similarity
// (ties: higher cosine, then vocabulary order).
std::vector<ScoredCandidate> filter_candidates(
    const Document& doc, const Substitutions& current, int position,
    const std::vector<SynonymCandidate>& candidates, const AttackConfig& config,
    const SimilarityScorer& scorer, const PosTagger& tagger,
    const std::string& original_text);

// Probes the three acceptance rules in preference order against the current
// perturbed state. The sentence tier only applies when the word's sentence
// individually carried the document label; probes whose text would repeat
// an earlier tier verbatim are skipped.
std::optional<AcceptTier> try_candidate(
    const Document& doc, const Substitutions& current, int position,
    const std::string& candidate_word, const Label& y0,
    const Partition& partition, const std::vector<Aggregate>& aggregates,
    bool use_aggregates, Oracle& oracle);

// Greedy pass in commit order: reverts every perturbation the adversarial
// text can do without. `current` is updated in place; returns the kept
// perturbations. If the query budget runs out mid-pass the remaining
// perturbations stay committed.
std::vector<Perturbation> reset_insignificant(
    const Document& doc, const std::vector<Perturbation>& committed,
    const Label& y0, Oracle& oracle, Substitutions& current);

class AttackEngine {
 public:
  AttackEngine(const EmbeddingStore& store, const SimilarityScorer& scorer,
               const PosTagger& tagger, AttackConfig config)
      : store_(store), scorer_(scorer), tagger_(tagger), config_(config) {}

  // Runs the full pipeline on one analyzed (tokenized + tagged) document.
  // Verifies the oracle agrees with y0 first; a mismatch is reported as
  // SKIPPED_MISCLASSIFIED with exactly one query spent.
  AttackResult attack(const Document& doc, const Label& y0,
                      Oracle& victim) const;

  const AttackConfig& config() const { return config_; }

 private:
  const EmbeddingStore& store_;
  const SimilarityScorer& scorer_;
  const PosTagger& tagger_;
  AttackConfig config_;
};

}  // namespace textdecepter

#endif  // TEXTDECEPTER_ATTACK_HPP_
