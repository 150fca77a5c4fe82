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

#include "textdecepter/attack.hpp"

#include <algorithm>

#include "textdecepter/errors.hpp"

namespace textdecepter {

std::string_view to_string(AcceptTier tier) {
  switch (tier) {
    case AcceptTier::FULL_TEXT: return "FULL_TEXT";
    case AcceptTier::SENTENCE: return "SENTENCE";
    case AcceptTier::AGGREGATE: return "AGGREGATE";
  }
  return "FULL_TEXT";
}

std::string_view to_string(AttackStatus status) {
  switch (status) {
    case AttackStatus::SUCCESS: return "SUCCESS";
    case AttackStatus::FAILED: return "FAILED";
    case AttackStatus::BUDGET_EXHAUSTED: return "BUDGET_EXHAUSTED";
    case AttackStatus::SKIPPED_MISCLASSIFIED: return "SKIPPED_MISCLASSIFIED";
  }
  return "FAILED";
}

namespace {

// Throws once the attached counter would pass the limit, so an attack can
// never spend more than query_budget + 1 oracle decisions.
class BudgetedOracle : public Oracle {
 public:
  BudgetedOracle(CountingOracle& inner, std::uint64_t limit)
      : inner_(inner), limit_(limit) {}

  Label classify(const std::string& text) override {
    if (inner_.counter().count() >= limit_) {
      throw BudgetExhaustedError("query budget exhausted");
    }
    return inner_.classify(text);
  }

 private:
  CountingOracle& inner_;
  std::uint64_t limit_;
};

const Aggregate* smallest_aggregate_containing(
    const std::vector<Aggregate>& aggregates, int sentence) {
  const Aggregate* best = nullptr;
  for (const Aggregate& agg : aggregates) {
    if (!std::binary_search(agg.members.begin(), agg.members.end(), sentence)) {
      continue;
    }
    if (best == nullptr || agg.members.size() < best->members.size()) {
      best = &agg;  // ties keep the earliest created
    }
  }
  return best;
}

}  // namespace

std::vector<ScoredCandidate> filter_candidates(
    const Document& doc, const Substitutions& current, int position,
    const std::vector<SynonymCandidate>& candidates, const AttackConfig& config,
    const SimilarityScorer& scorer, const PosTagger& tagger,
    const std::string& original_text) {
  const Token& word = doc.word_at(position);
  std::vector<ScoredCandidate> out;
  for (const SynonymCandidate& cand : candidates) {
    if (!pos_compatible(doc, word, cand.word, config.pos_mode, tagger)) {
      continue;
    }
    Substitutions trial = current;
    trial[position] = cand.word;
    const double sim = scorer.score(original_text, render(doc, trial));
    if (sim < config.epsilon) continue;
    out.push_back({cand, sim});
  }
  // Input arrives in (cosine desc, vocabulary asc) order; a stable sort by
  // similarity keeps exactly that order for ties.
  std::stable_sort(out.begin(), out.end(),
                   [](const ScoredCandidate& a, const ScoredCandidate& b) {
                     return a.text_similarity > b.text_similarity;
                   });
  return out;
}

std::optional<AcceptTier> try_candidate(
    const Document& doc, const Substitutions& current, int position,
    const std::string& candidate_word, const Label& y0,
    const Partition& partition, const std::vector<Aggregate>& aggregates,
    bool use_aggregates, Oracle& oracle) {
  Substitutions trial = current;
  trial[position] = candidate_word;

  if (oracle.classify(render(doc, trial)) != y0) {
    return AcceptTier::FULL_TEXT;
  }

  const Token& word = doc.word_at(position);
  const int sentence = word.sentence_index;
  const bool sentence_in_a =
      std::find(partition.set_a.begin(), partition.set_a.end(), sentence) !=
      partition.set_a.end();
  // In a single-sentence document the sentence text is the tier-1 text.
  if (sentence_in_a && doc.sentences.size() > 1) {
    if (oracle.classify(render_sentence(doc, sentence, trial)) != y0) {
      return AcceptTier::SENTENCE;
    }
  }

  if (use_aggregates) {
    const Aggregate* agg = smallest_aggregate_containing(aggregates, sentence);
    if (agg != nullptr) {
      // Skip probes whose text was already queried this round: the whole
      // document at tier 1, or the bare sentence at tier 2.
      const bool is_whole_document =
          agg->members.size() == doc.sentences.size();
      const bool is_bare_sentence =
          sentence_in_a && agg->members.size() == 1;
      if (!is_whole_document && !is_bare_sentence) {
        if (oracle.classify(render_sentences(doc, agg->members, trial)) != y0) {
          return AcceptTier::AGGREGATE;
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Perturbation> reset_insignificant(
    const Document& doc, const std::vector<Perturbation>& committed,
    const Label& y0, Oracle& oracle, Substitutions& current) {
  std::vector<Perturbation> kept;
  for (std::size_t i = 0; i < committed.size(); ++i) {
    const Perturbation& p = committed[i];
    Substitutions trial = current;
    trial.erase(p.position);
    Label label;
    try {
      label = oracle.classify(render(doc, trial));
    } catch (const BudgetExhaustedError&) {
      // Out of queries: everything not yet tested stays in place.
      kept.insert(kept.end(), committed.begin() + static_cast<long>(i),
                  committed.end());
      return kept;
    }
    if (label != y0) {
      current = std::move(trial);  // still adversarial without it
    } else {
      kept.push_back(p);
    }
  }
  return kept;
}

AttackResult AttackEngine::attack(const Document& doc, const Label& y0,
                                  Oracle& victim) const {
  CountingOracle counted(victim);
  BudgetedOracle oracle(counted, config_.query_budget + 1);
  AttackResult result;

  const std::string original_text = render(doc, {});
  try {
    if (oracle.classify(original_text) != y0) {
      result.status = AttackStatus::SKIPPED_MISCLASSIFIED;
      result.queries = counted.counter().count();
      return result;
    }

    const Partition partition = partition_sentences(doc, y0, oracle);
    auto [importance, aggregates] = rank_sentences(
        doc, partition, y0, oracle,
        {config_.p_max, config_.aggregate_budget});
    const WordOrder order = rank_words(doc, importance);
    const SimilarityMatrix matrix(doc, store_);

    Substitutions subs;
    std::vector<Perturbation> committed;
    bool flipped = false;

    for (const WordOrderEntry& entry : order.entries) {
      const Token& word = doc.word_at(entry.position);
      if (!matrix.has_row(word.normalized)) continue;
      const auto raw = matrix.top_k_synonyms(word.normalized, config_.top_k,
                                             config_.min_cosine);
      const auto candidates =
          filter_candidates(doc, subs, entry.position, raw, config_, scorer_,
                            tagger_, original_text);

      // Evaluate every candidate: a later one may reach a higher tier.
      // Within a tier the first hit wins, since candidates arrive sorted by
      // similarity to the original.
      std::optional<std::pair<AcceptTier, ScoredCandidate>> best;
      for (const ScoredCandidate& cand : candidates) {
        const auto tier =
            try_candidate(doc, subs, entry.position, cand.candidate.word, y0,
                          partition, aggregates, config_.use_aggregates,
                          oracle);
        if (!tier) continue;
        if (*tier == AcceptTier::FULL_TEXT) {
          best = {AcceptTier::FULL_TEXT, cand};
          flipped = true;
          break;
        }
        if (!best || static_cast<int>(*tier) < static_cast<int>(best->first)) {
          best = {*tier, cand};
        }
      }
      if (best) {
        subs[entry.position] = best->second.candidate.word;
        committed.push_back({entry.position, word.surface,
                             best->second.candidate.word, best->first});
      }
      if (flipped) break;
    }

    if (!flipped) {
      result.status = AttackStatus::FAILED;
      result.perturbations = std::move(committed);
      result.queries = counted.counter().count();
      return result;
    }

    result.perturbations =
        reset_insignificant(doc, committed, y0, oracle, subs);
    result.status = AttackStatus::SUCCESS;
    result.adversarial_text = render(doc, subs);
    result.similarity = scorer_.score(original_text, *result.adversarial_text);
    result.perturbed_word_pct =
        doc.word_count > 0
            ? 100.0 * static_cast<double>(result.perturbations.size()) /
                  static_cast<double>(doc.word_count)
            : 0.0;
  } catch (const BudgetExhaustedError&) {
    result.status = AttackStatus::BUDGET_EXHAUSTED;
    result.perturbations.clear();
  } catch (const OracleUnavailableError& e) {
    result.status = AttackStatus::FAILED;
    result.oracle_failure = true;
    result.error = e.what();
  } catch (const OracleProtocolError& e) {
    result.status = AttackStatus::FAILED;
    result.oracle_failure = true;
    result.error = e.what();
  }
  result.queries = counted.counter().count();
  return result;
}

}  // namespace textdecepter
