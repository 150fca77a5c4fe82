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

#include "textdecepter/ranking.hpp"

#include <algorithm>
#include <set>

namespace textdecepter {

Partition partition_sentences(const Document& doc, const Label& y0,
                              Oracle& oracle) {
  Partition partition;
  for (const Sentence& sent : doc.sentences) {
    const std::string text = render_sentence(doc, sent.index, {});
    if (oracle.classify(text) == y0) {
      partition.set_a.push_back(sent.index);
    } else {
      partition.set_b.push_back(sent.index);
    }
  }
  return partition;
}

namespace {

// Lexicographically next k-combination of indices into a pool of size n.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void assign_level(SentenceImportance* importance, const std::vector<int>& who,
                  int level) {
  for (int s : who) importance->levels.emplace(s, level);
}

}  // namespace

std::pair<SentenceImportance, std::vector<Aggregate>> rank_sentences(
    const Document& doc, const Partition& partition, const Label& y0,
    Oracle& oracle, const RankOptions& options) {
  SentenceImportance importance;
  std::vector<Aggregate> aggregates;

  if (partition.set_a.empty()) {
    // Nothing individually carries the document label; fall back to treating
    // every sentence as level 1 with the whole document as the aggregate.
    std::vector<int> all;
    for (const Sentence& s : doc.sentences) all.push_back(s.index);
    assign_level(&importance, all, 1);
    aggregates.push_back({all, y0});
    return {std::move(importance), std::move(aggregates)};
  }

  std::vector<int> remaining = partition.set_a;
  std::sort(remaining.begin(), remaining.end());
  std::uint64_t queries_used = 0;

  for (int level = 1; !remaining.empty(); ++level) {
    if (level > static_cast<int>(remaining.size())) {
      // No combination of this size exists; the leftovers share this level.
      assign_level(&importance, remaining, level);
      break;
    }
    if (level > options.p_max) {
      assign_level(&importance, remaining, options.p_max + 1);
      break;
    }

    std::set<int> assigned;
    std::vector<std::size_t> idx(static_cast<std::size_t>(level));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    bool more = true;
    bool budget_hit = false;
    while (more) {
      if (queries_used >= options.aggregate_budget) {
        budget_hit = true;
        break;
      }
      std::vector<int> members = partition.set_b;
      std::vector<int> combo;
      combo.reserve(idx.size());
      for (std::size_t i : idx) combo.push_back(remaining[i]);
      members.insert(members.end(), combo.begin(), combo.end());
      std::sort(members.begin(), members.end());

      const std::string text = render_sentences(doc, members, {});
      ++queries_used;
      if (oracle.classify(text) == y0) {
        aggregates.push_back({members, y0});
        assign_level(&importance, combo, level);
        assigned.insert(combo.begin(), combo.end());
      }
      more = next_combination(idx, remaining.size());
    }

    std::erase_if(remaining, [&](int s) { return assigned.contains(s); });
    if (budget_hit) {
      assign_level(&importance, remaining, options.p_max + 1);
      break;
    }
  }

  return {std::move(importance), std::move(aggregates)};
}

const PosPriority& default_pos_priority() {
  static const PosPriority priority = {
      {CoarsePos::ADJ, 4},
      {CoarsePos::VERB, 3},
      {CoarsePos::ADV, 2},
      {CoarsePos::NOUN, 1},
  };
  return priority;
}

WordOrder rank_words(const Document& doc, const SentenceImportance& importance,
                     const PosPriority& priority) {
  WordOrder order;
  for (const Token& tok : doc.tokens) {
    if (!tok.is_word) continue;
    auto level = importance.levels.find(tok.sentence_index);
    if (level == importance.levels.end()) continue;
    auto prio = priority.find(tok.coarse_pos);
    order.entries.push_back({tok.position, level->second,
                             prio == priority.end() ? 0 : prio->second});
  }
  std::sort(order.entries.begin(), order.entries.end(),
            [](const WordOrderEntry& a, const WordOrderEntry& b) {
              if (a.sentence_level != b.sentence_level) {
                return a.sentence_level < b.sentence_level;
              }
              if (a.pos_priority != b.pos_priority) {
                return a.pos_priority > b.pos_priority;
              }
              return a.position < b.position;
            });
  return order;
}

}  // namespace textdecepter
