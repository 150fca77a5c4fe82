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

#ifndef TEXTDECEPTER_RANKING_HPP_
#define TEXTDECEPTER_RANKING_HPP_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "textdecepter/textproc.hpp"
#include "textdecepter/victim.hpp"

namespace textdecepter {

// Sentence indices split by the oracle's decision on each sentence alone:
// set_a holds the sentences individually labeled with the document label,
// set_b the rest. Together they cover all sentences.
struct Partition {
  std::vector<int> set_a;
  std::vector<int> set_b;
};

// A text formed by joining set_b with a combination of set_a sentences, in
// document order. Only recorded when the oracle kept the document label.
struct Aggregate {
  std::vector<int> members;  // sorted sentence indices
  Label label_at_creation;
};

// Level k for a sentence: the smallest combination size at which it (with
// peers) pulled set_b back to the document label. Smaller level = more
// important. Sentences never resolved get a level past the cap.
struct SentenceImportance {
  std::map<int, int> levels;
};

struct WordOrderEntry {
  int position = 0;        // word-sequence position in the document
  int sentence_level = 0;  // ascending sort key
  int pos_priority = 0;    // descending sort key
};

struct WordOrder {
  std::vector<WordOrderEntry> entries;
};

// Queries every sentence individually, exactly once each.
Partition partition_sentences(const Document& doc, const Label& y0,
                              Oracle& oracle);

struct RankOptions {
  int p_max = 3;
  // Combination queries allowed before ranking gives up; hitting it is a
  // normal termination, not an error.
  std::uint64_t aggregate_budget = 500;
};

// Sentence importance ranking: for P = 1, 2, ... joins every P-combination
// of the still-unranked set_a sentences with set_b and queries the result;
// combinations that keep the document label assign level P to their members
// (removed only after the full level sweep) and are recorded as aggregates.
// When set_a is empty the whole document is the single aggregate and every
// sentence gets level 1.
std::pair<SentenceImportance, std::vector<Aggregate>> rank_sentences(
    const Document& doc, const Partition& partition, const Label& y0,
    Oracle& oracle, const RankOptions& options);

// Attack priority by part of speech; larger attacks first.
using PosPriority = std::map<CoarsePos, int>;
const PosPriority& default_pos_priority();  // ADJ > VERB > ADV > NOUN > rest

// Word positions of the ranked sentences ordered by (sentence level asc,
// POS priority desc, position asc). Non-words and unranked sentences are
// excluded.
WordOrder rank_words(const Document& doc, const SentenceImportance& importance,
                     const PosPriority& priority = default_pos_priority());

}  // namespace textdecepter

#endif  // TEXTDECEPTER_RANKING_HPP_
