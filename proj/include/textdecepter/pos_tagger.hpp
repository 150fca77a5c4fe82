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

#ifndef TEXTDECEPTER_POS_TAGGER_HPP_
#define TEXTDECEPTER_POS_TAGGER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "textdecepter/textproc.hpp"

namespace textdecepter {

enum class PosMode { Coarse, Fine };

// Maps a Penn-Treebank-style fine tag to the coarse class (see
// docs/tagset.md for the full tag list).
CoarsePos coarse_of(std::string_view fine_tag);

// Tagging interface so an external tagger can be plugged in. Implementations
// must be deterministic: same token sequence, same tags.
class PosTagger {
 public:
  virtual ~PosTagger() = default;

  // Fine tags for the token surfaces of one sentence, in order. Punctuation
  // and numeric tokens receive punctuation tags / "CD".
  virtual std::vector<std::string> tag(
      const std::vector<std::string>& sentence_tokens) const = 0;
};

// The bundled tagger: an embedded tag lexicon, suffix rules for unknown
// words, and a small left-context rule set for noun/verb ambiguity. Unknown
// words without a matching suffix default to "NN".
class LexiconSuffixTagger : public PosTagger {
 public:
  std::vector<std::string> tag(
      const std::vector<std::string>& sentence_tokens) const override;
};

// Fills in fine_pos and coarse_pos for every token.
void tag_pos(Document& doc, const PosTagger& tagger);

// True iff tagging `candidate_word` in the original token's sentence slot
// yields the same tag as the original, at the given granularity.
bool pos_compatible(const Document& doc, const Token& original,
                    const std::string& candidate_word, PosMode mode,
                    const PosTagger& tagger);

}  // namespace textdecepter

#endif  // TEXTDECEPTER_POS_TAGGER_HPP_
