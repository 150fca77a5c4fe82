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

#ifndef TEXTDECEPTER_SIMILARITY_HPP_
#define TEXTDECEPTER_SIMILARITY_HPP_

#include <string>

#include "textdecepter/embeddings.hpp"

namespace textdecepter {

// Sentence-level semantic similarity in [0, 1]. Symmetric, deterministic,
// exactly 1 for identical strings. Pluggable so a heavier external scorer
// can replace the bundled one.
class SimilarityScorer {
 public:
  virtual ~SimilarityScorer() = default;
  virtual double score(const std::string& a, const std::string& b) const = 0;
};

// Bundled scorer: cosine of the mean of length-normalized word vectors of
// the two texts, clamped to [0, 1]. Out-of-vocabulary words are ignored; if
// either text has no known words the score is 0 unless the strings match.
class MeanVectorScorer : public SimilarityScorer {
 public:
  explicit MeanVectorScorer(const EmbeddingStore& store) : store_(store) {}

  double score(const std::string& a, const std::string& b) const override;

 private:
  const EmbeddingStore& store_;
};

}  // namespace textdecepter

#endif  // TEXTDECEPTER_SIMILARITY_HPP_
