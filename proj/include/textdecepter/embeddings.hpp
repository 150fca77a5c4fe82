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

#ifndef TEXTDECEPTER_EMBEDDINGS_HPP_
#define TEXTDECEPTER_EMBEDDINGS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "textdecepter/textproc.hpp"

namespace textdecepter {

// An immutable word-vector store loaded from a text file, one entry per
// line: `word v1 v2 ... vd`. Duplicate words keep the first occurrence.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  static EmbeddingStore load(const std::string& path);

  // The word index holds views into vocab_; copying would dangle them.
  EmbeddingStore(EmbeddingStore&&) = default;
  EmbeddingStore& operator=(EmbeddingStore&&) = default;
  EmbeddingStore(const EmbeddingStore&) = delete;
  EmbeddingStore& operator=(const EmbeddingStore&) = delete;

  std::size_t size() const { return vocab_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& vocabulary() const { return vocab_; }
  std::optional<std::size_t> index_of(std::string_view word) const;
  std::span<const float> vector_at(std::size_t row) const;
  float norm_at(std::size_t row) const { return norms_[row]; }

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string_view, std::size_t> index_;
  std::vector<float> data_;   // row-major, size() x dim()
  std::vector<float> norms_;
  std::size_t dim_ = 0;
};

struct SynonymCandidate {
  std::string word;
  double cosine = 0.0;
  std::size_t vocab_index = 0;  // position in the store, breaks cosine ties
};

// Cosine similarities between the distinct in-vocabulary words of one
// document (rows, in order of first appearance) and the full vocabulary
// (columns). Row count is bounded by the document's distinct word count,
// never by vocabulary size.
class SimilarityMatrix {
 public:
  SimilarityMatrix(const Document& doc, const EmbeddingStore& store);
  SimilarityMatrix(SimilarityMatrix&&) = default;
  SimilarityMatrix& operator=(SimilarityMatrix&&) = default;
  SimilarityMatrix(const SimilarityMatrix&) = delete;
  SimilarityMatrix& operator=(const SimilarityMatrix&) = delete;

  std::size_t row_count() const { return row_words_.size(); }
  const std::vector<std::string>& row_words() const { return row_words_; }
  bool has_row(std::string_view word) const;

  // Throws UnknownWordError when `word` is not a row.
  std::span<const float> row(std::string_view word) const;

  // Up to k candidates for `word`, excluding the word itself, sorted by
  // descending cosine with vocabulary-order tie-break; all >= min_cosine.
  std::vector<SynonymCandidate> top_k_synonyms(const std::string& word,
                                               std::size_t k,
                                               double min_cosine) const;

  const EmbeddingStore& store() const { return *store_; }

 private:
  const EmbeddingStore* store_;
  std::vector<std::string> row_words_;
  std::unordered_map<std::string_view, std::size_t> row_index_;
  std::vector<float> values_;  // row-major, row_count() x store size
};

inline SimilarityMatrix build_similarity_matrix(const Document& doc,
                                                const EmbeddingStore& store) {
  return SimilarityMatrix(doc, store);
}

}  // namespace textdecepter

#endif  // TEXTDECEPTER_EMBEDDINGS_HPP_
