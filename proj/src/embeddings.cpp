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

#include "textdecepter/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_set>
#include <sstream>

#include "textdecepter/errors.hpp"

namespace textdecepter {

EmbeddingStore EmbeddingStore::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open embedding file: " + path);
  }

  EmbeddingStore store;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string word;
    row >> word;
    if (word.empty()) {
      throw FormatError("missing word", line_no);
    }
    std::vector<float> values;
    double v = 0.0;
    while (row >> v) values.push_back(static_cast<float>(v));
    if (!row.eof()) {
      throw FormatError("non-numeric vector component", line_no);
    }
    if (values.empty()) {
      throw FormatError("entry has no vector components", line_no);
    }
    for (float x : values) {
      if (!std::isfinite(x)) {
        throw FormatError("non-finite vector component", line_no);
      }
    }
    if (store.dim_ == 0) {
      store.dim_ = values.size();
    } else if (values.size() != store.dim_) {
      throw FormatError("dimension mismatch: expected " +
                            std::to_string(store.dim_) + ", got " +
                            std::to_string(values.size()),
                        line_no);
    }
    if (!seen.insert(word).second) {
      continue;  // duplicates keep the first occurrence
    }
    double sq = 0.0;
    for (float x : values) sq += static_cast<double>(x) * x;
    if (sq == 0.0) {
      throw FormatError("zero-norm vector for '" + word + "'", line_no);
    }
    store.vocab_.push_back(std::move(word));
    store.data_.insert(store.data_.end(), values.begin(), values.end());
    store.norms_.push_back(static_cast<float>(std::sqrt(sq)));
  }
  if (store.vocab_.empty()) {
    throw FormatError("embedding file has no entries");
  }
  store.index_.reserve(store.vocab_.size());
  for (std::size_t i = 0; i < store.vocab_.size(); ++i) {
    store.index_.emplace(store.vocab_[i], i);
  }
  return store;
}

std::optional<std::size_t> EmbeddingStore::index_of(
    std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const float> EmbeddingStore::vector_at(std::size_t row) const {
  return {data_.data() + row * dim_, dim_};
}

SimilarityMatrix::SimilarityMatrix(const Document& doc,
                                   const EmbeddingStore& store)
    : store_(&store) {
  // Rows: distinct normalized in-vocabulary words, in order of first
  // appearance. This keeps memory at O(words-in-text * vocabulary) instead
  // of a vocabulary-squared matrix.
  std::vector<std::size_t> row_vocab_ids;
  std::unordered_set<std::string> seen;
  for (const Token& tok : doc.tokens) {
    if (!tok.is_word) continue;
    if (!seen.insert(tok.normalized).second) continue;
    auto id = store.index_of(tok.normalized);
    if (!id) continue;
    row_words_.push_back(tok.normalized);
    row_vocab_ids.push_back(*id);
  }
  row_index_.reserve(row_words_.size());
  for (std::size_t r = 0; r < row_words_.size(); ++r) {
    row_index_.emplace(row_words_[r], r);
  }

  const std::size_t n = store.size();
  const std::size_t d = store.dim();
  values_.resize(row_words_.size() * n);
  for (std::size_t r = 0; r < row_vocab_ids.size(); ++r) {
    std::span<const float> u = store.vector_at(row_vocab_ids[r]);
    const float un = store.norm_at(row_vocab_ids[r]);
    float* out = values_.data() + r * n;
    for (std::size_t c = 0; c < n; ++c) {
      std::span<const float> v = store.vector_at(c);
      double dot = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        dot += static_cast<double>(u[k]) * v[k];
      }
      out[c] = static_cast<float>(dot / (static_cast<double>(un) *
                                         store.norm_at(c)));
    }
  }
}

bool SimilarityMatrix::has_row(std::string_view word) const {
  return row_index_.contains(word);
}

std::span<const float> SimilarityMatrix::row(std::string_view word) const {
  auto it = row_index_.find(word);
  if (it == row_index_.end()) {
    throw UnknownWordError("'" + std::string(word) +
                           "' is not a row of the similarity matrix");
  }
  return {values_.data() + it->second * store_->size(), store_->size()};
}

std::vector<SynonymCandidate> SimilarityMatrix::top_k_synonyms(
    const std::string& word, std::size_t k, double min_cosine) const {
  std::span<const float> sims = row(word);
  std::vector<SynonymCandidate> out;
  if (k == 0) return out;

  std::vector<std::size_t> ids;
  ids.reserve(sims.size());
  for (std::size_t c = 0; c < sims.size(); ++c) {
    if (sims[c] < min_cosine) continue;
    if (store_->vocabulary()[c] == word) continue;
    ids.push_back(c);
  }
  auto better = [&](std::size_t a, std::size_t b) {
    if (sims[a] != sims[b]) return sims[a] > sims[b];
    return a < b;  // vocabulary order
  };
  if (ids.size() > k) {
    std::partial_sort(ids.begin(), ids.begin() + static_cast<long>(k),
                      ids.end(), better);
    ids.resize(k);
  } else {
    std::sort(ids.begin(), ids.end(), better);
  }
  out.reserve(ids.size());
  for (std::size_t c : ids) {
    out.push_back({store_->vocabulary()[c], sims[c], c});
  }
  return out;
}

}  // namespace textdecepter
