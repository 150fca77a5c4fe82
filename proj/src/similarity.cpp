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

#include "textdecepter/similarity.hpp"

#include <cmath>
#include <vector>

#include "textdecepter/textproc.hpp"

namespace textdecepter {

namespace {

// Mean of unit word vectors over the in-vocabulary words of `text`.
// Returns false when no word is known.
bool embed(const EmbeddingStore& store, const std::string& text,
           std::vector<double>* out) {
  out->assign(store.dim(), 0.0);
  std::size_t found = 0;
  Document doc = tokenize("", text, segment_sentences(text));
  for (const Token& tok : doc.tokens) {
    if (!tok.is_word) continue;
    auto id = store.index_of(tok.normalized);
    if (!id) continue;
    std::span<const float> v = store.vector_at(*id);
    const double n = store.norm_at(*id);
    for (std::size_t k = 0; k < v.size(); ++k) {
      (*out)[k] += v[k] / n;
    }
    ++found;
  }
  if (found == 0) return false;
  for (double& x : *out) x /= static_cast<double>(found);
  return true;
}

}  // namespace

double MeanVectorScorer::score(const std::string& a,
                               const std::string& b) const {
  if (a == b) return 1.0;
  std::vector<double> va;
  std::vector<double> vb;
  if (!embed(store_, a, &va) || !embed(store_, b, &vb)) return 0.0;
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t k = 0; k < va.size(); ++k) {
    dot += va[k] * vb[k];
    na += va[k] * va[k];
    nb += vb[k] * vb[k];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double cosine = dot / (std::sqrt(na) * std::sqrt(nb));
  if (cosine <= 0.0) return 0.0;
  return cosine >= 1.0 ? 1.0 : cosine;
}

}  // namespace textdecepter
