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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "test_support.hpp"
#include "textdecepter/similarity.hpp"

using namespace textdecepter;

namespace {

const EmbeddingStore& store() {
  static const EmbeddingStore s =
      EmbeddingStore::load(tdtest::fixture_path("embeddings_50d.txt"));
  return s;
}

const MeanVectorScorer& scorer() {
  static const MeanVectorScorer sc(store());
  return sc;
}

// Independent evaluation of the documented formula: mean of unit vectors of
// whitespace words, then cosine. Reads the raw file, not the store.
double reference_score(const std::string& a, const std::string& b) {
  static const std::map<std::string, std::vector<double>>* vectors = [] {
    auto* m = new std::map<std::string, std::vector<double>>();
    std::ifstream in(tdtest::fixture_path("embeddings_50d.txt"));
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream row(line);
      std::string word;
      row >> word;
      std::vector<double> vec;
      double x;
      while (row >> x) vec.push_back(x);
      (*m)[word] = std::move(vec);
    }
    return m;
  }();

  auto mean = [&](const std::string& text, std::vector<double>* out) {
    out->assign(50, 0.0);
    int found = 0;
    for (const std::string& w : tdtest::plain_words(text)) {
      auto it = vectors->find(w);
      if (it == vectors->end()) continue;
      double norm = 0;
      for (double x : it->second) norm += x * x;
      norm = std::sqrt(norm);
      for (std::size_t k = 0; k < out->size(); ++k) {
        (*out)[k] += it->second[k] / norm;
      }
      ++found;
    }
    if (found == 0) return false;
    for (double& x : *out) x /= found;
    return true;
  };
  std::vector<double> va, vb;
  if (!mean(a, &va) || !mean(b, &vb)) return a == b ? 1.0 : 0.0;
  double dot = 0, na = 0, nb = 0;
  for (std::size_t k = 0; k < va.size(); ++k) {
    dot += va[k] * vb[k];
    na += va[k] * va[k];
    nb += vb[k] * vb[k];
  }
  double c = dot / (std::sqrt(na) * std::sqrt(nb));
  return std::min(1.0, std::max(0.0, c));
}

}  // namespace

TEST_CASE("identical strings score exactly one") {
  CHECK(scorer().score("good film", "good film") == 1.0);
  CHECK(scorer().score("zzyzx", "zzyzx") == 1.0);
}

TEST_CASE("score is symmetric") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"good film", "bad film"},
      {"a fine cast", "a lousy cast"},
      {"the laughs are real", "the chuckles are real"},
  };
  for (const auto& [a, b] : pairs) {
    CHECK(scorer().score(a, b) == doctest::Approx(scorer().score(b, a)));
  }
}

TEST_CASE("scores stay within the unit interval") {
  const std::vector<std::string> texts = {
      "good", "terrible film", "the cast shines", "a dull , tedious chore"};
  for (const auto& a : texts) {
    for (const auto& b : texts) {
      double s = scorer().score(a, b);
      CHECK(s >= 0.0);
      CHECK(s <= 1.0);
    }
  }
}

TEST_CASE("matches the hand-evaluated mean-vector formula") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"good film", "terrible film"},
      {"a good story with nice ideas", "a decent story with nice ideas"},
      {"the cast is good", "the cast is agreeable"},
  };
  for (const auto& [a, b] : pairs) {
    CHECK(scorer().score(a, b) == doctest::Approx(reference_score(a, b)).epsilon(1e-5));
  }
}

TEST_CASE("texts with no known words score zero unless identical") {
  CHECK(scorer().score("zzyzx qwfp", "good film") == 0.0);
  CHECK(scorer().score("good film", "zzyzx qwfp") == 0.0);
}

TEST_CASE("nearer synonyms keep the text nearer") {
  // Build a 20-word text and replace one word with a high- and a lower-
  // cosine cluster mate; the text similarity must order the same way.
  std::string text = "the cast is good and the story is fine";
  text += " . the pacing is fine and the music is fine .";

  SimilarityMatrix matrix(
      tokenize("t", text, segment_sentences(text)), store());
  auto cands = matrix.top_k_synonyms("good", 10, 0.5);
  REQUIRE(cands.size() >= 2);
  const auto& nearest = cands.front();
  const auto& farthest = cands.back();
  REQUIRE(nearest.cosine > farthest.cosine);

  auto replaced = [&](const std::string& word) {
    std::string out = text;
    const std::string target = "good";
    out.replace(out.find(target), target.size(), word);
    return out;
  };
  const double near_sim = scorer().score(text, replaced(nearest.word));
  const double far_sim = scorer().score(text, replaced(farthest.word));
  CHECK(near_sim >= far_sim);
  CHECK(near_sim < 1.0);
}
