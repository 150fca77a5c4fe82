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

#include <map>

#include "test_support.hpp"
#include "textdecepter/attack.hpp"
#include "textdecepter/errors.hpp"
#include "textdecepter/harness.hpp"

using namespace textdecepter;

namespace {

const LexiconSuffixTagger& tagger() {
  static const LexiconSuffixTagger t;
  return t;
}

const EmbeddingStore& store() {
  static const EmbeddingStore s =
      EmbeddingStore::load(tdtest::fixture_path("embeddings_50d.txt"));
  return s;
}

const MeanVectorScorer& scorer() {
  static const MeanVectorScorer sc(store());
  return sc;
}

LexiconClassifier fixture_victim() {
  return LexiconClassifier::load(tdtest::fixture_path("victim_lexicon.json"));
}

Document doc_of(const std::string& text) {
  return analyze_document("t", text, tagger());
}

AttackEngine engine(AttackConfig config = {}) {
  return AttackEngine(store(), scorer(), tagger(), config);
}

// An oracle that fails hard after a fixed number of calls.
class FlakyOracle : public Oracle {
 public:
  FlakyOracle(Oracle& inner, int healthy_calls)
      : inner_(inner), remaining_(healthy_calls) {}

  Label classify(const std::string& text) override {
    if (remaining_-- <= 0) {
      throw OracleUnavailableError("connection refused");
    }
    return inner_.classify(text);
  }

 private:
  Oracle& inner_;
  int remaining_;
};

}  // namespace

TEST_CASE("candidate filter keeps in-tag synonyms above the floor") {
  Document doc = doc_of("strange and beautiful film");
  SimilarityMatrix matrix(doc, store());
  auto raw = matrix.top_k_synonyms("beautiful", 50, 0.5);
  AttackConfig config;
  auto filtered = filter_candidates(doc, {}, 2, raw, config, scorer(),
                                    tagger(), render(doc, {}));
  REQUIRE(!filtered.empty());
  bool resplendent = false;
  for (const auto& c : filtered) {
    CHECK(c.text_similarity >= config.epsilon);
    if (c.candidate.word == "resplendent") resplendent = true;
  }
  CHECK(resplendent);
  for (std::size_t i = 1; i < filtered.size(); ++i) {
    CHECK(filtered[i - 1].text_similarity >= filtered[i].text_similarity);
  }
}

TEST_CASE("fine mask drops inflection mismatches the coarse mask keeps") {
  Document doc = doc_of("falsehoods pile up , undermining the movie");
  SimilarityMatrix matrix(doc, store());
  const Token& undermining = doc.word_at(3);
  REQUIRE(undermining.surface == "undermining");
  auto raw = matrix.top_k_synonyms("undermining", 50, 0.5);

  AttackConfig coarse;
  coarse.pos_mode = PosMode::Coarse;
  AttackConfig fine;
  fine.pos_mode = PosMode::Fine;

  auto keep_words = [&](const AttackConfig& cfg) {
    std::vector<std::string> words;
    for (const auto& c : filter_candidates(doc, {}, 3, raw, cfg, scorer(),
                                           tagger(), render(doc, {}))) {
      words.push_back(c.candidate.word);
    }
    return words;
  };
  auto coarse_words = keep_words(coarse);
  auto fine_words = keep_words(fine);

  auto contains = [](const std::vector<std::string>& v, const char* w) {
    return std::find(v.begin(), v.end(), w) != v.end();
  };
  CHECK(contains(coarse_words, "jeopardizes"));
  CHECK(contains(coarse_words, "jeopardizing"));
  CHECK(contains(fine_words, "jeopardizing"));
  CHECK_FALSE(contains(fine_words, "jeopardizes"));
}

TEST_CASE("empty candidate list filters to nothing") {
  Document doc = doc_of("strange and beautiful film");
  AttackConfig config;
  CHECK(filter_candidates(doc, {}, 2, {}, config, scorer(), tagger(),
                          render(doc, {}))
            .empty());
}

TEST_CASE("tier probing prefers full text, then sentence, then aggregate") {
  Document doc =
      doc_of("the pacing is bad . a good story . the cast is great .");
  LexiconClassifier victim(
      {{"bad", -2.0}, {"good", 2.0}, {"great", 3.0}, {"fine", 1.0}}, 0.0,
      Label{"POS"}, Label{"NEG"});
  const Label y0{"POS"};
  Partition partition{{1, 2}, {0}};
  std::vector<Aggregate> aggregates = {{{0, 2}, y0}};

  // 'great' is word position 10; document sum is +3.
  const int great_pos = 10;
  REQUIRE(doc.word_at(great_pos).surface == "great");

  SUBCASE("full-text flip wins immediately") {
    // Replacing great (+3) with bad (-2) drops the document to -2.
    auto tier = try_candidate(doc, {}, great_pos, "bad", y0, partition,
                              aggregates, true, victim);
    REQUIRE(tier.has_value());
    CHECK(*tier == AcceptTier::FULL_TEXT);
  }

  SUBCASE("aggregate flip is found when sentence resists") {
    // great -> fine: document 1 > 0, sentence 1 > 0, aggregate {0,2} drops
    // to -1.
    auto tier = try_candidate(doc, {}, great_pos, "fine", y0, partition,
                              aggregates, true, victim);
    REQUIRE(tier.has_value());
    CHECK(*tier == AcceptTier::AGGREGATE);
  }

  SUBCASE("aggregate tier honors the ablation switch") {
    auto tier = try_candidate(doc, {}, great_pos, "fine", y0, partition,
                              aggregates, false, victim);
    CHECK_FALSE(tier.has_value());
  }

  SUBCASE("no tier accepts a useless candidate") {
    auto tier = try_candidate(doc, {}, great_pos, "great", y0, partition,
                              aggregates, true, victim);
    CHECK_FALSE(tier.has_value());
  }
}

TEST_CASE("sentence tier flips when the full text resists") {
  Document doc = doc_of("the cast is good . the script is great .");
  LexiconClassifier victim({{"good", 2.0}, {"great", 3.0}}, 0.0, Label{"POS"},
                           Label{"NEG"});
  const Label y0{"POS"};
  Partition partition{{0, 1}, {}};
  std::vector<Aggregate> aggregates = {{{0}, y0}, {{1}, y0}};

  // good -> okay (no weight): sentence 0 drops to a tie, document stays +3.
  auto tier = try_candidate(doc, {}, 3, "okay", y0, partition, aggregates,
                            true, victim);
  REQUIRE(tier.has_value());
  CHECK(*tier == AcceptTier::SENTENCE);
}

TEST_CASE("queries accumulate previously committed substitutions") {
  Document doc = doc_of("the cast is good . the script is great .");
  LexiconClassifier victim({{"good", 2.0}, {"great", 3.0}, {"fine", 1.0}}, 0.0,
                           Label{"POS"}, Label{"NEG"});
  const Label y0{"POS"};
  Partition partition{{0, 1}, {}};
  std::vector<Aggregate> aggregates = {{{0}, y0}, {{1}, y0}};

  // Alone, zero-weight 'okay' for 'great' only flips its own sentence; with
  // good -> okay already committed the whole document lands on the tie.
  auto alone = try_candidate(doc, {}, 7, "okay", y0, partition, aggregates,
                             true, victim);
  REQUIRE(alone.has_value());
  CHECK(*alone == AcceptTier::SENTENCE);
  Substitutions subs{{3, "okay"}};
  auto tier = try_candidate(doc, subs, 7, "okay", y0, partition, aggregates,
                            true, victim);
  REQUIRE(tier.has_value());
  CHECK(*tier == AcceptTier::FULL_TEXT);
}

TEST_CASE("reset pass reverts replacements the attack can do without") {
  Document doc = doc_of("x y .");
  LexiconClassifier victim({{"x", -1.0}, {"y", -1.0}, {"a", 3.0}, {"b", 3.0}},
                           0.0, Label{"POS"}, Label{"NEG"});
  const Label y0{"NEG"};
  std::vector<Perturbation> committed = {
      {0, "x", "a", AcceptTier::SENTENCE},
      {1, "y", "b", AcceptTier::FULL_TEXT},
  };
  Substitutions subs{{0, "a"}, {1, "b"}};
  REQUIRE(victim.classify(render(doc, subs)) == Label{"POS"});

  auto kept = reset_insignificant(doc, committed, y0, victim, subs);
  // Either replacement alone flips; the greedy pass reverts the first and
  // the second becomes necessary.
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].position == 1);
  CHECK(subs == Substitutions{{1, "b"}});
  CHECK(victim.classify(render(doc, subs)) == Label{"POS"});
}

TEST_CASE("reset pass keeps a necessary lone replacement") {
  Document doc = doc_of("x y .");
  LexiconClassifier victim({{"x", -1.0}, {"y", -1.0}, {"a", 3.0}}, 0.0,
                           Label{"POS"}, Label{"NEG"});
  std::vector<Perturbation> committed = {{0, "x", "a", AcceptTier::FULL_TEXT}};
  Substitutions subs{{0, "a"}};
  auto kept = reset_insignificant(doc, committed, Label{"NEG"}, victim, subs);
  CHECK(kept.size() == 1);
  CHECK(subs.size() == 1);
}

TEST_CASE("single-word flip attack succeeds end to end") {
  auto victim = fixture_victim();
  Document doc = doc_of("strange and beautiful film");
  auto result = engine().attack(doc, Label{"POS"}, victim);

  REQUIRE(result.status == AttackStatus::SUCCESS);
  REQUIRE(result.adversarial_text.has_value());
  REQUIRE(result.perturbations.size() == 1);
  CHECK(result.perturbations[0].original == "beautiful");
  CHECK(result.perturbations[0].replacement == "resplendent");
  CHECK(result.perturbations[0].accepted_via == AcceptTier::FULL_TEXT);
  CHECK(*result.adversarial_text == "strange and resplendent film");
  CHECK(victim.classify(*result.adversarial_text) == Label{"NEG"});
  CHECK(result.similarity >= engine().config().epsilon);
  CHECK(result.perturbed_word_pct == doctest::Approx(25.0));
}

TEST_CASE("misclassified documents are skipped with one query") {
  auto victim = fixture_victim();
  // The victim reads this planted example as negative although the ground
  // truth is positive.
  Document doc = doc_of("an odd , awkward picture , but i cherish it .");
  auto result = engine().attack(doc, Label{"POS"}, victim);
  CHECK(result.status == AttackStatus::SKIPPED_MISCLASSIFIED);
  CHECK(result.queries == 1);
  CHECK(result.perturbations.empty());
  CHECK_FALSE(result.adversarial_text.has_value());
}

TEST_CASE("query budget caps total queries at budget plus one") {
  auto victim = fixture_victim();
  AttackConfig config;
  config.query_budget = 3;
  Document doc =
      doc_of("a good story with nice ideas . the cast is good . the pacing "
             "is bad .");
  auto result = engine(config).attack(doc, Label{"POS"}, victim);
  CHECK(result.status == AttackStatus::BUDGET_EXHAUSTED);
  CHECK(result.queries <= config.query_budget + 1);
  CHECK_FALSE(result.adversarial_text.has_value());
}

TEST_CASE("aggregate acceptance carries multi-word attacks") {
  auto victim = fixture_victim();
  Document doc =
      doc_of("a good story with nice ideas . the cast is good . the pacing "
             "is bad .");
  auto result = engine().attack(doc, Label{"POS"}, victim);
  REQUIRE(result.status == AttackStatus::SUCCESS);
  CHECK(result.perturbations.size() >= 2);
  CHECK(victim.classify(*result.adversarial_text) == Label{"NEG"});

  // The same document cannot be flipped without the aggregate tier.
  AttackConfig ablated;
  ablated.use_aggregates = false;
  auto without = engine(ablated).attack(doc, Label{"POS"}, victim);
  CHECK(without.status == AttackStatus::FAILED);
}

TEST_CASE("success invariants hold for a mixed document") {
  auto victim = fixture_victim();
  Document doc =
      doc_of("the premise is smart . the execution is sloppy . the dialogue "
             "is dull .");
  auto result = engine().attack(doc, Label{"NEG"}, victim);
  REQUIRE(result.status == AttackStatus::SUCCESS);

  // Rendering the perturbation list reproduces the adversarial text.
  Substitutions subs;
  for (const Perturbation& p : result.perturbations) {
    subs[p.position] = p.replacement;
  }
  CHECK(render(doc, subs) == *result.adversarial_text);
  CHECK(victim.classify(*result.adversarial_text) == Label{"POS"});
  CHECK(result.similarity >= engine().config().epsilon);

  Document adv = doc_of(*result.adversarial_text);
  CHECK(adv.tokens.size() == doc.tokens.size());
  CHECK(adv.word_count == doc.word_count);
}

TEST_CASE("attacks are deterministic") {
  auto victim = fixture_victim();
  Document doc =
      doc_of("a good story with nice ideas . the cast is good . the pacing "
             "is bad .");
  auto a = engine().attack(doc, Label{"POS"}, victim);
  auto b = engine().attack(doc, Label{"POS"}, victim);
  CHECK(a.status == b.status);
  CHECK(a.queries == b.queries);
  CHECK(a.similarity == b.similarity);
  CHECK(a.adversarial_text == b.adversarial_text);
  REQUIRE(a.perturbations.size() == b.perturbations.size());
  for (std::size_t i = 0; i < a.perturbations.size(); ++i) {
    CHECK(a.perturbations[i].position == b.perturbations[i].position);
    CHECK(a.perturbations[i].replacement == b.perturbations[i].replacement);
    CHECK(a.perturbations[i].accepted_via == b.perturbations[i].accepted_via);
  }
}

TEST_CASE("oracle breakdown surfaces as a failed result with detail") {
  auto victim = fixture_victim();
  FlakyOracle flaky(victim, 4);
  Document doc =
      doc_of("a good story with nice ideas . the cast is good . the pacing "
             "is bad .");
  auto result = engine().attack(doc, Label{"POS"}, flaky);
  CHECK(result.status == AttackStatus::FAILED);
  CHECK(result.oracle_failure);
  CHECK(result.error.find("connection refused") != std::string::npos);
}

TEST_CASE("degenerate documents fail cleanly") {
  auto victim = fixture_victim();

  SUBCASE("all words out of vocabulary") {
    Document doc = doc_of("zzyzx qwfp blorp .");
    auto result = engine().attack(doc, victim.classify("zzyzx qwfp blorp ."),
                                  victim);
    CHECK(result.status == AttackStatus::FAILED);
    CHECK(result.perturbations.empty());
    CHECK_FALSE(result.oracle_failure);
  }

  SUBCASE("no word tokens at all") {
    Document doc = doc_of("... !");
    auto result = engine().attack(doc, victim.classify("... !"), victim);
    CHECK(result.status == AttackStatus::FAILED);
    CHECK(result.perturbations.empty());
  }

  SUBCASE("zero top-k leaves no candidates") {
    AttackConfig config;
    config.top_k = 0;
    Document doc = doc_of("strange and beautiful film");
    auto result = engine(config).attack(doc, Label{"POS"}, victim);
    CHECK(result.status == AttackStatus::FAILED);
  }
}

TEST_CASE("attack never exceeds the default budget on fixture docs") {
  auto victim = fixture_victim();
  auto corpus = load_dataset(tdtest::fixture_path("reviews.jsonl"));
  const AttackEngine eng = engine();
  for (std::size_t i = 0; i < 6; ++i) {
    Document doc = analyze_document(corpus[i].id, corpus[i].text, tagger());
    auto result = eng.attack(doc, corpus[i].label, victim);
    CHECK(result.queries <= eng.config().query_budget + 1);
  }
}
