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

#include "textdecepter/victim.hpp"

#include <fstream>

#include "json.hpp"
#include "textdecepter/errors.hpp"
#include "textdecepter/textproc.hpp"

namespace textdecepter {

LexiconClassifier::LexiconClassifier(std::map<std::string, double> weights,
                                     double bias, Label positive_label,
                                     Label negative_label)
    : weights_(std::move(weights)),
      bias_(bias),
      positive_label_(std::move(positive_label)),
      negative_label_(std::move(negative_label)) {}

LexiconClassifier LexiconClassifier::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open lexicon file: " + path);
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("lexicon is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw FormatError("lexicon file must hold a JSON object");
  }
  std::map<std::string, double> weights;
  double bias = 0.0;
  Label pos{"POS"};
  Label neg{"NEG"};
  for (const auto& [key, value] : doc.items()) {
    if (key == "__bias__") {
      bias = value.get<double>();
    } else if (key == "__positive_label__") {
      pos.value = value.get<std::string>();
    } else if (key == "__negative_label__") {
      neg.value = value.get<std::string>();
    } else if (value.is_number()) {
      weights[key] = value.get<double>();
    } else {
      throw FormatError("weight for '" + key + "' is not a number");
    }
  }
  return LexiconClassifier(std::move(weights), bias, std::move(pos),
                           std::move(neg));
}

Label LexiconClassifier::classify(const std::string& text) {
  Document doc = tokenize("", text, segment_sentences(text));
  double sum = bias_;
  for (const Token& tok : doc.tokens) {
    if (!tok.is_word) continue;
    auto it = weights_.find(tok.normalized);
    if (it != weights_.end()) sum += it->second;
  }
  return sum > 0.0 ? positive_label_ : negative_label_;
}

}  // namespace textdecepter
