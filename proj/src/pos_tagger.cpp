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

#include "textdecepter/pos_tagger.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>

#include "pos_lexicon.hpp"

namespace textdecepter {

namespace {

bool is_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool all_punct(std::string_view s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](char c) {
    return is_alnum(c) || c == '\'';
  });
}

bool is_numeric(std::string_view s) {
  bool digit_seen = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_seen = true;
    } else if (c != '.' && c != ',' && c != '-' && c != '+') {
      return false;
    }
  }
  return digit_seen;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string punct_tag(std::string_view surface) {
  if (surface == "." || surface == "!" || surface == "?") return ".";
  if (surface == ",") return ",";
  if (surface == ";" || surface == ":" || surface == "...") return ":";
  if (surface == "(") return "-LRB-";
  if (surface == ")") return "-RRB-";
  return "SYM";
}

using TagSet = std::vector<std::string_view>;

const std::unordered_map<std::string_view, TagSet>& lexicon() {
  static const auto* map = [] {
    auto* m = new std::unordered_map<std::string_view, TagSet>();
    for (const detail::LexEntry& e : detail::builtin_tag_lexicon()) {
      TagSet tags;
      std::string_view rest = e.tags;
      while (!rest.empty()) {
        std::size_t bar = rest.find('|');
        tags.push_back(rest.substr(0, bar));
        rest = bar == std::string_view::npos ? std::string_view{}
                                             : rest.substr(bar + 1);
      }
      (*m)[e.word] = std::move(tags);
    }
    return m;
  }();
  return *map;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Candidate tags for a word the lexicon does not know. The bare default is
// "NN"; plural/verb readings of trailing -s stay ambiguous for the context
// rules below.
TagSet suffix_tags(std::string_view w) {
  if (ends_with(w, "ly")) return {"RB"};
  if (ends_with(w, "izes") || ends_with(w, "ises") || ends_with(w, "ifies") ||
      ends_with(w, "ates")) {
    return {"VBZ"};
  }
  if (ends_with(w, "ing")) return {"VBG", "NN"};
  if (ends_with(w, "ized") || ends_with(w, "ised") || ends_with(w, "ated") ||
      ends_with(w, "ified") || ends_with(w, "ed")) {
    return {"VBD", "VBN"};
  }
  if (ends_with(w, "est")) return {"JJS"};
  if (ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "ive") ||
      ends_with(w, "able") || ends_with(w, "ible") || ends_with(w, "ish") ||
      ends_with(w, "ic") || ends_with(w, "al")) {
    return {"JJ"};
  }
  if (ends_with(w, "ness") || ends_with(w, "ment") || ends_with(w, "tion") ||
      ends_with(w, "sion") || ends_with(w, "ity") || ends_with(w, "ance") ||
      ends_with(w, "ence")) {
    return {"NN"};
  }
  if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is")) {
    return {"NNS", "VBZ"};
  }
  return {"NN"};
}

bool has(const TagSet& tags, std::string_view t) {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

bool prev_in(std::string_view prev,
             std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), prev) != set.end();
}

bool prev_is_be_have(std::string_view prev_word) {
  return prev_in(prev_word, {"is", "was", "are", "were", "be", "been", "being",
                             "has", "have", "had", "'s", "'ve"});
}

// Resolves an ambiguous tag set using the previous token's resolved tag (and
// occasionally the previous word itself).
std::string_view resolve(const TagSet& tags, std::string_view prev_tag,
                         std::string_view prev_word) {
  if (tags.size() == 1) return tags[0];

  if (has(tags, "NNS") && has(tags, "VBZ")) {
    if (prev_in(prev_tag, {"DT", "PDT", "PRP$", "POS", "JJ", "JJR", "JJS",
                           "CD", "IN"})) {
      return "NNS";
    }
    if (prev_in(prev_tag, {"PRP", "NN", "NNS", "NNP", "NNPS", "WP"})) {
      return "VBZ";
    }
    return tags[0];
  }
  if (has(tags, "NN") && (has(tags, "VB") || has(tags, "VBP"))) {
    if (prev_tag == "TO" || prev_tag == "MD") return "VB";
    if (prev_in(prev_tag, {"PRP", "NNS", "NNP", "WP"})) {
      return has(tags, "VBP") ? "VBP" : "VB";
    }
    if (prev_in(prev_tag, {"DT", "PDT", "PRP$", "POS", "JJ", "JJR", "JJS",
                           "CD", "IN"})) {
      return "NN";
    }
    return tags[0];
  }
  if (has(tags, "VB") && has(tags, "VBP")) {
    if (prev_tag == "TO" || prev_tag == "MD") return "VB";
    return "VBP";
  }
  if (has(tags, "VBD") && has(tags, "VBN")) {
    return prev_is_be_have(prev_word) ? "VBN" : "VBD";
  }
  if (has(tags, "VBG") && has(tags, "NN")) {
    if (prev_in(prev_tag, {"DT", "PDT", "PRP$", "POS", "JJ", "IN"})) {
      return "NN";
    }
    return "VBG";
  }
  return tags[0];
}

}  // namespace

CoarsePos coarse_of(std::string_view t) {
  if (t == "JJ" || t == "JJR" || t == "JJS") return CoarsePos::ADJ;
  if (t == "RB" || t == "RBR" || t == "RBS" || t == "WRB") return CoarsePos::ADV;
  if (t == "VB" || t == "VBD" || t == "VBG" || t == "VBN" || t == "VBP" ||
      t == "VBZ" || t == "MD") {
    return CoarsePos::VERB;
  }
  if (t == "NN" || t == "NNS" || t == "NNP" || t == "NNPS") return CoarsePos::NOUN;
  if (t == "PRP" || t == "PRP$" || t == "WP" || t == "WP$" || t == "EX") {
    return CoarsePos::PRON;
  }
  if (t == "CC") return CoarsePos::CONJ;
  if (t == "IN" || t == "TO") return CoarsePos::PREP;
  if (t == "DT" || t == "PDT" || t == "WDT") return CoarsePos::DET;
  if (t == "CD") return CoarsePos::NUM;
  if (t == "." || t == "," || t == ":" || t == "-LRB-" || t == "-RRB-" ||
      t == "SYM" || t == "``" || t == "''") {
    return CoarsePos::PUNCT;
  }
  return CoarsePos::OTHER;  // POS, RP, FW, UH, LS
}

std::vector<std::string> LexiconSuffixTagger::tag(
    const std::vector<std::string>& sentence_tokens) const {
  std::vector<std::string> out;
  out.reserve(sentence_tokens.size());
  std::string_view prev_tag;
  std::string prev_word;
  for (const std::string& surface : sentence_tokens) {
    std::string tag;
    if (all_punct(surface)) {
      tag = punct_tag(surface);
    } else if (is_numeric(surface)) {
      tag = "CD";
    } else {
      std::string w = lower(surface);
      const auto& lex = lexicon();
      auto it = lex.find(w);
      const TagSet tags = it != lex.end() ? it->second : suffix_tags(w);
      tag = std::string(resolve(tags, prev_tag, prev_word));
      prev_word = std::move(w);
    }
    out.push_back(tag);
    prev_tag = out.back();
  }
  return out;
}

void tag_pos(Document& doc, const PosTagger& tagger) {
  for (const Sentence& sent : doc.sentences) {
    std::vector<std::string> surfaces;
    surfaces.reserve(sent.token_end - sent.token_begin);
    for (std::size_t t = sent.token_begin; t < sent.token_end; ++t) {
      surfaces.push_back(doc.tokens[t].surface);
    }
    std::vector<std::string> tags = tagger.tag(surfaces);
    for (std::size_t t = sent.token_begin; t < sent.token_end; ++t) {
      doc.tokens[t].fine_pos = tags[t - sent.token_begin];
      doc.tokens[t].coarse_pos = coarse_of(doc.tokens[t].fine_pos);
    }
  }
}

bool pos_compatible(const Document& doc, const Token& original,
                    const std::string& candidate_word, PosMode mode,
                    const PosTagger& tagger) {
  const Sentence& sent =
      doc.sentences.at(static_cast<std::size_t>(original.sentence_index));
  std::vector<std::string> surfaces;
  std::size_t slot = sent.token_end;  // set below
  surfaces.reserve(sent.token_end - sent.token_begin);
  for (std::size_t t = sent.token_begin; t < sent.token_end; ++t) {
    const Token& tok = doc.tokens[t];
    if (tok.is_word && tok.position == original.position) {
      slot = surfaces.size();
      surfaces.push_back(candidate_word);
    } else {
      surfaces.push_back(tok.surface);
    }
  }
  if (slot >= surfaces.size()) {
    return false;  // `original` is not a word token of this document
  }
  std::vector<std::string> tags = tagger.tag(surfaces);
  const std::string& candidate_tag = tags[slot];
  if (mode == PosMode::Fine) {
    return candidate_tag == original.fine_pos;
  }
  return coarse_of(candidate_tag) == original.coarse_pos;
}

}  // namespace textdecepter
