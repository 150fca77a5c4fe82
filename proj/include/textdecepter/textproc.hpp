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

#ifndef TEXTDECEPTER_TEXTPROC_HPP_
#define TEXTDECEPTER_TEXTPROC_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace textdecepter {

enum class CoarsePos {
  ADJ,
  ADV,
  VERB,
  NOUN,
  PRON,
  CONJ,
  PREP,
  DET,
  NUM,
  PUNCT,
  OTHER,
};

std::string_view to_string(CoarsePos pos);

struct Token {
  std::string surface;
  // Lowercased surface with surrounding punctuation stripped; the form used
  // for embedding and lexicon lookups.
  std::string normalized;
  int sentence_index = 0;
  // 0-based index within the document word sequence; -1 for non-word tokens.
  int position = -1;
  CoarsePos coarse_pos = CoarsePos::OTHER;
  std::string fine_pos;
  bool is_word = false;
};

struct Sentence {
  int index = 0;
  // Half-open range into the document token list.
  std::size_t token_begin = 0;
  std::size_t token_end = 0;
  // Half-open byte range into the raw text.
  std::size_t char_begin = 0;
  std::size_t char_end = 0;
};

struct Document {
  std::string id;
  std::string raw;
  std::vector<Token> tokens;
  std::vector<Sentence> sentences;
  int word_count = 0;

  // Index into `tokens` of the word with the given word-sequence position.
  // Throws InvalidPositionError when out of range.
  std::size_t token_index_of_word(int position) const;
  const Token& word_at(int position) const;
};

// Splits raw text into sentences. A sentence ends after '.', '!' or '?'
// followed by whitespace or end-of-text. A text without terminators is a
// single sentence. Throws EmptyDocumentError on empty/whitespace-only input.
std::vector<Sentence> segment_sentences(std::string_view raw);

// Whitespace tokenization with surrounding punctuation split off into
// separate non-word tokens. Apostrophes count as word-internal so clitics
// like "'s" and "n't" survive as single tokens. POS fields are left
// unpopulated; see tag_pos().
Document tokenize(std::string id, std::string raw,
                  const std::vector<Sentence>& boundaries);

using Substitutions = std::map<int, std::string>;

// Document text with the listed words replaced, all other tokens unchanged.
// Tokens are joined with single spaces; replacement casing follows the
// original word's pattern. Keys are word-sequence positions; anything
// outside [0, word_count) throws InvalidPositionError.
std::string render(const Document& doc, const Substitutions& substitutions);

// Same, restricted to one sentence.
std::string render_sentence(const Document& doc, int sentence_index,
                            const Substitutions& substitutions);

// Same, over several sentences joined in document order with single spaces.
// `sentence_indices` need not be sorted.
std::string render_sentences(const Document& doc,
                             const std::vector<int>& sentence_indices,
                             const Substitutions& substitutions);

// Applies `word`'s casing pattern (all-lower, Capitalized, ALLCAPS) to
// `replacement`.
std::string match_casing(std::string_view word, std::string_view replacement);

}  // namespace textdecepter

#endif  // TEXTDECEPTER_TEXTPROC_HPP_
