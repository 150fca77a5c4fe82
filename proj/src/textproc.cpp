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

#include "textdecepter/textproc.hpp"

#include <algorithm>
#include <cctype>

#include "textdecepter/errors.hpp"

namespace textdecepter {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Apostrophes are word-internal (clitics: "'s", "n't"), everything else
// non-alphanumeric counts as punctuation.
bool is_punct_char(char c) { return !is_alnum(c) && c != '\''; }

bool all_punct(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return !is_alnum(c) && c != '\''; });
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

std::string lowercased(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string normalize_surface(std::string_view surface) {
  std::size_t b = 0;
  std::size_t e = surface.size();
  while (b < e && is_punct_char(surface[b])) ++b;
  while (e > b && is_punct_char(surface[e - 1])) --e;
  return lowercased(surface.substr(b, e - b));
}

// Emits the tokens of one whitespace-delimited chunk: a leading punctuation
// run, the core, and a trailing punctuation run, each as its own token.
void split_chunk(std::string_view chunk, std::vector<std::string_view>* out) {
  if (all_punct(chunk)) {
    out->push_back(chunk);
    return;
  }
  std::size_t b = 0;
  std::size_t e = chunk.size();
  while (b < e && is_punct_char(chunk[b])) ++b;
  while (e > b && is_punct_char(chunk[e - 1])) --e;
  if (b > 0) out->push_back(chunk.substr(0, b));
  out->push_back(chunk.substr(b, e - b));
  if (e < chunk.size()) out->push_back(chunk.substr(e));
}

}  // namespace

std::string_view to_string(CoarsePos pos) {
  switch (pos) {
    case CoarsePos::ADJ: return "ADJ";
    case CoarsePos::ADV: return "ADV";
    case CoarsePos::VERB: return "VERB";
    case CoarsePos::NOUN: return "NOUN";
    case CoarsePos::PRON: return "PRON";
    case CoarsePos::CONJ: return "CONJ";
    case CoarsePos::PREP: return "PREP";
    case CoarsePos::DET: return "DET";
    case CoarsePos::NUM: return "NUM";
    case CoarsePos::PUNCT: return "PUNCT";
    case CoarsePos::OTHER: return "OTHER";
  }
  return "OTHER";
}

std::size_t Document::token_index_of_word(int position) const {
  if (position < 0 || position >= word_count) {
    throw InvalidPositionError("no word at position " +
                               std::to_string(position));
  }
  // Word positions are contiguous, so a linear probe from the position is
  // exact: token index >= word position always.
  for (std::size_t i = static_cast<std::size_t>(position); i < tokens.size();
       ++i) {
    if (tokens[i].position == position) return i;
  }
  throw InvalidPositionError("no word at position " + std::to_string(position));
}

const Token& Document::word_at(int position) const {
  return tokens[token_index_of_word(position)];
}

std::vector<Sentence> segment_sentences(std::string_view raw) {
  if (raw.empty() ||
      std::all_of(raw.begin(), raw.end(), [](char c) { return is_space(c); })) {
    throw EmptyDocumentError("empty or whitespace-only document");
  }

  std::vector<Sentence> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  const std::size_t n = raw.size();
  while (i < n) {
    if (is_terminator(raw[i]) && (i + 1 == n || is_space(raw[i + 1]))) {
      std::size_t end = i + 1;
      // The span extends through following whitespace so sentence spans
      // cover the full text.
      while (end < n && is_space(raw[end])) ++end;
      Sentence s;
      s.index = static_cast<int>(sentences.size());
      s.char_begin = start;
      s.char_end = end;
      sentences.push_back(s);
      start = end;
      i = end;
    } else {
      ++i;
    }
  }
  if (start < n) {
    Sentence s;
    s.index = static_cast<int>(sentences.size());
    s.char_begin = start;
    s.char_end = n;
    sentences.push_back(s);
  }

  // Drop sentences that contain no tokens (e.g. trailing whitespace runs
  // already folded into the previous span, or a whitespace-only head).
  std::vector<Sentence> kept;
  for (const Sentence& s : sentences) {
    std::string_view body = raw.substr(s.char_begin, s.char_end - s.char_begin);
    if (std::all_of(body.begin(), body.end(),
                    [](char c) { return is_space(c); })) {
      if (!kept.empty()) kept.back().char_end = s.char_end;
      continue;
    }
    Sentence k = s;
    k.index = static_cast<int>(kept.size());
    kept.push_back(k);
  }
  if (!kept.empty()) kept.front().char_begin = 0;
  return kept;
}

Document tokenize(std::string id, std::string raw,
                  const std::vector<Sentence>& boundaries) {
  Document doc;
  doc.id = std::move(id);
  doc.raw = std::move(raw);

  int word_position = 0;
  for (const Sentence& boundary : boundaries) {
    Sentence sent = boundary;
    sent.token_begin = doc.tokens.size();

    std::string_view body(doc.raw);
    body = body.substr(boundary.char_begin,
                       boundary.char_end - boundary.char_begin);
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && is_space(body[i])) ++i;
      if (i >= body.size()) break;
      std::size_t j = i;
      while (j < body.size() && !is_space(body[j])) ++j;
      std::vector<std::string_view> pieces;
      split_chunk(body.substr(i, j - i), &pieces);
      for (std::string_view piece : pieces) {
        Token tok;
        tok.surface = std::string(piece);
        tok.normalized = normalize_surface(piece);
        tok.sentence_index = sent.index;
        if (all_punct(piece)) {
          tok.is_word = false;
          tok.coarse_pos = CoarsePos::PUNCT;
        } else if (is_numeric(piece)) {
          tok.is_word = false;
          tok.coarse_pos = CoarsePos::NUM;
        } else {
          tok.is_word = true;
          tok.position = word_position++;
        }
        doc.tokens.push_back(std::move(tok));
      }
      i = j;
    }

    sent.token_end = doc.tokens.size();
    if (sent.token_end > sent.token_begin) {
      doc.sentences.push_back(sent);
    }
  }
  doc.word_count = word_position;

  // Re-number sentences in case empty ones were dropped above.
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    Sentence& sent = doc.sentences[s];
    if (sent.index != static_cast<int>(s)) {
      for (std::size_t t = sent.token_begin; t < sent.token_end; ++t) {
        doc.tokens[t].sentence_index = static_cast<int>(s);
      }
      sent.index = static_cast<int>(s);
    }
  }
  return doc;
}

std::string match_casing(std::string_view word, std::string_view replacement) {
  if (word.empty() || replacement.empty()) return std::string(replacement);
  const bool first_upper = std::isupper(static_cast<unsigned char>(word[0]));
  const bool all_upper =
      word.size() > 1 &&
      std::all_of(word.begin(), word.end(), [](unsigned char c) {
        return !std::isalpha(c) || std::isupper(c);
      });
  std::string out(replacement);
  if (all_upper) {
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
      return static_cast<char>(std::toupper(c));
    });
  } else if (first_upper) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

namespace {

void append_token_text(const Token& tok, const Substitutions& subs,
                       std::string* out) {
  if (!out->empty()) out->push_back(' ');
  if (tok.is_word) {
    auto it = subs.find(tok.position);
    if (it != subs.end()) {
      out->append(match_casing(tok.surface, it->second));
      return;
    }
  }
  out->append(tok.surface);
}

void check_positions(const Document& doc, const Substitutions& subs) {
  for (const auto& [position, replacement] : subs) {
    if (position < 0 || position >= doc.word_count) {
      throw InvalidPositionError("substitution position " +
                                 std::to_string(position) +
                                 " is not a word of the document");
    }
  }
}

}  // namespace

std::string render(const Document& doc, const Substitutions& substitutions) {
  check_positions(doc, substitutions);
  std::string out;
  out.reserve(doc.raw.size() + 16);
  for (const Token& tok : doc.tokens) {
    append_token_text(tok, substitutions, &out);
  }
  return out;
}

std::string render_sentence(const Document& doc, int sentence_index,
                            const Substitutions& substitutions) {
  check_positions(doc, substitutions);
  const Sentence& sent = doc.sentences.at(static_cast<std::size_t>(sentence_index));
  std::string out;
  for (std::size_t t = sent.token_begin; t < sent.token_end; ++t) {
    append_token_text(doc.tokens[t], substitutions, &out);
  }
  return out;
}

std::string render_sentences(const Document& doc,
                             const std::vector<int>& sentence_indices,
                             const Substitutions& substitutions) {
  std::vector<int> ordered = sentence_indices;
  std::sort(ordered.begin(), ordered.end());
  std::string out;
  for (int s : ordered) {
    std::string part = render_sentence(doc, s, substitutions);
    if (!out.empty()) out.push_back(' ');
    out.append(part);
  }
  return out;
}

}  // namespace textdecepter
