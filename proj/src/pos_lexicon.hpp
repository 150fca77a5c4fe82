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

#ifndef TEXTDECEPTER_SRC_POS_LEXICON_HPP_
#define TEXTDECEPTER_SRC_POS_LEXICON_HPP_

#include <span>
#include <string_view>

namespace textdecepter::detail {

// One lexicon row: lowercased word and its candidate fine tags joined with
// '|'. The first tag is the default; additional tags are resolved by the
// tagger's context rules.
struct LexEntry {
  std::string_view word;
  std::string_view tags;
};

std::span<const LexEntry> builtin_tag_lexicon();

}  // namespace textdecepter::detail

#endif  // TEXTDECEPTER_SRC_POS_LEXICON_HPP_
