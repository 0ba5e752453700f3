// Copyright 2026 The omsr Authors
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

#ifndef OMSR_WORD_HPP_
#define OMSR_WORD_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace omsr {

// A word over generators 0..k-1. Letter +(g+1) is generator g, -(g+1) its
// inverse.
using Word = std::vector<int>;

Word inverse_word(const Word& w);
Word free_reduce(const Word& w);

// Parses words such as "x^-1yzw", "x⁻¹y", "(xy^{-1})^2", "x^z" (conjugate
// z^-1 x z) or "1". Generator names are matched greedily (longest first), so
// labels like "x1", "x12" and "A.x" are supported.
Word parse_word(std::string_view text, const std::vector<std::string>& labels);

std::string format_word(const Word& w, const std::vector<std::string>& labels);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// Parses "<x, y | x^4 = y^4 = (xy)^2 = 1, x^2 = y^2, x^y = x^-1>". A chain
// a = b = c contributes the relators a b^-1 and b c^-1.
Presentation parse_presentation(std::string_view text);

}  // namespace omsr

#endif  // OMSR_WORD_HPP_
