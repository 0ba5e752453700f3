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

#ifndef OMSR_ELEMENT_SET_HPP_
#define OMSR_ELEMENT_SET_HPP_

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace omsr {

// Element of a FiniteGroup, as a dense index 0..order-1.
using Element = int;

// Subset of the elements of a group of fixed order, stored as a bit set.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe);
  ElementSet(int universe, std::initializer_list<Element> elements);
  ElementSet(int universe, const std::vector<Element>& elements);

  static ElementSet full(int universe);
  // Low 64 bits only; universe must be at most 64.
  static ElementSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  bool contains(Element e) const;
  void insert(Element e);
  void erase(Element e);
  int size() const;
  bool empty() const;
  std::vector<Element> elements() const;
  std::uint64_t mask() const;

  ElementSet operator|(const ElementSet& o) const;
  ElementSet operator&(const ElementSet& o) const;
  ElementSet operator-(const ElementSet& o) const;
  bool intersects(const ElementSet& o) const;
  bool is_subset_of(const ElementSet& o) const;

  bool operator==(const ElementSet& o) const = default;
  // Orders by ascending element list (lexicographic on sorted members).
  bool lex_less(const ElementSet& o) const;

 private:
  void check(Element e) const;
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace omsr

#endif  // OMSR_ELEMENT_SET_HPP_
