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

#include "omsr/element_set.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace omsr {

ElementSet::ElementSet(int universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {
  if (universe < 0) throw std::invalid_argument("negative universe");
}

ElementSet::ElementSet(int universe, std::initializer_list<Element> elements)
    : ElementSet(universe) {
  for (Element e : elements) insert(e);
}

ElementSet::ElementSet(int universe, const std::vector<Element>& elements)
    : ElementSet(universe) {
  for (Element e : elements) insert(e);
}

ElementSet ElementSet::full(int universe) {
  ElementSet s(universe);
  for (Element e = 0; e < universe; ++e) s.insert(e);
  return s;
}

ElementSet ElementSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("from_mask: universe > 64");
  ElementSet s(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

void ElementSet::check(Element e) const {
  if (e < 0 || e >= universe_) {
    throw std::out_of_range("element " + std::to_string(e) +
                            " outside universe of size " +
                            std::to_string(universe_));
  }
}

bool ElementSet::contains(Element e) const {
  if (e < 0 || e >= universe_) return false;
  return (words_[e >> 6] >> (e & 63)) & 1;
}

void ElementSet::insert(Element e) {
  check(e);
  words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void ElementSet::erase(Element e) {
  check(e);
  words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

int ElementSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool ElementSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<Element>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t ElementSet::mask() const {
  if (universe_ > 64) throw std::logic_error("mask: universe > 64");
  return words_.empty() ? 0 : words_[0];
}

static void same_universe(const ElementSet& a, const ElementSet& b) {
  if (a.universe() != b.universe())
    throw std::invalid_argument("element sets over different groups");
}

ElementSet ElementSet::operator|(const ElementSet& o) const {
  same_universe(*this, o);
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
  same_universe(*this, o);
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

ElementSet ElementSet::operator-(const ElementSet& o) const {
  same_universe(*this, o);
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

bool ElementSet::intersects(const ElementSet& o) const {
  same_universe(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  same_universe(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool ElementSet::lex_less(const ElementSet& o) const {
  auto a = elements();
  auto b = o.elements();
  return a < b;
}

}  // namespace omsr
