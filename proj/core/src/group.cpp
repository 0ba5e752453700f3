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

#include "omsr/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace omsr {

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<Element> table,
                         Generators generators)
    : name_(std::move(name)),
      order_(order),
      table_(std::move(table)),
      generators_(std::move(generators)) {
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("group " + name_ + ": " + why);
  };
  if (order_ < 1) bad("order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * order_) bad("table size mismatch");
  for (Element e : table_)
    if (e < 0 || e >= order_) bad("table entry out of range");
  for (auto& [label, e] : generators_)
    if (e < 0 || e >= order_) bad("generator " + label + " out of range");
  for (Element a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) bad("element 0 is not the identity");
  }
  std::vector<char> seen(order_);
  for (Element a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < order_; ++b) {
      if (seen[mul(a, b)]++) bad("row is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < order_; ++b) {
      if (seen[mul(b, a)]++) bad("column is not a permutation");
    }
  }
  // Light's test: associativity against a generating set suffices.
  for (auto& [label, g] : generators_) {
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        if (mul(mul(a, b), g) != mul(a, mul(b, g))) bad("not associative");
  }
  std::vector<Element> gens;
  for (auto& p : generators_) gens.push_back(p.second);
  if (generated_subgroup(*this, gens).size() != order_) bad("generators do not generate");
  inv_.assign(order_, -1);
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
  assign_display_names();
}

void FiniteGroup::assign_display_names() {
  const int k = static_cast<int>(generators_.size());
  std::vector<Word> words(order_);
  std::vector<char> done(order_, 0);
  std::deque<Element> queue{0};
  done[0] = 1;
  while (!queue.empty()) {
    Element a = queue.front();
    queue.pop_front();
    for (int i = 0; i < 2 * k; ++i) {
      int g = i / 2;
      bool inverse = i % 2;
      Element s = inverse ? inv_[generators_[g].second] : generators_[g].second;
      Element b = mul(a, s);
      if (done[b]) continue;
      done[b] = 1;
      words[b] = words[a];
      words[b].push_back(inverse ? -(g + 1) : g + 1);
      queue.push_back(b);
    }
  }
  auto labels = generator_labels();
  display_.resize(order_);
  for (Element a = 0; a < order_; ++a) display_[a] = format_word(words[a], labels);
}

Element FiniteGroup::pow(Element a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element r = 0;
  Element base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::vector<std::string> FiniteGroup::generator_labels() const {
  std::vector<std::string> labels;
  for (auto& p : generators_) labels.push_back(p.first);
  return labels;
}

Element FiniteGroup::generator(std::string_view label) const {
  for (auto& [l, e] : generators_)
    if (l == label) return e;
  throw std::invalid_argument("group " + name_ + " has no generator " + std::string(label));
}

Element FiniteGroup::generator(int position) const {
  if (position < 0 || position >= static_cast<int>(generators_.size()))
    throw std::out_of_range("group " + name_ + ": generator position " +
                            std::to_string(position));
  return generators_[position].second;
}

bool FiniteGroup::has_generator(std::string_view label) const {
  for (auto& p : generators_)
    if (p.first == label) return true;
  return false;
}

Element FiniteGroup::eval(const Word& w) const {
  Element r = 0;
  for (int l : w) {
    Element g = generators_.at((l > 0 ? l : -l) - 1).second;
    r = mul(r, l > 0 ? g : inv(g));
  }
  return r;
}

Element FiniteGroup::parse(std::string_view word) const {
  return eval(parse_word(word, generator_labels()));
}

ElementSet FiniteGroup::parse_set(const std::vector<std::string>& words) const {
  ElementSet s(order_);
  for (auto& w : words) s.insert(parse(w));
  return s;
}

ElementSet FiniteGroup::set_of(const std::vector<Element>& elements) const {
  return ElementSet(order_, elements);
}

std::string FiniteGroup::format_set(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  for (Element e : s.elements()) {
    if (!first) out += ", ";
    out += display_[e];
    first = false;
  }
  return out + "}";
}

bool FiniteGroup::is_abelian() const {
  for (auto& [la, a] : generators_)
    for (auto& [lb, b] : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (Element a = 0; a < order_; ++a) e = std::lcm(e, element_order(*this, a));
  return e;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

FiniteGroup FiniteGroup::with_generator_labels(const std::vector<std::string>& labels) const {
  if (labels.size() != generators_.size())
    throw std::invalid_argument("with_generator_labels: label count mismatch");
  FiniteGroup g = *this;
  for (std::size_t i = 0; i < labels.size(); ++i) g.generators_[i].first = labels[i];
  g.assign_display_names();
  return g;
}

FiniteGroup cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be positive");
  std::vector<Element> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  FiniteGroup::Generators gens;
  if (n > 1) gens.push_back({"x", 1});
  return FiniteGroup("Z" + std::to_string(n), n, std::move(t), std::move(gens));
}

FiniteGroup elementary_abelian_2(int n) {
  if (n < 0 || n > 12) throw std::invalid_argument("elementary_abelian_2: n out of range");
  const int order = 1 << n;
  std::vector<Element> t(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) t[a * order + b] = a ^ b;
  FiniteGroup::Generators gens;
  for (int i = 0; i < n; ++i) gens.push_back({"x" + std::to_string(i + 1), 1 << i});
  std::string name = n == 0 ? "Z1" : n == 1 ? "Z2" : "Z2^" + std::to_string(n);
  return FiniteGroup(name, order, std::move(t), std::move(gens));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  FiniteGroup::Generators gens;
  for (auto& [l, e] : a.generators()) gens.push_back({"A." + l, e * nb});
  for (auto& [l, e] : b.generators()) gens.push_back({"B." + l, e});
  return FiniteGroup(a.name() + "x" + b.name(), n, std::move(t), std::move(gens));
}

FiniteGroup generalized_dihedral(const FiniteGroup& h) {
  if (!h.is_abelian())
    throw std::invalid_argument("generalized_dihedral: " + h.name() + " is not abelian");
  const int nh = h.order(), n = 2 * nh;
  std::vector<Element> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int e1 = x / nh, h1 = x % nh, e2 = y / nh, h2 = y % nh;
      Element hh = h.mul(h1, e1 ? h.inv(h2) : h2);
      t[x * n + y] = ((e1 + e2) % 2) * nh + hh;
    }
  }
  FiniteGroup::Generators gens = h.generators();
  gens.push_back({"b", nh});
  return FiniteGroup("GD(" + h.name() + ")", n, std::move(t), std::move(gens));
}

FiniteGroup quaternion() {
  // Units ±1, ±i, ±j, ±k; index 2*u + s with u in {1,i,j,k}, s the sign bit.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Element> t(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int s = (a % 2) ^ (b % 2) ^ sign[ua][ub];
      t[a * 8 + b] = 2 * unit[ua][ub] + s;
    }
  }
  return FiniteGroup("Q8", 8, std::move(t), {{"x", 2}, {"y", 4}});
}

FiniteGroup central_product_d4_d4() {
  FiniteGroup d1 = generalized_dihedral(cyclic(4)).with_generator_labels({"x", "y"});
  FiniteGroup d2 = generalized_dihedral(cyclic(4)).with_generator_labels({"z", "w"});
  FiniteGroup p = direct_product(d1, d2).with_generator_labels({"x", "y", "z", "w"});
  const Element c = p.mul(p.pow(p.generator("x"), 2), p.pow(p.generator("z"), 2));
  // Quotient by the central subgroup {1, c}; cosets {g, gc} are represented
  // by their smaller index.
  std::vector<int> rep(p.order(), -1);
  std::vector<Element> reps;
  for (Element g = 0; g < p.order(); ++g) {
    Element g2 = p.mul(g, c);
    if (g < g2) {
      rep[g] = rep[g2] = static_cast<int>(reps.size());
      reps.push_back(g);
    }
  }
  const int n = static_cast<int>(reps.size());
  std::vector<Element> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = rep[p.mul(reps[a], reps[b])];
  FiniteGroup::Generators gens;
  for (auto& [l, e] : p.generators()) gens.push_back({l, rep[e]});
  return FiniteGroup("D4oD4", n, std::move(t), std::move(gens));
}

int element_order(const FiniteGroup& g, Element a) {
  int k = 1;
  Element x = a;
  while (x != g.identity()) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

ElementSet set_product(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  ElementSet r(g.order());
  auto bs = b.elements();
  for (Element x : a.elements())
    for (Element y : bs) r.insert(g.mul(x, y));
  return r;
}

ElementSet set_inverse(const FiniteGroup& g, const ElementSet& a) {
  ElementSet r(g.order());
  for (Element x : a.elements()) r.insert(g.inv(x));
  return r;
}

ElementSet left_translate(const FiniteGroup& g, Element x, const ElementSet& a) {
  ElementSet r(g.order());
  for (Element y : a.elements()) r.insert(g.mul(x, y));
  return r;
}

ElementSet right_translate(const FiniteGroup& g, const ElementSet& a, Element x) {
  ElementSet r(g.order());
  for (Element y : a.elements()) r.insert(g.mul(y, x));
  return r;
}

std::optional<std::string> verify_group_axioms(const FiniteGroup& g) {
  const int n = g.order();
  for (Element a = 0; a < n; ++a) {
    if (g.mul(a, 0) != a || g.mul(0, a) != a) return "identity fails at " + std::to_string(a);
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0)
      return "inverse fails at " + std::to_string(a);
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                 "," + std::to_string(c) + ")";
  }
  return std::nullopt;
}

ElementSet generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  ElementSet s(g.order());
  std::vector<Element> stack{0};
  s.insert(0);
  while (!stack.empty()) {
    Element a = stack.back();
    stack.pop_back();
    for (Element x : gens) {
      Element b = g.mul(a, x);
      if (!s.contains(b)) {
        s.insert(b);
        stack.push_back(b);
      }
    }
  }
  return s;
}

}  // namespace omsr
