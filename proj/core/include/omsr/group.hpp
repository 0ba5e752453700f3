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

#ifndef OMSR_GROUP_HPP_
#define OMSR_GROUP_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omsr/element_set.hpp"
#include "omsr/word.hpp"

namespace omsr {

// A finite group given by its full multiplication table. Element 0 is always
// the identity. Immutable after construction.
class FiniteGroup {
 public:
  using Generators = std::vector<std::pair<std::string, Element>>;

  // `table[a * order + b]` is the product a*b. Throws std::invalid_argument
  // unless the table is a group with identity 0 generated by `generators`.
  FiniteGroup(std::string name, int order, std::vector<Element> table,
              Generators generators);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element pow(Element a, long k) const;
  const std::vector<Element>& table() const { return table_; }

  const Generators& generators() const { return generators_; }
  std::vector<std::string> generator_labels() const;
  Element generator(std::string_view label) const;
  Element generator(int position) const;
  bool has_generator(std::string_view label) const;

  Element eval(const Word& w) const;
  Element parse(std::string_view word) const;
  ElementSet parse_set(const std::vector<std::string>& words) const;
  ElementSet set_of(const std::vector<Element>& elements) const;

  const std::string& display_name(Element g) const { return display_[g]; }
  std::string format_set(const ElementSet& s) const;

  bool is_abelian() const;
  int exponent() const;

  FiniteGroup renamed(std::string name) const;
  FiniteGroup with_generator_labels(const std::vector<std::string>& labels) const;

 private:
  void assign_display_names();

  std::string name_;
  int order_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  Generators generators_;
  std::vector<std::string> display_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

FiniteGroup cyclic(int n);
FiniteGroup elementary_abelian_2(int n);
// Element (a, b) has index a * |B| + b. Labels become "A.<label>" and
// "B.<label>"; use with_generator_labels to pick plain names.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// Element h * b^e has index e * |H| + h; the involution is labelled "b".
FiniteGroup generalized_dihedral(const FiniteGroup& h);
FiniteGroup quaternion();
FiniteGroup central_product_d4_d4();

int element_order(const FiniteGroup& g, Element a);
ElementSet set_product(const FiniteGroup& g, const ElementSet& a, const ElementSet& b);
ElementSet set_inverse(const FiniteGroup& g, const ElementSet& a);
ElementSet left_translate(const FiniteGroup& g, Element x, const ElementSet& a);
ElementSet right_translate(const FiniteGroup& g, const ElementSet& a, Element x);

// Exhaustive associativity, identity and inverse check. Returns a description
// of the first violation, if any.
std::optional<std::string> verify_group_axioms(const FiniteGroup& g);

// Subgroup generated by `gens`, as a set.
ElementSet generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens);

}  // namespace omsr

#endif  // OMSR_GROUP_HPP_
