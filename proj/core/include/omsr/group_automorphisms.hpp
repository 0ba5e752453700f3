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

#ifndef OMSR_GROUP_AUTOMORPHISMS_HPP_
#define OMSR_GROUP_AUTOMORPHISMS_HPP_

#include <stdexcept>
#include <vector>

#include "omsr/group.hpp"
#include "omsr/perm_group.hpp"

namespace omsr {

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupAutOptions {
  int order_bound = 32;
};

// All automorphisms of G as permutations of element indices, sorted. Found by
// backtracking over generator images with homomorphism checks on the
// subgroup closed so far. Throws BoundExceeded if |G| > order_bound.
std::vector<Permutation> group_automorphism_list(const FiniteGroup& g,
                                                 const GroupAutOptions& options = {});

PermGroup group_automorphisms(const FiniteGroup& g, const GroupAutOptions& options = {});

// A generating set of G in which no element lies in the subgroup generated
// by the earlier ones, chosen greedily from the labelled generators.
std::vector<Element> irredundant_generators(const FiniteGroup& g);

}  // namespace omsr

#endif  // OMSR_GROUP_AUTOMORPHISMS_HPP_
