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

#ifndef OMSR_COSET_ENUMERATION_HPP_
#define OMSR_COSET_ENUMERATION_HPP_

#include <stdexcept>
#include <string>

#include "omsr/group.hpp"
#include "omsr/word.hpp"

namespace omsr {

class CosetTableOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CosetEnumerationOptions {
  // Maximum number of live cosets, as a multiple of order_bound.
  int capacity_factor = 4;
};

// Enumerates the cosets of the trivial subgroup of the presented group and
// returns its multiplication table. Throws CosetTableOverflow when the table
// outgrows capacity_factor * order_bound, or when the finished group is
// larger than order_bound.
FiniteGroup coset_enumerate(const Presentation& p, int order_bound, std::string name = "",
                            const CosetEnumerationOptions& options = {});

}  // namespace omsr

#endif  // OMSR_COSET_ENUMERATION_HPP_
