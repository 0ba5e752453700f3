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

#ifndef OMSR_DISPATCH_HPP_
#define OMSR_DISPATCH_HPP_

#include <optional>
#include <string>

#include "omsr/constructions.hpp"

namespace omsr {

enum class DispatchVerdict { kConstruction, kNoOmsrByTheorem, kOutOfCatalog };
std::string to_string(DispatchVerdict v);

struct DispatchResult {
  DispatchVerdict verdict = DispatchVerdict::kOutOfCatalog;
  int branch = 0;  // 1..4 of the classification, 0 when out of catalog
  std::optional<ConstructionId> construction;
  std::string reason;
};

// Which branch of the classification applies to (G, m), and for branch 1 the
// construction that realises it.
DispatchResult theorem_dispatch(const std::string& group, int m);

// Whether G is generalized dihedral of order > 2 (Z2^n for n >= 2 included).
bool is_generalized_dihedral_over_2(const std::string& group);

}  // namespace omsr

#endif  // OMSR_DISPATCH_HPP_
