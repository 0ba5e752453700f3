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

#ifndef OMSR_CLAIMS_HPP_
#define OMSR_CLAIMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "omsr/mcayley.hpp"

namespace omsr {

// Arc counts |A([Gamma^+(1_i)])| of the out-neighbourhood of 1_i, per part,
// against the values predicted for the construction.
struct ClaimReport {
  std::string claim;
  std::string group;
  int m = 0;
  long k = 0;  // |A([Sigma^+(1)])| for the ORR Sigma = Cay(H, R)
  std::string branch;
  std::vector<long> expected;
  std::vector<long> measured;

  bool matches() const { return expected == measured; }
  std::string summary() const;
};

// |{(x, y, z) in R^3 : xy = z}|, by direct enumeration.
long triple_count(const FiniteGroup& g, const ElementSet& r);

// |A([Gamma^+(1_i)])| for every part i of the built digraph.
std::vector<long> out_neighbourhood_arc_counts(const MCayleyDigraph& d);

// m >= 3.
ClaimReport claim_orr_lift(const GroupPtr& g, const ElementSet& r, Element a, int m);

// m >= 2; m = 2 is the bi-Cayley case, which branches on whether a^2 is in R.
ClaimReport claim_gendihedral(const std::string& h, const ElementSet& r_h, Element a, int m);

}  // namespace omsr

#endif  // OMSR_CLAIMS_HPP_
