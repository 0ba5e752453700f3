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

#ifndef OMSR_VERDICT_HPP_
#define OMSR_VERDICT_HPP_

#include <optional>
#include <utility>

#include "omsr/automorphisms.hpp"
#include "omsr/mcayley.hpp"

namespace omsr {

struct OmsrVerdict {
  bool is_omsr = false;
  bool oriented = false;
  bool regular = false;
  std::optional<int> valency;
  BigInt aut_order = 0;     // exact unless `aut_order_is_bound`
  bool aut_order_is_bound = false;
  std::optional<Permutation> witness;  // automorphism outside R(G)
  int orbit_count = 0;
  BigInt stabilizer_order = 0;  // |Aut_{1_0}|, exact runs only
};

struct CheckOptions {
  // Stop as soon as |Aut| > |G| is established. The verdict stays exact;
  // aut_order becomes a lower bound and orbit data is left empty.
  bool early_exit = false;
  int brute_force_max_n = 6;
};

// Decides whether Cay(G, T) is an OmSR of G = T.group(): oriented, regular,
// and Aut = R(G) (equivalently |Aut| = |G|, since R(G) <= Aut).
OmsrVerdict check_omsr(const ConnectionSets& t, const CheckOptions& options = {});

// Returns (sigma in Aut(Cay(G,S)) and Aut(Cay(G,T)),
//          sigma' in Aut(BiCay(G, {}, {}, S, T))), where sigma' acts as
// sigma on both parts.
std::pair<bool, bool> haar_equivalence(const GroupPtr& g, const ElementSet& s,
                                       const ElementSet& t, const Permutation& sigma);

}  // namespace omsr

#endif  // OMSR_VERDICT_HPP_
