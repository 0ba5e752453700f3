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

#ifndef OMSR_PERM_GROUP_HPP_
#define OMSR_PERM_GROUP_HPP_

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "omsr/permutation.hpp"

namespace omsr {

using BigInt = boost::multiprecision::cpp_int;

// Permutation group with a stabilizer chain built by deterministic
// Schreier-Sims. Immutable after construction.
class PermGroup {
 public:
  explicit PermGroup(int degree, std::vector<Permutation> generators = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::vector<int> base() const;

  BigInt order() const;
  bool contains(const Permutation& p) const;

  std::vector<int> orbit(int v) const;
  // Orbits sorted by least element, each sorted.
  std::vector<std::vector<int>> orbits() const;
  bool is_semiregular() const;
  BigInt point_stabilizer_order(int v) const;

  // All elements, sorted; throws std::length_error beyond `limit`.
  std::vector<Permutation> elements(std::size_t limit = 100000) const;

 private:
  struct Level {
    int point;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<int> where;  // point -> index into transversal, or -1
    std::vector<Permutation> transversal;
  };

  void extend(std::size_t i, const Permutation& g);
  // Returns the first level at which h fails, with the residue in h;
  // levels_.size() if h sifts through (h is then the final residue).
  std::size_t sift(std::size_t i, Permutation& h) const;

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

}  // namespace omsr

#endif  // OMSR_PERM_GROUP_HPP_
