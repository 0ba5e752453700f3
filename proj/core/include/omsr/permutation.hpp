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

#ifndef OMSR_PERMUTATION_HPP_
#define OMSR_PERMUTATION_HPP_

#include <string>
#include <vector>

namespace omsr {

class Digraph;

// A bijection on 0..n-1, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);  // throws unless bijective

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  // Fixed points, in ascending order.
  std::vector<int> fixed_points() const;

  bool operator==(const Permutation& o) const = default;
  auto operator<=>(const Permutation& o) const = default;

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

// Left-to-right composition: (a * b)[x] = b[a[x]].
Permutation operator*(const Permutation& a, const Permutation& b);

// True iff p maps arcs to arcs (hence non-arcs to non-arcs).
bool is_automorphism(const Digraph& g, const Permutation& p);

}  // namespace omsr

#endif  // OMSR_PERMUTATION_HPP_
