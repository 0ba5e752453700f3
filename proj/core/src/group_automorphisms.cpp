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

#include "omsr/group_automorphisms.hpp"

#include <algorithm>

namespace omsr {

std::vector<Element> irredundant_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  ElementSet h = generated_subgroup(g, gens);
  for (auto& [label, e] : g.generators()) {
    if (h.contains(e)) continue;
    gens.push_back(e);
    h = generated_subgroup(g, gens);
  }
  return gens;
}

namespace {

class AutBacktrack {
 public:
  explicit AutBacktrack(const FiniteGroup& g)
      : g_(g), gens_(irredundant_generators(g)), img_(gens_.size()) {
    for (Element a = 0; a < g.order(); ++a) orders_.push_back(element_order(g, a));
  }

  std::vector<Permutation> run() {
    std::vector<Element> phi(g_.order(), -1);
    phi[0] = 0;
    std::vector<Element> domain{0};
    go(0, phi, domain);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  void go(std::size_t k, const std::vector<Element>& phi, const std::vector<Element>& domain) {
    if (k == gens_.size()) {
      out_.push_back(Permutation(phi));
      return;
    }
    ElementSet image(g_.order());
    for (Element a : domain) image.insert(phi[a]);
    for (Element y = 0; y < g_.order(); ++y) {
      if (orders_[y] != orders_[gens_[k]] || image.contains(y)) continue;
      img_[k] = y;
      std::vector<Element> next = phi;
      std::vector<Element> dom = domain;
      if (close(k, next, dom)) go(k + 1, next, dom);
    }
  }

  // Extends phi from <gens_0..gens_{k-1}> to <gens_0..gens_k>, checking
  // phi(a g_j) = phi(a) phi(g_j) on every edge of the closure.
  bool close(std::size_t k, std::vector<Element>& phi, std::vector<Element>& dom) {
    std::size_t old = dom.size();
    if (phi[gens_[k]] >= 0) return false;  // gens_k would lie in the old domain
    for (std::size_t i = 0; i < dom.size(); ++i) {
      Element a = dom[i];
      for (std::size_t j = 0; j <= k; ++j) {
        if (i < old && j < k) continue;  // already checked in an earlier round
        Element b = g_.mul(a, gens_[j]);
        Element want = g_.mul(phi[a], img_[j]);
        if (phi[b] < 0) {
          phi[b] = want;
          dom.push_back(b);
        } else if (phi[b] != want) {
          return false;
        }
      }
    }
    ElementSet seen(g_.order());
    for (Element a : dom) {
      if (seen.contains(phi[a])) return false;
      seen.insert(phi[a]);
    }
    return true;
  }

  const FiniteGroup& g_;
  std::vector<Element> gens_;
  std::vector<Element> img_;
  std::vector<int> orders_;
  std::vector<Permutation> out_;
};

}  // namespace

std::vector<Permutation> group_automorphism_list(const FiniteGroup& g,
                                                 const GroupAutOptions& options) {
  if (g.order() > options.order_bound)
    throw BoundExceeded("group_automorphisms: |" + g.name() + "| = " +
                        std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(options.order_bound));
  return AutBacktrack(g).run();
}

PermGroup group_automorphisms(const FiniteGroup& g, const GroupAutOptions& options) {
  std::vector<Permutation> gens;
  PermGroup h(g.order());
  for (auto& a : group_automorphism_list(g, options)) {
    if (h.contains(a)) continue;
    gens.push_back(a);
    h = PermGroup(g.order(), gens);
  }
  return h;
}

}  // namespace omsr
