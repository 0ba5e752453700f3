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

#ifndef OMSR_SEARCH_HPP_
#define OMSR_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omsr/mcayley.hpp"
#include "omsr/perm_group.hpp"

namespace omsr {

inline constexpr const char* kEngineVersion = "omsr-engine/1";

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Reductions {
  // Aut(G) acting on all cells at once, together with the translations
  // T_ij -> c_j T_ij c_i^-1, applied to the first non-empty cell.
  bool group_automorphism_orbits = true;
  // Simultaneous relabelling of the parts; only lex-minimal size matrices.
  bool part_symmetry = true;
};

struct SearchSpace {
  GroupPtr group;
  int m = 1;
  // Inclusive valency range; defaults to 0 .. floor((m|G| - 1) / 2).
  std::optional<int> min_valency;
  std::optional<int> max_valency;
  Reductions reductions;

  int valency_lo() const;
  int valency_hi() const;
  std::string describe() const;
};

struct SearchLimits {
  std::uint64_t max_candidates = 0;  // 0 = unlimited
  double max_seconds = 0;            // 0 = unlimited
  int workers = 1;
};

enum class CertificateKind { kOmsrWitness, kNonexistence, kOrrWitness, kOrrNonexistence };
std::string to_string(CertificateKind k);
CertificateKind certificate_kind_from_string(const std::string& s);

struct Certificate {
  CertificateKind kind = CertificateKind::kNonexistence;
  std::string group;
  int m = 1;
  std::optional<ConnectionSets> connection_sets;
  BigInt aut_order = 0;  // of the witness
  std::uint64_t candidates_examined = 0;
  std::vector<std::string> reductions_used;
  std::string space;
  std::string engine_version = kEngineVersion;
  double wall_time = 0;

  bool is_witness() const {
    return kind == CertificateKind::kOmsrWitness || kind == CertificateKind::kOrrWitness;
  }
};

// Full traversal unless a witness turns up; a witness falsifies nonexistence.
Certificate prove_nonexistence(const SearchSpace& space, const SearchLimits& limits = {});

// First witness in enumeration order (valency ascending), or nonexistence.
Certificate find_omsr(const GroupPtr& g, int m, int valency_cap, const SearchLimits& limits = {},
                      const Reductions& reductions = {});

// Smallest |R| with Cay(G, R) an ORR, or orr_nonexistence.
Certificate find_orr(const GroupPtr& g, const SearchLimits& limits = {},
                     const Reductions& reductions = {});

// Closed-form count of the reduction-free space for Z2^k with m = 2 over the
// valency range [lo, hi]: sum_d C(2^k, d) C(2^k - d, d).
std::uint64_t z2_haar_space_size(int k, int lo, int hi);

// Pieces of the enumerator, exposed for tests.
using SizeMatrix = std::vector<int>;  // row-major m x m
std::vector<SizeMatrix> size_matrices(const FiniteGroup& g, int m, int d, bool part_symmetry);
bool is_lex_min_under_relabelling(const SizeMatrix& s, int m);
// Representatives of the k-subsets of G under the first-cell action; `diagonal`
// restricts to conjugation-compatible maps and to admissible diagonal sets.
std::vector<ElementSet> first_cell_representatives(const FiniteGroup& g, int k, bool diagonal,
                                                   bool use_reduction);
// Applies T_ij -> c_j T_ij c_i^-1 for all cells.
ConnectionSets translate_parts(const ConnectionSets& t, const std::vector<Element>& c);
ConnectionSets apply_group_automorphism(const ConnectionSets& t, const Permutation& phi);
ConnectionSets relabel_parts(const ConnectionSets& t, const std::vector<int>& perm);

}  // namespace omsr

#endif  // OMSR_SEARCH_HPP_
