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

#ifndef OMSR_CATALOG_HPP_
#define OMSR_CATALOG_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "omsr/group.hpp"

namespace omsr {

class UnknownGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GroupKind {
  kCyclic,
  kElemAbelian2,
  kAbelianProduct,
  kGenDihedral,
  kQuaternion,
  kPresentation,
  kCentralProduct,
};

struct CatalogEntry {
  std::string name;  // canonical
  GroupKind kind;
  GroupPtr group;
  // Exponent-of-2 rank for elementary abelian 2-groups (Z1 = Z2^0 too).
  int elem_abelian_rank = -1;
  // For GD(H): the catalog entry name of H.
  std::string base;
  bool exceptional = false;  // one of the 11 groups without an ORR
};

// Resolves names such as "Z1", "Z7", "Z2^4", "Z3^2", "Z4xZ2^2", "GD(Z3^2)",
// "Q8", "H1", "H2", "H3", "D4oD4", plus entries registered from catalog files.
// Results are cached and shared. Throws UnknownGroup.
const CatalogEntry& lookup(std::string_view name);
GroupPtr resolve_group(std::string_view name);

// The standard catalog listing (names accepted by lookup).
std::vector<std::string> catalog_names();

// The exceptional groups of the ORR classification.
const std::vector<std::string>& exceptional_group_names();

// Presentations of H1, H2, H3 as accepted by parse_presentation.
std::string exceptional_presentation(std::string_view name);

// Registers groups from a catalog JSON document: either one object or an
// array of objects {name, kind, parameters, relators?}. Returns the names.
std::vector<std::string> register_catalog(const nlohmann::json& doc);
std::vector<std::string> load_catalog_file(const std::string& path);

}  // namespace omsr

#endif  // OMSR_CATALOG_HPP_
