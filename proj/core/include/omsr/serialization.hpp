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

#ifndef OMSR_SERIALIZATION_HPP_
#define OMSR_SERIALIZATION_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "omsr/constructions.hpp"
#include "omsr/search.hpp"
#include "omsr/verdict.hpp"

namespace omsr {

// {"group": name, "m": m, "cells": [[[word, ...], ...], ...], "notes": [...]}
// with elements written as display names. The group must be resolvable by
// name when reading back.
nlohmann::json to_json(const ConnectionSets& t);
ConnectionSets connection_sets_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Digraph& g);
Digraph digraph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OmsrVerdict& v);

// wall_time is left out unless requested, so equal inputs give equal bytes.
nlohmann::json to_json(const Certificate& c, bool with_wall_time = false);
Certificate certificate_from_json(const nlohmann::json& j);

// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& s);
// "<dir>/<kind>-<group>-m<m>-<hash>.json"; the hash covers group, m, the
// space description, the reductions and the engine version.
std::string certificate_path(const std::string& dir, const Certificate& c);

// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace omsr

#endif  // OMSR_SERIALIZATION_HPP_
