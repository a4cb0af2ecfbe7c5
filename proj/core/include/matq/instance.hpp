// Copyright 2026 The Authors.
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

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "matq/families.hpp"
#include "matq/oracle.hpp"

namespace matq {

enum class Family { kMinimal, kRemovedBase, kUniform, kGraphic, kExplicitBases };

// Document name of a family ("minimal", "removed_base", ...).
std::string family_name(Family family);
Family family_from_name(const std::string& name);

// A matroid instance as data, mirroring the on-disk document. All element
// and vertex indices are 0-based here; the text form uses 1-based labels
// e1..en (and vertices 1..V) as the document convention.
struct InstanceSpec {
  Family family = Family::kMinimal;
  std::size_t n = 0;  // ground-set size; for graphic, the number of edges
  std::size_t r = 0;  // rank parameter (minimal, removed_base, uniform)
  std::vector<ElementId> removed;             // removed_base only
  std::size_t vertex_count = 0;               // graphic only
  std::vector<GraphicMatroid::Edge> edges;    // graphic only
  std::vector<std::vector<ElementId>> bases;  // explicit_bases only
};

// Parses a JSON instance document, e.g. {"family":"minimal","n":8,"r":4}.
// Malformed text, unknown families, or out-of-range indices raise
// std::invalid_argument with context; semantic validity of the parameters
// themselves (base membership, exchange axiom) is enforced by make_oracle.
InstanceSpec parse_instance_text(const std::string& text);
InstanceSpec parse_instance_file(const std::string& path);

// One-line JSON document with 1-based indices; parses back to an equal spec.
std::string instance_to_text(const InstanceSpec& spec);

// Constructs the family oracle, running each family's own validation.
std::unique_ptr<MatroidOracle> make_oracle(const InstanceSpec& spec);

// Rank metadata for reports, computed from the parameters without oracle queries.
std::size_t instance_rank(const InstanceSpec& spec);

}  // namespace matq
