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

#include "matq/instance.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "matq/union_find.hpp"

namespace matq {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("instance document: " + message);
}

std::size_t require_size(const json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) fail(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

// 1-based document index -> 0-based id, bounds-checked.
ElementId to_element(const json& v, std::size_t n, const char* what) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() < 1 || v.get<std::uint64_t>() > n) {
    fail(std::string(what) + " indices must be integers in 1.." + std::to_string(n));
  }
  return static_cast<ElementId>(v.get<std::uint64_t>() - 1);
}

std::vector<ElementId> to_elements(const json& arr, std::size_t n, const char* what) {
  if (!arr.is_array()) fail(std::string(what) + " must be an array");
  std::vector<ElementId> out;
  out.reserve(arr.size());
  for (const json& v : arr) out.push_back(to_element(v, n, what));
  return out;
}

SubsetMask to_mask(const std::vector<ElementId>& elements, std::size_t n) {
  SubsetMask mask(n);
  for (ElementId e : elements) mask.set(e);
  return mask;
}

json elements_to_json(const std::vector<ElementId>& elements) {
  json arr = json::array();
  for (ElementId e : elements) arr.push_back(e + 1);
  return arr;
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::kMinimal: return "minimal";
    case Family::kRemovedBase: return "removed_base";
    case Family::kUniform: return "uniform";
    case Family::kGraphic: return "graphic";
    case Family::kExplicitBases: return "explicit_bases";
  }
  throw std::invalid_argument("unknown family enumerator");
}

Family family_from_name(const std::string& name) {
  if (name == "minimal") return Family::kMinimal;
  if (name == "removed_base") return Family::kRemovedBase;
  if (name == "uniform") return Family::kUniform;
  if (name == "graphic") return Family::kGraphic;
  if (name == "explicit_bases") return Family::kExplicitBases;
  throw std::invalid_argument("unknown family \"" + name + "\"");
}

InstanceSpec parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  if (!j.contains("family") || !j.at("family").is_string()) {
    fail("missing string field \"family\"");
  }

  InstanceSpec spec;
  spec.family = family_from_name(j.at("family").get<std::string>());
  switch (spec.family) {
    case Family::kMinimal:
    case Family::kUniform:
      spec.n = require_size(j, "n");
      spec.r = require_size(j, "r");
      break;
    case Family::kRemovedBase:
      spec.n = require_size(j, "n");
      spec.r = require_size(j, "r");
      if (!j.contains("removed")) fail("removed_base requires field \"removed\"");
      spec.removed = to_elements(j.at("removed"), spec.n, "removed");
      break;
    case Family::kGraphic: {
      spec.vertex_count = require_size(j, "vertices");
      if (!j.contains("edges") || !j.at("edges").is_array()) {
        fail("graphic requires an array field \"edges\"");
      }
      for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) fail("each edge must be a [tail, head] pair");
        spec.edges.push_back(GraphicMatroid::Edge{
            to_element(e[0], spec.vertex_count, "edge endpoint"),
            to_element(e[1], spec.vertex_count, "edge endpoint")});
      }
      spec.n = spec.edges.size();
      if (j.contains("n") && require_size(j, "n") != spec.n) {
        fail("field \"n\" disagrees with the number of edges");
      }
      break;
    }
    case Family::kExplicitBases: {
      spec.n = require_size(j, "n");
      if (!j.contains("bases") || !j.at("bases").is_array()) {
        fail("explicit_bases requires an array field \"bases\"");
      }
      for (const json& b : j.at("bases")) {
        spec.bases.push_back(to_elements(b, spec.n, "bases"));
      }
      break;
    }
  }
  return spec;
}

InstanceSpec parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance_text(buffer.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string instance_to_text(const InstanceSpec& spec) {
  json j;
  j["family"] = family_name(spec.family);
  switch (spec.family) {
    case Family::kMinimal:
    case Family::kUniform:
      j["n"] = spec.n;
      j["r"] = spec.r;
      break;
    case Family::kRemovedBase:
      j["n"] = spec.n;
      j["r"] = spec.r;
      j["removed"] = elements_to_json(spec.removed);
      break;
    case Family::kGraphic: {
      j["vertices"] = spec.vertex_count;
      json edges = json::array();
      for (const auto& e : spec.edges) {
        edges.push_back(json::array({e.tail + 1, e.head + 1}));
      }
      j["edges"] = std::move(edges);
      break;
    }
    case Family::kExplicitBases: {
      j["n"] = spec.n;
      json bases = json::array();
      for (const auto& b : spec.bases) bases.push_back(elements_to_json(b));
      j["bases"] = std::move(bases);
      break;
    }
  }
  return j.dump();
}

std::unique_ptr<MatroidOracle> make_oracle(const InstanceSpec& spec) {
  switch (spec.family) {
    case Family::kMinimal:
      return std::make_unique<MinimalMatroid>(spec.n, spec.r);
    case Family::kRemovedBase:
      return std::make_unique<RemovedBaseMatroid>(spec.n, spec.r,
                                                  to_mask(spec.removed, spec.n));
    case Family::kUniform:
      return std::make_unique<UniformMatroid>(spec.n, spec.r);
    case Family::kGraphic:
      return std::make_unique<GraphicMatroid>(spec.vertex_count, spec.edges);
    case Family::kExplicitBases: {
      std::vector<SubsetMask> bases;
      bases.reserve(spec.bases.size());
      for (const auto& b : spec.bases) bases.push_back(to_mask(b, spec.n));
      return std::make_unique<ExplicitBasesMatroid>(spec.n, std::move(bases));
    }
  }
  throw std::invalid_argument("unknown family enumerator");
}

std::size_t instance_rank(const InstanceSpec& spec) {
  switch (spec.family) {
    case Family::kMinimal:
    case Family::kRemovedBase:
    case Family::kUniform:
      return spec.r;
    case Family::kGraphic: {
      UnionFind forest(spec.vertex_count);
      std::size_t rank = 0;
      for (const auto& e : spec.edges) {
        if (forest.unite(e.tail, e.head)) ++rank;
      }
      return rank;
    }
    case Family::kExplicitBases:
      return spec.bases.empty() ? 0 : spec.bases.front().size();
  }
  throw std::invalid_argument("unknown family enumerator");
}

}  // namespace matq
