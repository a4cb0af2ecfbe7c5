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

// Instance documents: parsing, validation, 1-based boundary conversion, and
// round trips through the text form.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "matq/families.hpp"
#include "matq/instance.hpp"
#include "matq/matroid_ops.hpp"
#include "matq/subset_mask.hpp"

using namespace matq;

namespace {

bool specs_equal(const InstanceSpec& a, const InstanceSpec& b) {
  if (a.family != b.family || a.n != b.n || a.r != b.r) return false;
  if (a.removed != b.removed || a.vertex_count != b.vertex_count) return false;
  if (a.bases != b.bases || a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    if (a.edges[i].tail != b.edges[i].tail || a.edges[i].head != b.edges[i].head) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("family names map both ways") {
  for (Family f : {Family::kMinimal, Family::kRemovedBase, Family::kUniform, Family::kGraphic,
                   Family::kExplicitBases}) {
    CHECK(family_from_name(family_name(f)) == f);
  }
  CHECK_THROWS_AS((void)family_from_name("nonsense"), std::invalid_argument);
}

TEST_CASE("documents parse with 1-based indices converted at the boundary") {
  const InstanceSpec minimal = parse_instance_text(R"({"family":"minimal","n":8,"r":4})");
  CHECK(minimal.family == Family::kMinimal);
  CHECK(minimal.n == 8);
  CHECK(minimal.r == 4);

  const InstanceSpec removed =
      parse_instance_text(R"({"family":"removed_base","n":4,"r":2,"removed":[1,3]})");
  CHECK(removed.removed == std::vector<ElementId>{0, 2});

  const InstanceSpec graphic = parse_instance_text(
      R"({"family":"graphic","vertices":3,"edges":[[1,2],[2,3],[3,1]]})");
  CHECK(graphic.vertex_count == 3);
  CHECK(graphic.n == 3);
  REQUIRE(graphic.edges.size() == 3);
  CHECK(graphic.edges[0].tail == 0);
  CHECK(graphic.edges[0].head == 1);
  CHECK(graphic.edges[2].tail == 2);
  CHECK(graphic.edges[2].head == 0);

  const InstanceSpec explicit_bases =
      parse_instance_text(R"({"family":"explicit_bases","n":3,"bases":[[1,2],[1,3],[2,3]]})");
  REQUIRE(explicit_bases.bases.size() == 3);
  CHECK(explicit_bases.bases[0] == std::vector<ElementId>{0, 1});
}

TEST_CASE("every family round-trips through its text form") {
  std::vector<InstanceSpec> specs;
  {
    InstanceSpec s;
    s.family = Family::kMinimal;
    s.n = 9;
    s.r = 4;
    specs.push_back(s);
  }
  {
    InstanceSpec s;
    s.family = Family::kRemovedBase;
    s.n = 6;
    s.r = 3;
    s.removed = {0, 3, 5};
    specs.push_back(s);
  }
  {
    InstanceSpec s;
    s.family = Family::kUniform;
    s.n = 7;
    s.r = 0;
    specs.push_back(s);
  }
  {
    InstanceSpec s;
    s.family = Family::kGraphic;
    s.vertex_count = 4;
    s.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    s.n = 4;
    specs.push_back(s);
  }
  {
    InstanceSpec s;
    s.family = Family::kExplicitBases;
    s.n = 3;
    s.bases = {{0, 1}, {0, 2}, {1, 2}};
    specs.push_back(s);
  }
  for (const auto& spec : specs) {
    const std::string text = instance_to_text(spec);
    CHECK(text.find('\n') == std::string::npos);  // one-line documents
    CHECK(specs_equal(parse_instance_text(text), spec));
  }
}

TEST_CASE("serialized documents carry 1-based labels") {
  InstanceSpec s;
  s.family = Family::kRemovedBase;
  s.n = 4;
  s.r = 2;
  s.removed = {0, 1};
  const std::string text = instance_to_text(s);
  CHECK(text.find("[1,2]") != std::string::npos);

  InstanceSpec g;
  g.family = Family::kGraphic;
  g.vertex_count = 2;
  g.edges = {{0, 1}};
  g.n = 1;
  CHECK(instance_to_text(g).find("[1,2]") != std::string::npos);
}

TEST_CASE("malformed documents are rejected with context") {
  auto message_of = [](const std::string& text) {
    try {
      (void)parse_instance_text(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };

  CHECK(message_of("not json at all").find("instance document") != std::string::npos);
  CHECK(message_of("[1,2,3]").find("object") != std::string::npos);
  CHECK(message_of(R"({"n":4})").find("family") != std::string::npos);
  CHECK(message_of(R"({"family":"weird","n":4})").find("weird") != std::string::npos);
  CHECK(message_of(R"({"family":"minimal","r":2})").find("\"n\"") != std::string::npos);
  CHECK(message_of(R"({"family":"minimal","n":-4,"r":2})").find("non-negative") !=
        std::string::npos);
  CHECK(message_of(R"({"family":"removed_base","n":4,"r":2})").find("removed") !=
        std::string::npos);

  // Index bounds: 0 and n+1 are both outside the 1-based range.
  CHECK_THROWS_AS(
      (void)parse_instance_text(R"({"family":"removed_base","n":4,"r":2,"removed":[0,1]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)parse_instance_text(R"({"family":"removed_base","n":4,"r":2,"removed":[1,5]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)parse_instance_text(R"({"family":"graphic","vertices":2,"edges":[[1,3]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)parse_instance_text(R"({"family":"graphic","vertices":2,"edges":[[1]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)parse_instance_text(
          R"({"family":"graphic","vertices":3,"edges":[[1,2]],"n":5})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)parse_instance_text(R"({"family":"explicit_bases","n":2,"bases":[[1],[3]]})"),
      std::invalid_argument);
}

TEST_CASE("oracle construction enforces family semantics") {
  // {e3,e4} is not a base of the half-rank family on four elements.
  const InstanceSpec bad_removed =
      parse_instance_text(R"({"family":"removed_base","n":4,"r":2,"removed":[3,4]})");
  CHECK_THROWS_AS((void)make_oracle(bad_removed), std::invalid_argument);

  // Mixed-size base lists do not satisfy the exchange axiom.
  const InstanceSpec bad_bases =
      parse_instance_text(R"({"family":"explicit_bases","n":3,"bases":[[1],[2,3]]})");
  CHECK_THROWS_AS((void)make_oracle(bad_bases), std::invalid_argument);

  const InstanceSpec bad_uniform = parse_instance_text(R"({"family":"uniform","n":3,"r":5})");
  CHECK_THROWS_AS((void)make_oracle(bad_uniform), std::invalid_argument);

  const InstanceSpec good =
      parse_instance_text(R"({"family":"removed_base","n":4,"r":2,"removed":[1,2]})");
  const auto oracle = make_oracle(good);
  CHECK(oracle->ground_size() == 4);
  CHECK_FALSE(oracle->is_independent(SubsetMask::of(4, {0, 1})));
}

TEST_CASE("instance files parse and report their path on failure") {
  const std::string path = "test_io_instance.json";
  {
    std::ofstream out(path);
    out << R"({"family":"minimal","n":6,"r":3})";
  }
  const InstanceSpec spec = parse_instance_file(path);
  CHECK(spec.n == 6);
  std::remove(path.c_str());

  try {
    (void)parse_instance_file("definitely_missing_file.json");
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("definitely_missing_file.json") != std::string::npos);
  }

  const std::string bad_path = "test_io_bad_instance.json";
  {
    std::ofstream out(bad_path);
    out << "{{{";
  }
  try {
    (void)parse_instance_file(bad_path);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(bad_path) != std::string::npos);
  }
  std::remove(bad_path.c_str());
}

TEST_CASE("instance rank metadata needs no oracle queries") {
  InstanceSpec minimal;
  minimal.family = Family::kMinimal;
  minimal.n = 8;
  minimal.r = 3;
  CHECK(instance_rank(minimal) == 3);

  InstanceSpec graphic;
  graphic.family = Family::kGraphic;
  graphic.vertex_count = 3;
  graphic.edges = {{0, 1}, {1, 2}, {2, 0}};
  graphic.n = 3;
  CHECK(instance_rank(graphic) == 2);  // spanning tree of the triangle

  InstanceSpec disconnected_graph;
  disconnected_graph.family = Family::kGraphic;
  disconnected_graph.vertex_count = 4;
  disconnected_graph.edges = {{0, 1}, {2, 3}};
  disconnected_graph.n = 2;
  CHECK(instance_rank(disconnected_graph) == 2);

  InstanceSpec expl;
  expl.family = Family::kExplicitBases;
  expl.n = 3;
  expl.bases = {{0, 1}, {0, 2}};
  CHECK(instance_rank(expl) == 2);
}

TEST_CASE("parsed instances behave like their directly built counterparts") {
  const InstanceSpec spec = parse_instance_text(
      R"({"family":"removed_base","n":6,"r":3,"removed":[1,2,3]})");
  const auto parsed = make_oracle(spec);
  const RemovedBaseMatroid direct(6, 3, SubsetMask::of(6, {0, 1, 2}));
  for (std::uint64_t v = 0; v < 64; ++v) {
    const SubsetMask s = SubsetMask::from_value(6, v);
    CHECK(parsed->is_independent(s) == direct.is_independent(s));
  }
}
