/* Copyright 2026 The dmc-workbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Instance bundles: a category with a display class and optional Id and Π
// data, the line-oriented text format, and the built-in generators.

#ifndef DMC_INSTANCES_HPP
#define DMC_INSTANCES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmc/fincat.hpp"
#include "dmc/id.hpp"
#include "dmc/morclass.hpp"

namespace dmc {

struct PiExpectation {
  MorRef f;
  MorRef g;
  MorRef pi;
};

struct InstanceBundle {
  FinCat cat;
  MorClass d;
  std::optional<IdAssignment> ida;
  std::optional<FunctorialIdAssignment> fida;
  std::optional<std::vector<PiExpectation>> pi_expected;
  std::vector<std::string> notes;  // "# note:" lines

  const std::string& name() const { return cat.name(); }
  // The Id-structure, from fida when present.
  const IdAssignment* id_structure() const;
};

struct ParseOptions {
  Limits limits;
  // Reject tables violating totality, unit or associativity laws.
  bool check_laws = true;
};

// Throws ParseError (with line and column) on malformed or unresolvable
// input and ModelError on law violations when check_laws is set.
InstanceBundle parse_fincat(std::string_view text, const ParseOptions& opts = {});
// Sections in fixed order, lines sorted within each section.
std::string emit_fincat(const InstanceBundle& b);
bool structurally_equal(const InstanceBundle& a, const InstanceBundle& b);

InstanceBundle load_bundle(const std::string& path, const ParseOptions& opts = {});
void save_bundle(const std::string& path, const InstanceBundle& b);

// A finite preorder given by element names and its order relation.
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> top() const;
};

Poset chain_poset(std::size_t n);
Poset boolean_poset(std::size_t atoms);
Poset m3_poset();
Poset n5_poset();
// "chain:N", "boolean:N", "m3", "n5", or "rel:a<b,b<c,..." (reflexive and
// transitive closure taken). Throws ParseError on bad specs.
Poset poset_from_spec(std::string_view spec);

// Poset category with D = all, the trivial Id-structure and, when every
// residual exists, the expected Π table. Throws PreconditionError for
// non-lattices.
InstanceBundle gen_heyting(const Poset& p, const std::string& name);

// arrow | idempotent | retract | iso | cospan
FinCat gen_walking(std::string_view shape);

// Names used by gen_heyting: objects are the element names, morphisms
// "le_<a>_<b>" and identities "id_<a>".
std::string heyting_morphism_name(const Poset& p, std::size_t a, std::size_t b);

}  // namespace dmc

#endif  // DMC_INSTANCES_HPP
