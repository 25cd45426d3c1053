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

// Finite presented categories: explicit object and morphism tables with a
// composition table, plus the elementary queries every other module uses.

#ifndef DMC_FINCAT_HPP
#define DMC_FINCAT_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dmc/types.hpp"

namespace dmc {

struct Morphism {
  std::string name;
  ObjRef src;
  ObjRef dst;
};

// Immutable once built. Composition is stored densely: comp(g, f) is g∘f.
// A table may be broken (missing or ill-typed entries); validate_category
// reports such defects instead of rejecting them at construction.
class FinCat {
 public:
  FinCat() = default;

  const std::string& name() const { return name_; }
  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }

  const std::string& object_name(ObjRef x) const { return objects_[x.index]; }
  const Morphism& morphism(MorRef m) const { return morphisms_[m.index]; }
  const std::string& morphism_name(MorRef m) const {
    return morphisms_[m.index].name;
  }
  ObjRef src(MorRef m) const { return morphisms_[m.index].src; }
  ObjRef dst(MorRef m) const { return morphisms_[m.index].dst; }

  MorRef identity(ObjRef x) const { return identities_[x.index]; }
  bool is_identity(MorRef m) const { return identity(src(m)) == m; }
  bool is_endo(MorRef m) const { return src(m) == dst(m); }

  // g∘f, or nothing when the pair is not composable or the entry is missing.
  std::optional<MorRef> try_compose(MorRef g, MorRef f) const {
    const std::int32_t h = comp_[g.index * morphisms_.size() + f.index];
    if (h < 0) return std::nullopt;
    return MorRef{static_cast<std::uint32_t>(h)};
  }

  // g∘f. Throws ModelError if undefined.
  MorRef compose(MorRef g, MorRef f) const;

  // a∘b∘c∘...
  template <typename... Rest>
  MorRef compose(MorRef a, MorRef b, MorRef c, Rest... rest) const {
    return compose(a, compose(b, c, rest...));
  }

  // Morphisms a -> b in ascending index order.
  std::span<const MorRef> hom(ObjRef a, ObjRef b) const {
    return homs_[a.index * objects_.size() + b.index];
  }
  // Index of m inside hom(src(m), dst(m)).
  std::uint32_t hom_position(MorRef m) const { return hom_position_[m.index]; }

  std::optional<ObjRef> find_object(std::string_view name) const;
  std::optional<MorRef> find_morphism(std::string_view name) const;

  std::vector<ObjRef> objects() const;
  std::vector<MorRef> morphisms() const;
  // Morphisms with the given codomain, ascending.
  std::vector<MorRef> morphisms_into(ObjRef y) const;

 private:
  friend class CatBuilder;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorRef> identities_;
  std::vector<std::int32_t> comp_;
  std::vector<std::uint32_t> hom_position_;
  std::vector<std::vector<MorRef>> homs_;
  std::unordered_map<std::string, std::uint32_t> object_index_;
  std::unordered_map<std::string, std::uint32_t> morphism_index_;
};

class CatBuilder {
 public:
  explicit CatBuilder(std::string name, Limits limits = {});

  ObjRef add_object(std::string name);
  MorRef add_morphism(std::string name, ObjRef src, ObjRef dst);
  // Adds the morphism and registers it as the identity of x.
  MorRef add_identity(ObjRef x, std::string name);
  void set_identity(ObjRef x, MorRef id);
  // Records g∘f = h. The pair must be composable.
  void set_comp(MorRef g, MorRef f, MorRef h);
  // Fills id∘f = f and f∘id = f wherever the entry is still missing.
  void fill_unit_laws();

  bool has_comp(MorRef g, MorRef f) const;
  std::size_t num_objects() const { return cat_.objects_.size(); }
  std::size_t num_morphisms() const { return cat_.morphisms_.size(); }
  ObjRef src(MorRef m) const { return cat_.morphisms_[m.index].src; }
  ObjRef dst(MorRef m) const { return cat_.morphisms_[m.index].dst; }
  std::optional<ObjRef> find_object(std::string_view name) const;
  std::optional<MorRef> find_morphism(std::string_view name) const;

  // Throws ModelError when an object has no identity.
  FinCat build() &&;

 private:
  FinCat cat_;
  Limits limits_;
  std::vector<std::optional<MorRef>> ids_;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> comps_;
};

struct Violation {
  std::string law;  // "totality", "typing", "identity", "unit", "associativity"
  std::vector<MorRef> morphisms;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_category(const FinCat& cat);

std::optional<MorRef> is_iso(const FinCat& cat, MorRef f);
std::vector<MorRef> hom_set(const FinCat& cat, ObjRef a, ObjRef b);

// Every object T with exactly one morphism from each object.
std::vector<ObjRef> terminals(const FinCat& cat);
// Least-index terminal object.
std::optional<ObjRef> terminal(const FinCat& cat);
// The unique morphism x -> t for a terminal t.
MorRef to_terminal(const FinCat& cat, ObjRef x, ObjRef t);

// Structural equality of two tables (names, typing, identities, comp).
bool same_table(const FinCat& a, const FinCat& b);

}  // namespace dmc

#endif  // DMC_FINCAT_HPP
