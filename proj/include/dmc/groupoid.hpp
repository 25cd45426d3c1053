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

// Finite groupoids, functors between them, and compiled groupoid sites:
// a finite full subcategory of groupoids with isofibrations as display maps
// and fiberwise path groupoids as Id-types.

#ifndef DMC_GROUPOID_HPP
#define DMC_GROUPOID_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmc/fincat.hpp"
#include "dmc/instances.hpp"
#include "dmc/report.hpp"

namespace dmc {

// A groupoid presented component by component: the objects of a component
// are pairwise connected and the automorphism group of each is the
// permutation group generated by `generators` (degree `degree`).
struct GroupoidSpec {
  struct Component {
    std::vector<std::string> objects;
    std::size_t degree = 1;
    std::vector<std::vector<std::size_t>> generators;
  };
  std::string name;
  std::vector<Component> components;
};

// "terminal", "empty", "cyclic:N", "discrete:N", "codiscrete:N",
// "symmetric:N" or "perm:<p>/<p>/..." with each <p> a comma-separated
// permutation of 0..n-1 (one object). Throws ParseError.
GroupoidSpec groupoid_from_spec(std::string_view spec, const std::string& name);

// Throws PreconditionError on malformed permutations and BudgetExceeded
// when the groupoid exceeds the limits.
FinCat build_groupoid(const GroupoidSpec& spec, Limits limits = {});

bool is_groupoid(const FinCat& cat);

// A functor as object and morphism maps.
struct Functor {
  std::vector<ObjRef> obj;
  std::vector<MorRef> mor;
  friend bool operator==(const Functor&, const Functor&) = default;
  friend auto operator<=>(const Functor& a, const Functor& b) {
    return a.mor <=> b.mor;
  }
};

Functor identity_functor(const FinCat& a);
// g∘f
Functor compose_functors(const Functor& g, const Functor& f);
bool is_functor(const FinCat& a, const FinCat& b, const Functor& f);

// All functors a -> b in lexicographic order of the morphism map. Throws
// BudgetExceeded beyond `budget` functors.
std::vector<Functor> enumerate_functors(const FinCat& a, const FinCat& b,
                                        std::size_t budget = 100000);

std::optional<Functor> find_isomorphism(const FinCat& a, const FinCat& b);

// Every iso of the base whose source lies in the image lifts to an iso with
// that source.
bool is_isofibration(const FinCat& e, const FinCat& b, const Functor& p);

// The strict pullback of p : E -> B and f : A -> B; proj0 lands in E.
struct StrictPullback {
  FinCat apex;
  Functor proj0;
  Functor proj1;
};
StrictPullback strict_pullback(const FinCat& e, const FinCat& b, const Functor& p,
                               const FinCat& a, const Functor& f);

// The fiberwise path groupoid of p : E -> B: objects are vertical isos,
// morphisms commuting squares with equal images. r sends e to id_e and eps
// sends a path to its endpoints in E ×_B E.
struct PathGroupoid {
  StrictPullback pair;  // pullback of p along itself
  FinCat path;
  Functor r;
  Functor eps;
  std::vector<MorRef> vertical;             // per path object, in E
  std::vector<std::array<MorRef, 3>> sides; // per path morphism: u, s, t
};
PathGroupoid path_groupoid(const FinCat& e, const FinCat& b, const Functor& p);

// Whiskering: for m : E -> E2 over B (p2∘m = p), the induced functor
// between the path groupoids.
Functor path_action(const PathGroupoid& src, const PathGroupoid& dst,
                    const Functor& m);

struct GroupoidSiteOptions {
  // Budget on compiled morphisms (functors) of the site.
  std::size_t max_site_morphisms = 2000;
  // Budget on morphisms of any single groupoid in the site.
  std::size_t max_groupoid_morphisms = 64;
  // When set, stop after this many closure rounds and compile the fragment
  // reached so far instead of failing.
  std::optional<std::size_t> max_rounds;
};

struct GroupoidSite {
  InstanceBundle bundle;
  std::vector<FinCat> groupoids;  // indexed like the site's objects
  std::vector<Functor> functors;  // indexed like the site's morphisms
  bool closed = false;
  std::size_t rounds = 0;
  std::vector<std::string> provenance;
};

// Closes the inputs under strict pullbacks of isofibrations and path
// groupoids (up to isomorphism), then compiles the site. D is the class of
// isofibrations and fida the path-object structure with whiskering action;
// in a fragment both cover only what the fragment contains. Throws
// BudgetExceeded when the closure outgrows the budget and no round limit
// was given.
GroupoidSite gen_groupoid_site(const std::vector<GroupoidSpec>& inputs,
                               const GroupoidSiteOptions& opts = {});

// Compares D with the class of maps having the right lifting property
// against every 1 -> J, with J the walking iso. Skips when the site lacks a
// terminal groupoid or a copy of J.
Report check_isofibration_lifting(const GroupoidSite& site);

}  // namespace dmc

#endif  // DMC_GROUPOID_HPP
