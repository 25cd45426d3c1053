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

// Independent brute-force oracles and the built-in instance list shared by
// the unit tests. Nothing here calls the kernels under test.

#ifndef DMC_TESTS_ORACLES_HPP
#define DMC_TESTS_ORACLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dmc/fincat.hpp"
#include "dmc/groupoid.hpp"
#include "dmc/instances.hpp"
#include "dmc/morclass.hpp"

namespace oracle {

using dmc::FinCat;
using dmc::MorRef;
using dmc::ObjRef;

// Every composable triple associates, units act trivially, and composites
// are total and well typed.
inline bool category_laws(const FinCat& c) {
  for (MorRef f : c.morphisms()) {
    if (c.try_compose(c.identity(c.dst(f)), f) != f) return false;
    if (c.try_compose(f, c.identity(c.src(f))) != f) return false;
    for (MorRef g : c.morphisms()) {
      if (c.dst(f) != c.src(g)) continue;
      const auto gf = c.try_compose(g, f);
      if (!gf || c.src(*gf) != c.src(f) || c.dst(*gf) != c.dst(g)) return false;
      for (MorRef h : c.morphisms()) {
        if (c.dst(g) != c.src(h)) continue;
        if (c.try_compose(h, *gf) != c.try_compose(*c.try_compose(h, g), f)) return false;
      }
    }
  }
  return true;
}

// f ⧄ g by trying every square and every diagonal.
inline bool lifts(const FinCat& c, MorRef f, MorRef g) {
  for (MorRef u : c.morphisms()) {
    if (c.src(u) != c.src(f) || c.dst(u) != c.src(g)) continue;
    for (MorRef v : c.morphisms()) {
      if (c.src(v) != c.dst(f) || c.dst(v) != c.dst(g)) continue;
      if (c.compose(g, u) != c.compose(v, f)) continue;
      bool found = false;
      for (MorRef h : c.morphisms())
        if (c.src(h) == c.dst(f) && c.dst(h) == c.src(g) && c.compose(h, f) == u &&
            c.compose(g, h) == v)
          found = true;
      if (!found) return false;
    }
  }
  return true;
}

inline dmc::MorClass left_of(const FinCat& c, const dmc::MorClass& m) {
  dmc::MorClass out(c.num_morphisms());
  for (MorRef f : c.morphisms()) {
    bool all = true;
    for (MorRef g : m.members()) all = all && lifts(c, f, g);
    if (all) out.insert(f);
  }
  return out;
}

inline dmc::MorClass right_of(const FinCat& c, const dmc::MorClass& m) {
  dmc::MorClass out(c.num_morphisms());
  for (MorRef g : c.morphisms()) {
    bool all = true;
    for (MorRef f : m.members()) all = all && lifts(c, f, g);
    if (all) out.insert(g);
  }
  return out;
}

// Boolean lattice on `atoms` atoms: element s is the subset with bitmask s.
inline unsigned boolean_meet(unsigned a, unsigned b) { return a & b; }
inline unsigned boolean_implies(unsigned a, unsigned b, unsigned atoms) {
  return (~a | b) & ((1U << atoms) - 1);
}

// Element names used by the generator for the Boolean lattice.
inline std::string boolean_name(unsigned s, unsigned atoms) {
  std::string n;
  for (unsigned i = 0; i < atoms; ++i)
    if (s >> i & 1) n += static_cast<char>('a' + i);
  return n.empty() ? "0" : n;
}

// |hom(A,B)| <= 1 everywhere.
inline bool thin(const FinCat& c) {
  for (ObjRef a : c.objects())
    for (ObjRef b : c.objects())
      if (c.hom(a, b).size() > 1) return false;
  return true;
}

inline MorRef mor(const FinCat& c, const std::string& name) {
  auto m = c.find_morphism(name);
  if (!m) throw dmc::ModelError("no morphism " + name);
  return *m;
}

inline ObjRef obj(const FinCat& c, const std::string& name) {
  auto o = c.find_object(name);
  if (!o) throw dmc::ModelError("no object " + name);
  return *o;
}

}  // namespace oracle

namespace fixtures {

inline dmc::InstanceBundle poset2() {
  return dmc::gen_heyting(dmc::chain_poset(2), "poset2");
}
inline dmc::InstanceBundle b2() {
  return dmc::gen_heyting(dmc::boolean_poset(2), "b2");
}
inline dmc::InstanceBundle m3() { return dmc::gen_heyting(dmc::m3_poset(), "m3"); }
inline dmc::InstanceBundle chain3() {
  return dmc::gen_heyting(dmc::chain_poset(3), "chain3");
}
inline dmc::InstanceBundle n5() { return dmc::gen_heyting(dmc::n5_poset(), "n5"); }

// The closed site spanned by the empty and the terminal groupoid.
inline dmc::GroupoidSite trivial_groupoid_site() {
  return dmc::gen_groupoid_site({dmc::groupoid_from_spec("terminal", "one"),
                                 dmc::groupoid_from_spec("empty", "zero")});
}

// The input groupoids Z/2 and 1 only, as a fragment.
inline dmc::GroupoidSite z2_fragment(std::size_t rounds = 0) {
  dmc::GroupoidSiteOptions o;
  o.max_rounds = rounds;
  return dmc::gen_groupoid_site({dmc::groupoid_from_spec("cyclic:2", "Z2"),
                                 dmc::groupoid_from_spec("terminal", "one")},
                                o);
}

// Bundles carrying verified structure.
inline std::vector<dmc::InstanceBundle> structured() {
  return {poset2(), b2(), m3(), chain3(), n5(), trivial_groupoid_site().bundle};
}

inline std::vector<dmc::FinCat> walking_shapes() {
  std::vector<dmc::FinCat> out;
  for (const char* s : {"arrow", "idempotent", "retract", "iso", "cospan"})
    out.push_back(dmc::gen_walking(s));
  return out;
}

}  // namespace fixtures

#endif  // DMC_TESTS_ORACLES_HPP
