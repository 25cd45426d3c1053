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

#include <doctest.h>

#include <random>

#include "dmc/lifting.hpp"
#include "dmc/parallel.hpp"
#include "dmc/views.hpp"
#include "oracles.hpp"

using namespace dmc;

namespace {

std::vector<FinCat> all_cats() {
  std::vector<FinCat> out = fixtures::walking_shapes();
  for (const InstanceBundle& b : fixtures::structured()) out.push_back(b.cat);
  out.push_back(fixtures::z2_fragment().bundle.cat);
  return out;
}

MorClass random_class(const FinCat& c, std::mt19937& rng) {
  MorClass m(c.num_morphisms());
  std::bernoulli_distribution coin(0.4);
  for (MorRef f : c.morphisms())
    if (coin(rng)) m.insert(f);
  return m;
}

}  // namespace

TEST_CASE("lifts_against agrees with the square-by-square oracle") {
  for (const FinCat& c : all_cats()) {
    CAPTURE(c.name());
    for (MorRef f : c.morphisms())
      for (MorRef g : c.morphisms()) {
        const bool expect = oracle::lifts(c, f, g);
        CHECK(lifts_against(c, f, g) == expect);
        CHECK(reference::lifts_against(c, f, g) == expect);
        CHECK(first_unliftable(c, f, g).has_value() == !expect);
      }
  }
}

TEST_CASE("unliftable witnesses are commuting squares with no diagonal") {
  const FinCat c = gen_walking("retract");
  for (MorRef f : c.morphisms())
    for (MorRef g : c.morphisms()) {
      const auto sq = first_unliftable(c, f, g);
      if (!sq) continue;
      CHECK(commutes(c, *sq));
      CHECK(!solve_lift(c, *sq));
      CHECK(all_lifts(c, *sq).empty());
    }
}

TEST_CASE("complements match the oracle on random classes") {
  std::mt19937 rng(20261019);
  for (const FinCat& c : all_cats()) {
    CAPTURE(c.name());
    for (int trial = 0; trial < 6; ++trial) {
      const MorClass m = random_class(c, rng);
      const MorClass l = left_complement(c, m);
      const MorClass r = right_complement(c, m);
      CHECK(l == oracle::left_of(c, m));
      CHECK(r == oracle::right_of(c, m));
      CHECK(l == reference::left_complement(c, m));
      CHECK(r == reference::right_complement(c, m));
    }
  }
}

TEST_CASE("complements do not depend on the thread count") {
  const FinCat c = fixtures::z2_fragment(1).bundle.cat;
  const MorClass d = fixtures::z2_fragment(1).bundle.d;
  set_jobs(1);
  const MorClass l1 = left_complement(c, d);
  const MorClass r1 = right_complement(c, d);
  set_jobs(8);
  CHECK(left_complement(c, d) == l1);
  CHECK(right_complement(c, d) == r1);
  set_jobs(0);
}

TEST_CASE("property: Galois connection laws on random classes") {
  std::mt19937 rng(7);
  for (const FinCat& c : all_cats()) {
    CAPTURE(c.name());
    for (int trial = 0; trial < 8; ++trial) {
      MorClass a = random_class(c, rng);
      MorClass b = a;
      b.unite(random_class(c, rng));
      // Antitone.
      CHECK(left_complement(c, b).subset_of(left_complement(c, a)));
      CHECK(right_complement(c, b).subset_of(right_complement(c, a)));
      // Unit.
      CHECK(a.subset_of(dbar(c, a)));
      CHECK(a.subset_of(left_complement(c, right_complement(c, a))));
      // Idempotence and the triple identity.
      const MorClass da = dbar(c, a);
      CHECK(dbar(c, da) == da);
      CHECK(left_complement(c, da) == left_complement(c, a));
      // Isomorphisms lift against everything.
      CHECK(MorClass::isomorphisms(c).subset_of(left_complement(c, a)));
      CHECK(MorClass::isomorphisms(c).subset_of(right_complement(c, a)));
    }
  }
}

TEST_CASE("dbar of a verified Id-structure is its retract closure") {
  for (const InstanceBundle& b : fixtures::structured()) {
    CAPTURE(b.name());
    CHECK(dbar(b.cat, b.d) == retract_closure(b.cat, b.d));
  }
}

TEST_CASE("retract_closure is closed and contains its input") {
  std::mt19937 rng(11);
  for (const FinCat& c : fixtures::walking_shapes()) {
    const MorClass a = random_class(c, rng);
    const MorClass r = retract_closure(c, a);
    CHECK(a.subset_of(r));
    CHECK(retract_closure(c, r) == r);
    for (MorRef f : c.morphisms())
      for (MorRef g : r.members())
        if (find_retract(c, f, g)) CHECK(r.contains(f));
  }
}

TEST_CASE("the walking arrow: a lifts against identities only on one side") {
  const FinCat c = gen_walking("arrow");
  const MorRef a = oracle::mor(c, "a");
  const MorClass just_a = MorClass::of(c, {a});
  // a does not lift against itself: the square (id, id) has no diagonal.
  CHECK(!lifts_against(c, a, a));
  CHECK(!left_complement(c, just_a).contains(a));
  CHECK(!right_complement(c, just_a).contains(a));
  CHECK(dbar(c, just_a).contains(a));
}

TEST_CASE("llp and rlp return the first failing square") {
  const FinCat c = gen_walking("arrow");
  const MorRef a = oracle::mor(c, "a");
  const auto check = llp(c, a, MorClass::of(c, {a}));
  REQUIRE(!check.holds);
  REQUIRE(check.witness);
  CHECK(check.witness->left == a);
  CHECK(check.witness->right == a);
  CHECK(rlp(c, a, MorClass::identities(c)).holds);
}

TEST_CASE("verify_wfs detects a bad pair of classes") {
  const FinCat c = gen_walking("arrow");
  const MorClass all = MorClass::all(c);
  const MorClass iso = MorClass::isomorphisms(c);
  std::vector<FactorPair> split;
  for (MorRef f : c.morphisms()) split.push_back({f, c.identity(c.dst(f))});
  // (all, iso) is a WFS on any category.
  CHECK(verify_wfs(c, all, iso, split).passed());
  // (iso, iso) fails: a has no factorization.
  const WfsReport bad = verify_wfs(c, iso, iso, split);
  CHECK(!bad.passed());
  CHECK(!bad.to_report(c).passed());
}
