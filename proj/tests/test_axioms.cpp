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

#include "dmc/axioms.hpp"
#include "dmc/pullback.hpp"
#include "oracles.hpp"

using namespace dmc;

namespace {

bool has_failure(const Report& r, const std::string& check) {
  for (const Record& rec : r.records())
    if (rec.check == check && rec.status == Status::Fail) return true;
  return false;
}

}  // namespace

TEST_CASE("pullbacks in a lattice are meets") {
  const InstanceBundle b = fixtures::b2();
  const FinCat& c = b.cat;
  const Poset p = boolean_poset(2);
  for (MorRef f : c.morphisms())
    for (MorRef g : c.morphisms()) {
      if (c.dst(f) != c.dst(g)) continue;
      const auto pb = pullback(c, f, g);
      REQUIRE(pb);
      const unsigned x = oracle::boolean_meet(c.src(f).index, c.src(g).index);
      // Objects are created in element order, so the index is the bitmask.
      CHECK(pb->apex.index == x);
      CHECK(p.meet(c.src(f).index, c.src(g).index) == x);
      CHECK(is_pullback(c, f, g, pb->apex, pb->proj0, pb->proj1));
      const auto ref = reference::pullback(c, f, g);
      REQUIRE(ref);
      CHECK(ref->apex == pb->apex);
    }
}

TEST_CASE("the walking cospan has no pullback of its two legs") {
  const FinCat c = gen_walking("cospan");
  CHECK(!pullback(c, oracle::mor(c, "a"), oracle::mor(c, "b")));
  CHECK(all_pullbacks(c, oracle::mor(c, "a"), oracle::mor(c, "b")).empty());
}

TEST_CASE("mediators are unique and cones without one refute") {
  const FinCat c = fixtures::chain3().cat;
  const MorRef f = oracle::mor(c, "le_0_2");
  const MorRef g = oracle::mor(c, "le_1_2");
  const auto pb = pullback(c, f, g);
  REQUIRE(pb);
  CHECK(c.object_name(pb->apex) == "0");
  const MorRef id0 = oracle::mor(c, "id_0");
  CHECK(pb->mediate(c, id0, oracle::mor(c, "le_0_1")) == id0);
}

TEST_CASE("pullbacks are unique up to a unique comparison iso") {
  for (const FinCat& c : fixtures::walking_shapes()) {
    for (MorRef f : c.morphisms())
      for (MorRef g : c.morphisms()) {
        if (c.dst(f) != c.dst(g)) continue;
        const auto all = all_pullbacks(c, f, g);
        for (const PullbackResult& a : all)
          for (const PullbackResult& b : all) {
            const auto k = pullback_comparison(c, a, b);
            REQUIRE(k);
            CHECK(is_iso(c, *k));
          }
      }
  }
}

TEST_CASE("PullbackCache returns what pullback returns") {
  const FinCat c = fixtures::n5().cat;
  PullbackCache cache(c);
  for (MorRef f : c.morphisms())
    for (MorRef g : c.morphisms()) {
      if (c.dst(f) != c.dst(g)) continue;
      const auto a = cache.get(f, g);
      const auto b = pullback(c, f, g);
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(a->apex == b->apex);
    }
}

TEST_CASE("lattice bundles are DMCs closed under Sigma") {
  for (const InstanceBundle& b : {fixtures::poset2(), fixtures::b2(), fixtures::m3(),
                                  fixtures::chain3(), fixtures::n5()}) {
    CAPTURE(b.name());
    CHECK(check_dmc(b.cat, b.d).passed());
    CHECK(check_sigma(b.cat, b.d).passed());
    CHECK(check_llp_pullback_stable(b.cat, b.d).holds);
  }
}

TEST_CASE("check_dmc rejects a class missing terminal maps") {
  const InstanceBundle b = fixtures::b2();
  MorClass d = MorClass::identities(b.cat);
  const Report r = check_dmc(b.cat, d);
  CHECK(!r.passed());
  CHECK(has_failure(r, "dmc.terminal_maps"));
}

TEST_CASE("check_dmc rejects missing terminals and missing pullbacks") {
  const FinCat cospan = gen_walking("cospan");
  const Report r = check_dmc(cospan, MorClass::all(cospan));
  CHECK(!has_failure(r, "dmc.terminal"));
  CHECK(has_failure(r, "dmc.pullbacks_exist"));
  const FinCat idem = gen_walking("idempotent");
  CHECK(has_failure(check_dmc(idem, MorClass::all(idem)), "dmc.terminal"));
}

TEST_CASE("Pi in the 2-chain and B2 is the Heyting residual") {
  for (const InstanceBundle& b : {fixtures::poset2(), fixtures::b2(), fixtures::chain3()}) {
    CAPTURE(b.name());
    const PiCheck pc = check_pi(b.cat, b.d);
    CHECK(pc.report.passed());
    REQUIRE(b.pi_expected);
    CHECK(pc.table.size() == b.pi_expected->size());
    for (const PiExpectation& e : *b.pi_expected) {
      const auto it = pc.table.find({e.f.index, e.g.index});
      REQUIRE(it != pc.table.end());
      CHECK(it->second.pi == e.pi);
    }
  }
}

TEST_CASE("M3 and N5 fail Pi") {
  for (const InstanceBundle& b : {fixtures::m3(), fixtures::n5()}) {
    CAPTURE(b.name());
    const PiCheck pc = check_pi(b.cat, b.d);
    CHECK(!pc.report.passed());
    CHECK(has_failure(pc.report, "pi.exists"));
  }
}

TEST_CASE("two Pi objects for the same pair are comparable by an iso") {
  const InstanceBundle b = fixtures::b2();
  const PiCheck pc = check_pi(b.cat, b.d);
  for (const auto& [key, res] : pc.table) {
    const auto again = find_pi(b.cat, b.d, res.f, res.g);
    REQUIRE(again);
    const auto k = pi_comparison(b.cat, res, *again);
    REQUIRE(k);
    CHECK(is_iso(b.cat, *k));
    CHECK(check_universal_element(b.cat, res.f, res.g, res.pi, res.ev));
  }
}
