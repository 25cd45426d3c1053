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
#include "dmc/closure.hpp"
#include "dmc/lifting.hpp"
#include "oracles.hpp"

using namespace dmc;

TEST_CASE("main theorem certificate is green on the verified instances") {
  for (const InstanceBundle& b : fixtures::structured()) {
    CAPTURE(b.name());
    const bool with_pi = b.pi_expected.has_value();
    const ClosureCertificate cert = verify_main_theorem(b.cat, b.d, *b.fida, with_pi);
    CHECK(cert.preconditions_hold());
    CHECK(cert.valid());
    CHECK(cert.combined().passed());
    CHECK(!cert.combined().has_refutation());
    CHECK(cert.dbar == oracle::right_of(b.cat, oracle::left_of(b.cat, b.d)));
  }
}

TEST_CASE("M3 fails the Pi precondition and is not certified with Pi") {
  const InstanceBundle b = fixtures::m3();
  const ClosureCertificate with = verify_main_theorem(b.cat, b.d, *b.fida, true);
  CHECK(!with.preconditions_hold());
  CHECK(!with.valid());
  CHECK(!with.combined().has_refutation());
  const ClosureCertificate without = verify_main_theorem(b.cat, b.d, *b.fida, false);
  CHECK(without.valid());
}

TEST_CASE("the walking idempotent fails the Cauchy precondition") {
  const FinCat c = gen_walking("idempotent");
  const MorClass d = MorClass::all(c);
  const ClosureCertificate cert =
      verify_main_theorem(c, d, FunctorialIdAssignment(IdAssignment(c.num_morphisms())), false);
  CHECK(!cert.preconditions_hold());
  CHECK(!cert.combined().has_refutation());
}

TEST_CASE("closure_id verifies against dbar and agrees with the input on D") {
  for (const InstanceBundle& b : {fixtures::poset2(), fixtures::b2(), fixtures::n5()}) {
    CAPTURE(b.name());
    const ClosureId cid = closure_id(b.cat, b.d, *b.fida);
    const MorClass db = dbar(b.cat, b.d);
    CHECK(verify_id(b.cat, db, cid.fida.base()).passed());
    CHECK(verify_functorial_id(b.cat, db, cid.fida).passed());
    CHECK(cid.fida.base().covered().size() == db.size());
  }
}

TEST_CASE("closure pullbacks are pullbacks of e along alpha") {
  const InstanceBundle b = fixtures::b2();
  for (MorRef e : dbar(b.cat, b.d).members())
    for (MorRef a : b.cat.morphisms_into(b.cat.dst(e))) {
      const ClosurePullback cp = closure_pullback(b.cat, b.d, b.fida->base(), e, a);
      CHECK(is_pullback(b.cat, e, a, cp.result.apex, cp.result.proj0, cp.result.proj1));
      CHECK(is_iso(b.cat, cp.comparison));
    }
}

TEST_CASE("closure_pi is isomorphic to the brute-force Pi") {
  for (const InstanceBundle& b : {fixtures::poset2(), fixtures::b2(), fixtures::chain3()}) {
    CAPTURE(b.name());
    const PiCheck pc = check_pi(b.cat, b.d);
    const MorClass db = dbar(b.cat, b.d);
    std::size_t pairs = 0;
    for (MorRef f : db.members())
      for (MorRef g : db.members()) {
        if (b.cat.dst(g) != b.cat.src(f)) continue;
        ++pairs;
        const ClosurePi cp = closure_pi(b.cat, b.d, b.fida->base(), pc.table, f, g);
        const auto brute = find_pi(b.cat, db, f, g);
        REQUIRE(brute);
        CHECK(pi_comparison(b.cat, cp.result, *brute));
      }
    CHECK(pairs > 0);
  }
}

TEST_CASE("reflection: D lies in a right class iff dbar does") {
  const InstanceBundle b = fixtures::b2();
  const MorClass all = MorClass::all(b.cat);
  const MorClass iso = MorClass::isomorphisms(b.cat);
  CHECK(check_reflection(b.cat, b.d, all).holds());
  CHECK(check_reflection(b.cat, b.d, all).d_in_r);
  const ReflectionCheck r = check_reflection(b.cat, b.d, iso);
  CHECK(r.holds());
  CHECK(!r.d_in_r);
  CHECK_THROWS_AS(check_reflection(b.cat, b.d, MorClass(b.cat.num_morphisms())).holds(),
                  PreconditionError);
}
