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

#include "dmc/lifting.hpp"
#include "dmc/wfs.hpp"
#include "oracles.hpp"

using namespace dmc;

TEST_CASE("factorizations compose back to f with lambda left and rho display") {
  for (const InstanceBundle& b : fixtures::structured()) {
    CAPTURE(b.name());
    const IdAssignment& ida = *b.id_structure();
    const MorClass left = oracle::left_of(b.cat, b.d);
    for (MorRef f : b.cat.morphisms()) {
      const Factorization fz = factorize(b.cat, b.d, ida, f);
      CHECK(b.cat.compose(fz.rho, fz.lambda) == f);
      CHECK(left.contains(fz.lambda));
      CHECK(b.d.contains(fz.rho));
      CHECK(b.cat.src(fz.rho) == fz.mid);
    }
  }
}

TEST_CASE("the generated pair is a weak factorization system") {
  for (const InstanceBundle& b : fixtures::structured()) {
    CAPTURE(b.name());
    const GeneratedWfs g = verify_generated_wfs(b.cat, b.d, *b.id_structure());
    CHECK(g.gate_passed);
    CHECK(g.report.passed());
    REQUIRE(g.wfs);
    CHECK(g.wfs->passed());
    CHECK(g.factors.size() == b.cat.num_morphisms());
  }
}

TEST_CASE("every display map is a retract of its rho") {
  for (const InstanceBundle& b : {fixtures::b2(), fixtures::n5()}) {
    const IdAssignment& ida = *b.id_structure();
    const MorClass db = dbar(b.cat, b.d);
    for (MorRef f : db.members()) {
      const Factorization fz = factorize(b.cat, b.d, ida, f);
      const RetractData rd = exhibit_retract_of_rho(b.cat, b.d, ida, f);
      CHECK(is_retract_diagram(b.cat, f, fz.rho, rd));
    }
  }
}

TEST_CASE("the factorization of an identity in a poset is trivial") {
  const InstanceBundle b = fixtures::chain3();
  for (ObjRef x : b.cat.objects()) {
    const MorRef id = b.cat.identity(x);
    const Factorization fz = factorize(b.cat, b.d, *b.id_structure(), id);
    CHECK(fz.lambda == id);
    CHECK(fz.rho == id);
  }
}
