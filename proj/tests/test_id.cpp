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
#include "dmc/id.hpp"
#include "oracles.hpp"

using namespace dmc;

namespace {

bool failed(const Report& r, const std::string& check) {
  for (const Record& rec : r.records())
    if (rec.check == check && rec.status == Status::Fail) return true;
  return false;
}

}  // namespace

TEST_CASE("generated Id-structures verify in every variant") {
  for (const InstanceBundle& b : fixtures::structured()) {
    CAPTURE(b.name());
    REQUIRE(b.fida);
    const IdAssignment& ida = b.fida->base();
    CHECK(verify_id(b.cat, b.d, ida).passed());
    CHECK(verify_ml_id(b.cat, b.d, ida).passed());
    CHECK(verify_param_ml_id(b.cat, b.d, ida).passed());
    CHECK(verify_functorial_id(b.cat, b.d, *b.fida).passed());
    const Report cross = crosscheck_id_variants(b.cat, b.d, ida);
    CHECK(!cross.has_refutation());
  }
}

TEST_CASE("search_id finds a verified structure and the functorial action") {
  for (const InstanceBundle& b : {fixtures::poset2(), fixtures::b2(), fixtures::n5()}) {
    CAPTURE(b.name());
    const auto ida = search_id(b.cat, b.d);
    REQUIRE(ida);
    CHECK(verify_id(b.cat, b.d, *ida).passed());
    CHECK(ida->covered().size() == b.d.size());
    const auto fida = search_functorial_action(b.cat, b.d, *ida);
    REQUIRE(fida);
    CHECK(verify_functorial_id(b.cat, b.d, *fida).passed());
  }
}

TEST_CASE("Id entries satisfy eps∘r = diag and iota is the diagonal") {
  const InstanceBundle b = fixtures::chain3();
  const IdAssignment& ida = b.fida->base();
  for (MorRef f : ida.covered()) {
    const IdEntry& e = ida.at(f);
    CHECK(b.cat.compose(e.eps, e.r) == e.diag);
    CHECK(e.square.left == f);
    CHECK(e.square.right == f);
    CHECK(b.cat.compose(leg(b.cat, e, 0), e.r) == b.cat.identity(b.cat.src(f)));
    CHECK(b.cat.compose(leg(b.cat, e, 1), e.r) == b.cat.identity(b.cat.src(f)));
  }
}

TEST_CASE("an assignment missing one display map fails coverage") {
  const InstanceBundle b = fixtures::b2();
  const IdAssignment& full = b.fida->base();
  IdAssignment partial(full.universe());
  const auto covered = full.covered();
  for (std::size_t i = 1; i < covered.size(); ++i) partial.set(full.at(covered[i]));
  const Report r = verify_id(b.cat, b.d, partial);
  CHECK(!r.passed());
  CHECK(failed(r, "id.coverage"));
}

TEST_CASE("an Id-structure on a non-display class is rejected") {
  const InstanceBundle b = fixtures::poset2();
  // With D = identities there are no terminal maps, so the class is not a DMC.
  const MorClass ids = MorClass::identities(b.cat);
  CHECK(!check_dmc(b.cat, ids).passed());
}

TEST_CASE("display_slice_arrows enumerates commuting triangles between displays") {
  const InstanceBundle b = fixtures::poset2();
  const auto arrows = display_slice_arrows(b.cat, b.d);
  std::size_t expect = 0;
  for (MorRef d : b.d.members())
    for (MorRef d2 : b.d.members()) {
      if (b.cat.dst(d) != b.cat.dst(d2)) continue;
      for (MorRef m : b.cat.morphisms())
        if (b.cat.src(m) == b.cat.src(d) && b.cat.dst(m) == b.cat.src(d2) &&
            b.cat.compose(d2, m) == d)
          ++expect;
    }
  CHECK(arrows.size() == expect);
}

TEST_CASE("functorial action respects identities") {
  const InstanceBundle b = fixtures::b2();
  for (const SliceArrow& a : display_slice_arrows(b.cat, b.d)) {
    const auto k = b.fida->action(a.d, a.d2, a.m);
    REQUIRE(k);
    if (a.d == a.d2 && b.cat.is_identity(a.m))
      CHECK(b.cat.is_identity(*k));
  }
}
