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
#include "dmc/groupoid.hpp"
#include "dmc/id.hpp"
#include "oracles.hpp"

using namespace dmc;

TEST_CASE("groupoid specs build groupoids of the expected size") {
  struct Case {
    const char* spec;
    std::size_t objects;
    std::size_t morphisms;
  };
  for (const Case& k : {Case{"terminal", 1, 1}, Case{"empty", 0, 0}, Case{"cyclic:3", 1, 3},
                        Case{"symmetric:3", 1, 6}, Case{"discrete:2", 2, 2},
                        Case{"codiscrete:3", 3, 9}}) {
    CAPTURE(k.spec);
    const FinCat g = build_groupoid(groupoid_from_spec(k.spec, "G"));
    CHECK(g.num_objects() == k.objects);
    CHECK(g.num_morphisms() == k.morphisms);
    CHECK(is_groupoid(g));
    CHECK(oracle::category_laws(g));
  }
  CHECK_THROWS_AS(groupoid_from_spec("cyclic:0", "G"), Error);
  CHECK_THROWS_AS(groupoid_from_spec("torus", "G"), Error);
}

TEST_CASE("functor counts match group homomorphism counts") {
  // Hom(Z/m, Z/n) has gcd(m, n) elements.
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const FinCat a = build_groupoid(groupoid_from_spec("cyclic:" + std::to_string(m), "A"));
      const FinCat b = build_groupoid(groupoid_from_spec("cyclic:" + std::to_string(n), "B"));
      const auto fs = enumerate_functors(a, b);
      int g = m, h = n;
      while (h) {
        const int t = g % h;
        g = h;
        h = t;
      }
      CHECK(fs.size() == static_cast<std::size_t>(g));
      for (const Functor& f : fs) CHECK(is_functor(a, b, f));
    }
  // Hom(S3, Z/2) = 2, Hom(Z/2, S3) = 4.
  const FinCat s3 = build_groupoid(groupoid_from_spec("symmetric:3", "S"));
  const FinCat z2 = build_groupoid(groupoid_from_spec("cyclic:2", "Z"));
  CHECK(enumerate_functors(s3, z2).size() == 2);
  CHECK(enumerate_functors(z2, s3).size() == 4);
}

TEST_CASE("find_isomorphism distinguishes groups of equal order") {
  const FinCat z4 = build_groupoid(groupoid_from_spec("cyclic:4", "A"));
  const FinCat v4 = build_groupoid(groupoid_from_spec("perm:1,0,3,2/2,3,0,1", "B"));
  const FinCat z4b = build_groupoid(groupoid_from_spec("cyclic:4", "C"));
  CHECK(!find_isomorphism(z4, v4));
  const auto iso = find_isomorphism(z4, z4b);
  REQUIRE(iso);
  CHECK(is_functor(z4, z4b, *iso));
}

TEST_CASE("isofibrations: J -> 1 is one, 1 -> J is not") {
  const FinCat one = build_groupoid(groupoid_from_spec("terminal", "one"));
  const FinCat j = build_groupoid(groupoid_from_spec("codiscrete:2", "J"));
  const auto down = enumerate_functors(j, one);
  REQUIRE(down.size() == 1);
  CHECK(is_isofibration(j, one, down.front()));
  const auto up = enumerate_functors(one, j);
  REQUIRE(up.size() == 2);
  CHECK(!is_isofibration(one, j, up.front()));
}

TEST_CASE("strict pullback of isofibrations has the fiber product size") {
  const FinCat z2 = build_groupoid(groupoid_from_spec("cyclic:2", "Z"));
  const FinCat one = build_groupoid(groupoid_from_spec("terminal", "one"));
  const Functor p = enumerate_functors(z2, one).front();
  const StrictPullback pb = strict_pullback(z2, one, p, z2, p);
  CHECK(pb.apex.num_morphisms() == 4);
  CHECK(is_groupoid(pb.apex));
}

TEST_CASE("path groupoid of Z2 -> 1 has a non-invertible r") {
  const FinCat z2 = build_groupoid(groupoid_from_spec("cyclic:2", "Z"));
  const FinCat one = build_groupoid(groupoid_from_spec("terminal", "one"));
  const Functor p = enumerate_functors(z2, one).front();
  const PathGroupoid pg = path_groupoid(z2, one, p);
  CHECK(is_groupoid(pg.path));
  CHECK(is_functor(z2, pg.path, pg.r));
  CHECK(is_functor(pg.path, pg.pair.apex, pg.eps));
  // eps∘r is the diagonal.
  for (MorRef m : z2.morphisms()) {
    const MorRef d = pg.eps.mor[pg.r.mor[m.index].index];
    CHECK(pg.pair.proj0.mor[d.index] == m);
    CHECK(pg.pair.proj1.mor[d.index] == m);
  }
  // r is not an isomorphism: the path groupoid has more objects than Z2.
  CHECK(pg.path.num_objects() > z2.num_objects());
}

TEST_CASE("the site spanned by 0 and 1 closes and carries a verified Id") {
  const GroupoidSite s = fixtures::trivial_groupoid_site();
  CHECK(s.closed);
  CHECK(s.bundle.cat.num_objects() == 2);
  CHECK(s.bundle.cat.num_morphisms() == 3);
  CHECK(check_dmc(s.bundle.cat, s.bundle.d).passed());
  REQUIRE(s.bundle.fida);
  CHECK(verify_functorial_id(s.bundle.cat, s.bundle.d, *s.bundle.fida).passed());
}

TEST_CASE("adding Z2 makes the site unbounded") {
  // A finite category with terminal object and products is thin, so no finite
  // site containing Z2 can be closed. The generator must hit its budget.
  CHECK_THROWS_AS(gen_groupoid_site({groupoid_from_spec("cyclic:2", "Z2"),
                                     groupoid_from_spec("terminal", "one")}),
                  BudgetExceeded);
}

TEST_CASE("fragments are reported as not closed and fail the DMC check") {
  const GroupoidSite f0 = fixtures::z2_fragment(0);
  CHECK(!f0.closed);
  CHECK(f0.bundle.cat.num_objects() == 2);
  CHECK(f0.bundle.cat.num_morphisms() == 5);
  const GroupoidSite f1 = fixtures::z2_fragment(1);
  CHECK(!f1.closed);
  CHECK(!check_dmc(f1.bundle.cat, f1.bundle.d).passed());
}

TEST_CASE("duplicate input names are rejected") {
  CHECK_THROWS_AS(gen_groupoid_site({groupoid_from_spec("terminal", "A"),
                                     groupoid_from_spec("cyclic:2", "A")}),
                  PreconditionError);
}

TEST_CASE("isofibration lifting check needs 1 and J") {
  const GroupoidSite s = fixtures::trivial_groupoid_site();
  const Report r = check_isofibration_lifting(s);
  REQUIRE(!r.records().empty());
  CHECK(r.records().front().status == Status::Skip);
}
