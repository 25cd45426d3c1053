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
#include "dmc/lifting.hpp"
#include "dmc/search.hpp"
#include "oracles.hpp"

using namespace dmc;

TEST_CASE("small categories are valid, distinct and have a terminal object") {
  const auto cats = small_categories(4);
  CHECK(cats.size() == 8);
  for (std::size_t i = 0; i < cats.size(); ++i) {
    CHECK(oracle::category_laws(cats[i]));
    CHECK(terminal(cats[i]).has_value());
    for (std::size_t j = 0; j < i; ++j) CHECK(!same_table(cats[i], cats[j]));
  }
}

TEST_CASE("thin candidates are preorders with a top") {
  for (const FinCat& c : thin_candidates(4, 10)) {
    CHECK(oracle::thin(c));
    CHECK(oracle::category_laws(c));
    CHECK(terminal(c).has_value());
  }
}

TEST_CASE("candidate classes are DMCs closed under composition") {
  for (const FinCat& c : small_categories(5)) {
    const auto classes = candidate_classes(c, 4096);
    if (!classes) continue;
    for (const MorClass& d : *classes) {
      CHECK(check_dmc(c, d).passed());
      CHECK(check_sigma(c, d).passed());
    }
  }
}

TEST_CASE("property: every candidate category that admits a DMC is thin") {
  // Terminal object plus binary products force thinness; display classes
  // contain terminal maps and are pullback stable, so every category
  // carrying one has all products.
  for (const FinCat& c : small_categories(5)) {
    const auto classes = candidate_classes(c, 4096);
    if (classes && !classes->empty()) CHECK(oracle::thin(c));
  }
}

TEST_CASE("a small bounded search is exhausted without a witness") {
  SearchBounds b;
  b.max_objects = 3;
  b.max_morphisms = 6;
  b.exhaustive_morphisms = 4;
  const SearchResult r = search_nonclosed_instance(b);
  CHECK(r.exhausted);
  CHECK(!r.found);
  CHECK(r.stats.not_closed == 0);
  CHECK(r.stats.categories > 0);
  CHECK(r.summary().find("search exhausted") == 0);
}
