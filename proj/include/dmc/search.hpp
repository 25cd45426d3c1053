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

// Bounded search for a display map category whose class D is not closed,
// i.e. with (^⊞D)^⊞ strictly larger than D.

#ifndef DMC_SEARCH_HPP
#define DMC_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "dmc/instances.hpp"

namespace dmc {

struct SearchBounds {
  std::size_t max_objects = 6;
  std::size_t max_morphisms = 24;
  // Every category with at most this many morphisms is tried, thin or not.
  std::size_t exhaustive_morphisms = 6;
  // Per category cap on enumerated candidate classes.
  std::size_t max_classes = 4096;
  double time_budget_seconds = 1800;
};

struct SearchStats {
  std::size_t categories = 0;       // candidates with a terminal object
  std::size_t classes = 0;          // closed candidate classes examined
  std::size_t not_closed = 0;       // classes with dbar != D
  std::size_t id_failures = 0;      // of those, classes without an Id-structure
  std::size_t capped = 0;           // categories whose class list hit the cap
  bool timed_out = false;
};

struct SearchResult {
  std::optional<InstanceBundle> found;
  SearchStats stats;
  // True when every candidate within the bounds was examined.
  bool exhausted = false;
  std::string witness;
  std::vector<std::string> provenance;
  std::string summary() const;
};

// Least D-closed classes of a category: D contains the isomorphisms and the
// maps into terminal objects, is closed under composition, and contains a
// pullback of each member along every map. Enumerated by adding one
// morphism at a time, in a deterministic order; nullopt beyond `cap`.
std::optional<std::vector<MorClass>> candidate_classes(const FinCat& cat,
                                                       std::size_t cap);

// Preorders with a top element on at most max_objects elements and at most
// max_morphisms related pairs, one per isomorphism class, as categories.
std::vector<FinCat> thin_candidates(std::size_t max_objects, std::size_t max_morphisms);

// Every category (up to relabeling, possibly with repeats) with at most
// max_morphisms morphisms and a terminal object.
std::vector<FinCat> small_categories(std::size_t max_morphisms);

SearchResult search_nonclosed_instance(const SearchBounds& bounds = {});

}  // namespace dmc

#endif  // DMC_SEARCH_HPP
