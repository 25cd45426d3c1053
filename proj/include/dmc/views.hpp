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

// Derived categories (slices, arrow categories) and retract search.

#ifndef DMC_VIEWS_HPP
#define DMC_VIEWS_HPP

#include <optional>
#include <vector>

#include "dmc/fincat.hpp"

namespace dmc {

// Limits for categories derived from an already-accepted one.
inline constexpr Limits kUnboundedLimits{static_cast<std::size_t>(-1),
                                         static_cast<std::size_t>(-1)};

// C/y: objects are morphisms into y, morphisms are commuting triangles.
struct SliceView {
  FinCat cat;
  ObjRef base;
  std::vector<MorRef> object_arrow;   // slice object -> arrow into base
  std::vector<MorRef> base_morphism;  // slice morphism -> underlying morphism

  std::optional<ObjRef> object_of(MorRef arrow) const;
  // The triangle from `from` to `to` carried by m, if m makes it commute.
  std::optional<MorRef> morphism_of(MorRef m, ObjRef from, ObjRef to) const;
};

SliceView slice(const FinCat& cat, ObjRef y);

// C^→: objects are morphisms, morphisms are commuting squares.
struct ArrowView {
  struct Square {
    MorRef from;
    MorRef to;
    MorRef top;
    MorRef bottom;
  };
  FinCat cat;
  std::vector<MorRef> object_arrow;
  std::vector<Square> squares;
};

ArrowView arrow_category(const FinCat& cat);

// Witness that f is a retract of g. In the arrow category the inclusion is
// the square (incl_dom, incl_cod) and the retraction (retr_dom, retr_cod).
// In a slice over `over`, both codomain components are the identity of it.
struct RetractData {
  MorRef incl_dom;
  MorRef incl_cod;
  MorRef retr_dom;
  MorRef retr_cod;
  std::optional<ObjRef> over;
};

// Least-index witness exhibiting f as a retract of g, in C/over when given,
// otherwise in C^→.
std::optional<RetractData> find_retract(const FinCat& cat, MorRef f, MorRef g,
                                        std::optional<ObjRef> over = std::nullopt);

// Checks every equation of a retract diagram of f through g.
bool is_retract_diagram(const FinCat& cat, MorRef f, MorRef g,
                        const RetractData& rd);

}  // namespace dmc

#endif  // DMC_VIEWS_HPP
