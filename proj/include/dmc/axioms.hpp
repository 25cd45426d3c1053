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

// Display map category axioms, Σ-closure and Π-types.

#ifndef DMC_AXIOMS_HPP
#define DMC_AXIOMS_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dmc/fincat.hpp"
#include "dmc/lifting.hpp"
#include "dmc/morclass.hpp"
#include "dmc/pullback.hpp"
#include "dmc/report.hpp"

namespace dmc {

// Isos in D, maps to the terminal in D, pullbacks of D along everything
// exist and stay in D. Fails with a single record when there is no terminal.
Report check_dmc(const FinCat& cat, const MorClass& d);

// g∘f ∈ D for composable f, g ∈ D.
Report check_sigma(const FinCat& cat, const MorClass& d);

// For each y into Y, the transpose C/Y(y, pi) -> C/X(f*y, g), m ↦ ev∘f*(m).
struct TransposeRow {
  MorRef y;
  std::vector<std::pair<MorRef, MorRef>> pairs;  // (m, ev∘f*(m)), m ascending
};

struct PiResult {
  MorRef f;
  MorRef g;
  MorRef pi;           // into Y
  PullbackResult pb;   // pullback(pi, f): proj0 to dom(pi), proj1 = f*pi
  MorRef ev;           // f*pi -> g over X
  std::vector<TransposeRow> transpose_table;
};

// Least-index (pi ∈ D, ev) with a bijective transpose for every y into Y.
// Requires f, g ∈ D and dst(g) == src(f).
std::optional<PiResult> find_pi(const FinCat& cat, const MorClass& d, MorRef f,
                                MorRef g);

// Checks the universal property of a given (pi, ev) and fills the table.
std::optional<PiResult> check_universal_element(const FinCat& cat, MorRef f,
                                                MorRef g, MorRef pi, MorRef ev);

using PiTable = std::map<std::pair<std::uint32_t, std::uint32_t>, PiResult>;

struct PiCheck {
  Report report;
  PiTable table;  // keyed by (f, g) indices
};

PiCheck check_pi(const FinCat& cat, const MorClass& d);

// The unique m : dom(a.pi) -> dom(b.pi) over Y with b.ev∘f*(m) = a.ev,
// returned only when it is an isomorphism.
std::optional<MorRef> pi_comparison(const FinCat& cat, const PiResult& a,
                                    const PiResult& b);

struct StabilityCheck {
  bool holds = true;
  std::optional<MorRef> left;     // l ∈ ^⊞D
  std::optional<MorRef> display;  // d ∈ D
  std::optional<MorRef> pulled;   // d*l
  std::optional<LiftSquare> square;
};

// Every pullback of a member of ^⊞D along a member of D is again in ^⊞D.
StabilityCheck check_llp_pullback_stable(const FinCat& cat, const MorClass& d);

}  // namespace dmc

#endif  // DMC_AXIOMS_HPP
