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

// Lifting problems and the class algebra built on them: left/right
// complements, (^⊞D)^⊞, retract closure and weak factorization checks.

#ifndef DMC_LIFTING_HPP
#define DMC_LIFTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "dmc/fincat.hpp"
#include "dmc/morclass.hpp"
#include "dmc/report.hpp"

namespace dmc {

//   A --top--> X
//   |          |
// left       right
//   v          v
//   B -bottom> Y
struct LiftSquare {
  MorRef left;
  MorRef right;
  MorRef top;
  MorRef bottom;
};

std::string describe(const FinCat& cat, const LiftSquare& sq);

bool commutes(const FinCat& cat, const LiftSquare& sq);

// Least-index h : B -> X with h∘left = top and right∘h = bottom.
// Throws PreconditionError on a non-commuting square.
std::optional<MorRef> solve_lift(const FinCat& cat, const LiftSquare& sq);
std::vector<MorRef> all_lifts(const FinCat& cat, const LiftSquare& sq);

// f ⧄ g: every commuting square from f to g has a lift.
bool lifts_against(const FinCat& cat, MorRef f, MorRef g);
// First unliftable square from f to g in (top, bottom) order.
std::optional<LiftSquare> first_unliftable(const FinCat& cat, MorRef f, MorRef g);

struct LiftCheck {
  bool holds = true;
  std::optional<LiftSquare> witness;
};

LiftCheck llp(const FinCat& cat, MorRef f, const MorClass& cls);
LiftCheck rlp(const FinCat& cat, MorRef g, const MorClass& cls);

// ^⊞M and M^⊞. Parallel over candidate morphisms.
MorClass left_complement(const FinCat& cat, const MorClass& cls);
MorClass right_complement(const FinCat& cat, const MorClass& cls);
// (^⊞M)^⊞.
MorClass dbar(const FinCat& cat, const MorClass& cls);

// Least fixpoint of adding every retract (in C^→) of a member.
MorClass retract_closure(const FinCat& cat, const MorClass& cls);

// Per-morphism factorization f = r∘l, indexed by morphism.
struct FactorPair {
  MorRef l;
  MorRef r;
};

struct WfsReport {
  std::vector<MorRef> unfactored;  // morphisms whose assigned l ∉ L or r ∉ R
  bool factorization_ok = true;
  bool left_is_llp = true;  // L == ^⊞R
  std::optional<MorRef> left_mismatch;
  std::optional<LiftSquare> left_square;
  bool right_is_rlp = true;  // R == L^⊞
  std::optional<MorRef> right_mismatch;
  std::optional<LiftSquare> right_square;

  bool passed() const { return factorization_ok && left_is_llp && right_is_rlp; }
  Report to_report(const FinCat& cat) const;
};

// Throws PreconditionError if some assigned pair does not compose to f.
WfsReport verify_wfs(const FinCat& cat, const MorClass& left,
                     const MorClass& right, const std::vector<FactorPair>& factor);

namespace reference {
// Serial kernels that enumerate every square and search every lift.
bool lifts_against(const FinCat& cat, MorRef f, MorRef g);
MorClass left_complement(const FinCat& cat, const MorClass& cls);
MorClass right_complement(const FinCat& cat, const MorClass& cls);
}  // namespace reference

}  // namespace dmc

#endif  // DMC_LIFTING_HPP
