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

// Idempotents, their splittings, and the Karoubi envelope.

#ifndef DMC_CAUCHY_HPP
#define DMC_CAUCHY_HPP

#include <optional>
#include <vector>

#include "dmc/fincat.hpp"

namespace dmc {

// incl∘retr = e and retr∘incl = id.
struct Splitting {
  MorRef e;
  ObjRef retract_obj;
  MorRef incl;
  MorRef retr;
};

bool is_idempotent(const FinCat& cat, MorRef e);
std::vector<MorRef> idempotents(const FinCat& cat);

bool is_splitting(const FinCat& cat, const Splitting& s);

// Least (R, i, r) in that order. Throws PreconditionError if e is not
// idempotent.
std::optional<Splitting> split_idempotent(const FinCat& cat, MorRef e);
std::vector<Splitting> all_splittings(const FinCat& cat, MorRef e);

struct CauchyCheck {
  bool complete = true;
  std::optional<MorRef> unsplit;
};
CauchyCheck is_cauchy_complete(const FinCat& cat);

// q coequalizes (e, id) and every h with h∘e = h factors uniquely through q.
bool is_coequalizer_of(const FinCat& cat, MorRef e, MorRef q);
// r of the splitting is the coequalizer of (e, id).
bool verify_splitting_coequalizer(const FinCat& cat, MorRef e, const Splitting& s);
// The splitting (i, q) induced by a coequalizer q of (e, id), if q is one.
std::optional<Splitting> splitting_from_coequalizer(const FinCat& cat, MorRef e,
                                                    MorRef q);

struct SquareSplitting {
  MorRef induced;  // sf.retr∘c∘se.incl
  bool unique = false;
  bool iso = false;
};

// For c with c∘e = f∘c. Throws PreconditionError on non-commuting data and
// Refutation when the induced morphism is not unique, or not an iso while c is.
SquareSplitting split_square(const FinCat& cat, MorRef e, MorRef f, MorRef c,
                             const Splitting& se, const Splitting& sf);

// The unique iso R1 -> R2 commuting with both splittings. Throws Refutation
// if there is none or more than one.
MorRef splitting_comparison_iso(const FinCat& cat, MorRef e, const Splitting& s1,
                                const Splitting& s2);

struct KaroubiEnvelope {
  FinCat cat;
  std::vector<ObjRef> base_object;      // envelope object -> underlying object
  std::vector<MorRef> base_idempotent;  // envelope object -> its idempotent
  std::vector<MorRef> base_morphism;    // envelope morphism -> underlying
  std::vector<ObjRef> embed_object;     // object C -> (C, id)
  std::vector<MorRef> embed_morphism;   // morphism -> itself between id pairs
};

KaroubiEnvelope karoubi_envelope(const FinCat& cat);

}  // namespace dmc

#endif  // DMC_CAUCHY_HPP
