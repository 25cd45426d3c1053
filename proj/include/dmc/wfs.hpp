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

// The weak factorization system (^⊞D, D̄) generated by Id-types:
// f = ρ(f)∘λ(f) through X ×_Y Id(Y).

#ifndef DMC_WFS_HPP
#define DMC_WFS_HPP

#include <optional>
#include <vector>

#include "dmc/id.hpp"
#include "dmc/lifting.hpp"
#include "dmc/views.hpp"

namespace dmc {

struct Factorization {
  MorRef f;
  MorRef lambda;  // X -> M(f)
  ObjRef mid;     // M(f) = X ×_Y Id(Y)
  MorRef rho;     // M(f) -> Y
  PullbackResult pb_witness;  // pullback(π_0∘ε_Y, f)
};

// Id-structure of Y -> 1 for the least terminal.
const IdEntry& terminal_id(const FinCat& cat, const IdAssignment& ida, ObjRef y);

// `left` may carry a precomputed ^⊞D. Throws Refutation when λ ∉ ^⊞D or
// ρ ∉ D, PreconditionError when the pullback is missing.
Factorization factorize(const FinCat& cat, const MorClass& d,
                        const IdAssignment& ida, MorRef f,
                        const MorClass* left = nullptr);

std::vector<Factorization> factorize_all(const FinCat& cat, const MorClass& d,
                                         const IdAssignment& ida);

// f as a retract of ρ(f) over Y, via a lift s of λ(f) against f.
// `dbar_class` and `left` may carry precomputed D̄ and ^⊞D.
RetractData exhibit_retract_of_rho(const FinCat& cat, const MorClass& d,
                                   const IdAssignment& ida, MorRef f,
                                   const MorClass* dbar_class = nullptr,
                                   const MorClass* left = nullptr);

struct GeneratedWfs {
  Report report;
  bool gate_passed = false;
  std::optional<WfsReport> wfs;
  std::vector<Factorization> factors;
};

// verify_id gate, factorization of every morphism, verify_wfs on
// (^⊞D, D̄), and D̄ = retract closure of D.
GeneratedWfs verify_generated_wfs(const FinCat& cat, const MorClass& d,
                                  const IdAssignment& ida);

}  // namespace dmc

#endif  // DMC_WFS_HPP
