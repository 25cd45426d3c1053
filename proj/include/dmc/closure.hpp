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

// Display map structure on D̄ = (^⊞D)^⊞ built from the structure on D, for a
// Cauchy complete ambient category.

#ifndef DMC_CLOSURE_HPP
#define DMC_CLOSURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dmc/axioms.hpp"
#include "dmc/cauchy.hpp"
#include "dmc/id.hpp"
#include "dmc/views.hpp"
#include "dmc/wfs.hpp"

namespace dmc {

struct ClosurePullback {
  PullbackResult result;      // pullback of e along alpha
  RetractData retract;        // e as a retract of rho(e) over Y
  PullbackResult along;       // pullback(rho(e), alpha)
  MorRef idempotent;          // on the apex of `along`
  Splitting splitting;
  MorRef comparison;          // result apex -> canonical pullback apex
};

// Throws Refutation if the idempotent does not split, the universal property
// fails, or the result disagrees with the direct pullback.
ClosurePullback closure_pullback(const FinCat& cat, const MorClass& d,
                                 const IdAssignment& ida, MorRef e, MorRef alpha);

struct ClosureIdEntry {
  MorRef e;
  RetractData retract;    // e retract of d = rho(e)
  MorRef d;
  MorRef idempotent;      // Id(i∘s) on Id(d)
  Splitting splitting;
  RetractData r_retract;  // r_e retract of r_d
  RetractData eps_retract;  // eps_e retract of eps_d
};

struct ClosureId {
  FunctorialIdAssignment fida;  // over dbar(D)
  std::vector<ClosureIdEntry> provenance;
};

// Throws Refutation on any failed equation of the construction.
ClosureId closure_id(const FinCat& cat, const MorClass& d,
                     const FunctorialIdAssignment& fida);

// α*r_e as a retract of (i∘α)*r_d, for each leg. Throws Refutation if the
// diagram fails to commute.
RetractData transport_retract(const FinCat& cat, const ClosureId& cid,
                              const IdAssignment& base, MorRef e, MorRef alpha,
                              int leg_index);

struct ClosurePi {
  PiResult result;
  MorRef big_pi;          // Π_{ρf} M(ρg)
  MorRef idempotent;      // on dom(big_pi)
  Splitting splitting;
  RetractData retract;    // result.pi retract of big_pi over Y
  MorRef lift_a, lift_b, lift_c;
};

// `pid` must contain Π_{ρf} M(ρg) or it is computed on demand.
ClosurePi closure_pi(const FinCat& cat, const MorClass& d, const IdAssignment& ida,
                     const PiTable& pid, MorRef f, MorRef g);

struct ClosureCertificate {
  MorClass dbar;
  Report preconditions;
  Report dmc_report;
  Report sigma_report;
  Report id_report;
  Report fid_report;
  std::optional<Report> pi_report;
  std::vector<std::string> provenance;

  bool preconditions_hold() const { return preconditions.passed(); }
  bool valid() const;
  Report combined() const;
};

ClosureCertificate verify_main_theorem(const FinCat& cat, const MorClass& d,
                                       const FunctorialIdAssignment& fida,
                                       bool with_pi);

struct ReflectionCheck {
  bool dbar_in_r = false;
  bool d_in_r = false;
  bool holds() const { return dbar_in_r == d_in_r; }
};

// Requires dbar(R) = R; throws PreconditionError otherwise.
ReflectionCheck check_reflection(const FinCat& cat, const MorClass& d,
                                 const MorClass& r);

}  // namespace dmc

#endif  // DMC_CLOSURE_HPP
