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

// Identity types: factorizations Δ_f = ε_f∘r_f of fiberwise diagonals, their
// functorial action on D/Y, and the Paulin-Mohring, Martin-Löf and
// parametrized Martin-Löf transport conditions.

#ifndef DMC_ID_HPP
#define DMC_ID_HPP

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "dmc/fincat.hpp"
#include "dmc/lifting.hpp"
#include "dmc/morclass.hpp"
#include "dmc/pullback.hpp"
#include "dmc/report.hpp"

namespace dmc {

struct IdEntry {
  MorRef f;
  ObjRef idobj;
  MorRef r;    // X -> Id(f)
  MorRef eps;  // Id(f) -> X ×_Y X
  MorRef diag;
  PullbackResult square;  // pullback(f, f), the target of eps
};

// One entry per member of D, indexed by morphism.
class IdAssignment {
 public:
  IdAssignment() = default;
  explicit IdAssignment(std::size_t universe) : entries_(universe) {}

  void set(const IdEntry& e) { entries_[e.f.index] = e; }
  const IdEntry* find(MorRef f) const {
    return f.index < entries_.size() && entries_[f.index] ? &*entries_[f.index]
                                                          : nullptr;
  }
  const IdEntry& at(MorRef f) const;
  std::size_t universe() const { return entries_.size(); }
  std::vector<MorRef> covered() const;

 private:
  std::vector<std::optional<IdEntry>> entries_;
};

// Builds the entry for (f, idobj, r, eps): picks the pullback representative
// of (f, f) whose apex is dst(eps) and derives the diagonal from it.
// Throws ModelError when no such representative exists.
IdEntry make_id_entry(const FinCat& cat, MorRef f, MorRef r, MorRef eps);

// ι_f = f∘π_0∘ε_f.
MorRef iota(const FinCat& cat, const IdEntry& e);
// π_i∘ε_f : Id(f) -> X.
MorRef leg(const FinCat& cat, const IdEntry& e, int i);
// m × m : X ×_Y X -> X' ×_Y X' for a morphism m : d -> d' of C/Y.
MorRef square_map(const FinCat& cat, const IdEntry& d, const IdEntry& d2, MorRef m);

// α*r_f along the leg i, formed in the given pullback of (leg_i, α).
MorRef transported_r(const FinCat& cat, const IdEntry& e, MorRef alpha,
                     const PullbackResult& pb);

// Action Id(m) : Id(d) -> Id(d') for morphisms m : d -> d' of D/Y,
// keyed by (d, d', m).
class FunctorialIdAssignment {
 public:
  FunctorialIdAssignment() = default;
  explicit FunctorialIdAssignment(IdAssignment base) : base_(std::move(base)) {}

  const IdAssignment& base() const { return base_; }
  IdAssignment& base() { return base_; }
  void set_action(MorRef d, MorRef d2, MorRef m, MorRef k) {
    action_[{d.index, d2.index, m.index}] = k;
  }
  std::optional<MorRef> action(MorRef d, MorRef d2, MorRef m) const;
  const std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, MorRef>&
  actions() const {
    return action_;
  }

 private:
  IdAssignment base_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, MorRef> action_;
};

// A morphism m : d -> d' of D/Y.
struct SliceArrow {
  MorRef d;
  MorRef d2;
  MorRef m;
};

// Every morphism of D/Y for every Y, ordered by (d, d', m).
std::vector<SliceArrow> display_slice_arrows(const FinCat& cat, const MorClass& d);

Report verify_id(const FinCat& cat, const MorClass& d, const IdAssignment& ida);
Report verify_functorial_id(const FinCat& cat, const MorClass& d,
                            const FunctorialIdAssignment& fida);
Report verify_ml_id(const FinCat& cat, const MorClass& d, const IdAssignment& ida);
// Includes the Martin-Löf clause.
Report verify_param_ml_id(const FinCat& cat, const MorClass& d,
                          const IdAssignment& ida);

// θ*(σ*r_d) for a display map θ into σ*Id(d). Throws PreconditionError when
// θ is not in D or does not land in σ*Id(d).
MorRef param_ml_pullback(const FinCat& cat, const MorClass& d, const IdEntry& e,
                         MorRef sigma, MorRef theta);

// Per display map, the least (Id(f), r, ε) in (object, r, ε) order that
// passes every clause of verify_id.
std::optional<IdAssignment> search_id(const FinCat& cat, const MorClass& d);

// Backtracking search for a strictly functorial action over the base.
// Throws BudgetExceeded after `budget` search nodes.
std::optional<FunctorialIdAssignment> search_functorial_action(
    const FinCat& cat, const MorClass& d, const IdAssignment& ida,
    std::size_t budget = 1'000'000);

// Both directions of the equivalence between the parametrized Martin-Löf and
// Paulin-Mohring conditions, as observed on this instance.
Report crosscheck_id_variants(const FinCat& cat, const MorClass& d,
                              const IdAssignment& ida);

}  // namespace dmc

#endif  // DMC_ID_HPP
