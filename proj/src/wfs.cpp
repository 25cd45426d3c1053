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

#include "dmc/wfs.hpp"

#include "dmc/parallel.hpp"

namespace dmc {

const IdEntry& terminal_id(const FinCat& cat, const IdAssignment& ida, ObjRef y) {
  const auto t = terminal(cat);
  if (!t) throw PreconditionError(cat.name() + " has no terminal object");
  const MorRef ty = to_terminal(cat, y, *t);
  const IdEntry* e = ida.find(ty);
  if (!e)
    throw PreconditionError("no Id-structure for " + cat.morphism_name(ty));
  return *e;
}

Factorization factorize(const FinCat& cat, const MorClass& d,
                        const IdAssignment& ida, MorRef f, const MorClass* left) {
  const IdEntry& e = terminal_id(cat, ida, cat.dst(f));
  const auto pb = pullback(cat, leg(cat, e, 0), f);
  if (!pb)
    throw PreconditionError("X ×_Y Id(Y) does not exist for " + cat.morphism_name(f));
  const MorRef lambda =
      pb->mediate(cat, cat.compose(e.r, f), cat.identity(cat.src(f)));
  const MorRef rho = cat.compose(leg(cat, e, 1), pb->proj0);
  if (cat.compose(rho, lambda) != f)
    throw Refutation("factorize", "rho∘lambda != " + cat.morphism_name(f));
  MorClass computed;
  if (!left) {
    computed = left_complement(cat, d);
    left = &computed;
  }
  if (!left->contains(lambda))
    throw Refutation("factorize", "lambda(" + cat.morphism_name(f) + ") = " +
                                      cat.morphism_name(lambda) +
                                      " lacks the left lifting property");
  if (!d.contains(rho))
    throw Refutation("factorize", "rho(" + cat.morphism_name(f) + ") = " +
                                      cat.morphism_name(rho) + " is not in D");
  return Factorization{f, lambda, pb->apex, rho, *pb};
}

std::vector<Factorization> factorize_all(const FinCat& cat, const MorClass& d,
                                         const IdAssignment& ida) {
  const MorClass left = left_complement(cat, d);
  return parallel_map<Factorization>(cat.num_morphisms(), [&](std::size_t i) {
    return factorize(cat, d, ida, MorRef{static_cast<std::uint32_t>(i)}, &left);
  });
}

RetractData exhibit_retract_of_rho(const FinCat& cat, const MorClass& d,
                                   const IdAssignment& ida, MorRef f,
                                   const MorClass* dbar_class,
                                   const MorClass* left) {
  MorClass computed;
  if (!dbar_class) {
    computed = dbar(cat, d);
    dbar_class = &computed;
  }
  if (!dbar_class->contains(f))
    throw PreconditionError(cat.morphism_name(f) + " is not in dbar(D)");
  const Factorization fac = factorize(cat, d, ida, f, left);
  const ObjRef y = cat.dst(f);
  const auto s = solve_lift(
      cat, LiftSquare{fac.lambda, f, cat.identity(cat.src(f)), fac.rho});
  if (!s)
    throw Refutation("exhibit_retract_of_rho",
                     "lambda(" + cat.morphism_name(f) + ") has no lift against it");
  const RetractData rd{fac.lambda, cat.identity(y), *s, cat.identity(y), y};
  if (!is_retract_diagram(cat, f, fac.rho, rd))
    throw Refutation("exhibit_retract_of_rho", "retract diagram does not commute");
  return rd;
}

GeneratedWfs verify_generated_wfs(const FinCat& cat, const MorClass& d,
                                  const IdAssignment& ida) {
  GeneratedWfs out;
  out.report = verify_id(cat, d, ida);
  if (!out.report.passed()) {
    out.report.fail("wfs.gate", cat.name(), "Id-structure does not verify");
    return out;
  }
  out.gate_passed = true;
  try {
    out.factors = factorize_all(cat, d, ida);
  } catch (const Refutation& e) {
    out.report.refute("wfs.factorize", cat.name(), e.what());
    return out;
  }
  out.report.pass("wfs.factorize", cat.name(),
                  "rho∘lambda = f, lambda in ^⊞D, rho in D for every morphism");
  const MorClass left = left_complement(cat, d);
  const MorClass right = dbar(cat, d);
  std::vector<FactorPair> pairs;
  for (const Factorization& fac : out.factors) pairs.push_back({fac.lambda, fac.rho});
  out.wfs = verify_wfs(cat, left, right, pairs);
  out.report.append(out.wfs->to_report(cat));
  const MorClass rc = retract_closure(cat, d);
  if (rc == right) {
    out.report.pass("wfs.dbar_is_retract_closure", cat.name());
  } else {
    std::vector<std::string> w;
    for (MorRef m : cat.morphisms())
      if (rc.contains(m) != right.contains(m)) w.push_back(cat.morphism_name(m));
    out.report.refute("wfs.dbar_is_retract_closure", cat.name(),
                      "dbar(D) differs from the retract closure of D", w);
  }
  return out;
}

}  // namespace dmc
