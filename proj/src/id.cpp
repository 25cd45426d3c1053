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

#include "dmc/id.hpp"

#include <functional>
#include <sstream>

#include "dmc/axioms.hpp"
#include "dmc/parallel.hpp"

namespace dmc {

const IdEntry& IdAssignment::at(MorRef f) const {
  if (const IdEntry* e = find(f)) return *e;
  throw PreconditionError("no Id-structure for morphism #" + std::to_string(f.index));
}

std::vector<MorRef> IdAssignment::covered() const {
  std::vector<MorRef> out;
  for (std::uint32_t i = 0; i < entries_.size(); ++i)
    if (entries_[i]) out.push_back(MorRef{i});
  return out;
}

IdEntry make_id_entry(const FinCat& cat, MorRef f, MorRef r, MorRef eps) {
  if (cat.src(r) != cat.src(f) || cat.dst(r) != cat.src(eps))
    throw ModelError("Id-structure of " + cat.morphism_name(f) + " is mistyped");
  for (const PullbackResult& sq : all_pullbacks(cat, f, f)) {
    if (sq.apex != cat.dst(eps)) continue;
    const MorRef id = cat.identity(cat.src(f));
    return IdEntry{f, cat.src(eps), r, eps, sq.mediate(cat, id, id), sq};
  }
  throw ModelError("eps of " + cat.morphism_name(f) +
                   " does not land in a pullback of it along itself");
}

MorRef iota(const FinCat& cat, const IdEntry& e) {
  return cat.compose(e.f, e.square.proj0, e.eps);
}

MorRef leg(const FinCat& cat, const IdEntry& e, int i) {
  return cat.compose(i == 0 ? e.square.proj0 : e.square.proj1, e.eps);
}

MorRef square_map(const FinCat& cat, const IdEntry& d, const IdEntry& d2, MorRef m) {
  return d2.square.mediate(cat, cat.compose(m, d.square.proj0),
                           cat.compose(m, d.square.proj1));
}

MorRef transported_r(const FinCat& cat, const IdEntry& e, MorRef alpha,
                     const PullbackResult& pb) {
  return pb.mediate(cat, cat.compose(e.r, alpha), cat.identity(cat.src(alpha)));
}

std::optional<MorRef> FunctorialIdAssignment::action(MorRef d, MorRef d2,
                                                     MorRef m) const {
  auto it = action_.find({d.index, d2.index, m.index});
  if (it == action_.end()) return std::nullopt;
  return it->second;
}

std::vector<SliceArrow> display_slice_arrows(const FinCat& cat, const MorClass& d) {
  std::vector<SliceArrow> out;
  const auto members = d.members();
  for (MorRef a : members)
    for (MorRef b : members) {
      if (cat.dst(a) != cat.dst(b)) continue;
      for (MorRef m : cat.hom(cat.src(a), cat.src(b)))
        if (cat.compose(b, m) == a) out.push_back({a, b, m});
    }
  return out;
}

namespace {

std::string witness(const FinCat& cat,
                    std::initializer_list<std::pair<const char*, MorRef>> parts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, m] : parts) {
    os << (first ? "" : ",") << k << "=" << cat.morphism_name(m);
    first = false;
  }
  return os.str();
}

void clause(Report& r, const FinCat& cat, const char* check,
            const std::vector<std::string>& bad, const std::string& what) {
  if (bad.empty())
    r.pass(check, cat.name());
  else
    r.fail(check, cat.name(), what, bad);
}

bool factorizes(const FinCat& cat, const IdEntry& e) {
  return cat.try_compose(e.eps, e.r) == e.diag;
}

// Clauses (1) and (2) plus the ι_f remarks. Returns the entries that passed
// clause (1), which are the ones whose transports are defined.
std::vector<const IdEntry*> check_factorizations(const FinCat& cat, const MorClass& d,
                                                 const IdAssignment& ida, Report& r) {
  std::vector<std::string> missing, fact, eps, iot;
  std::vector<const IdEntry*> good;
  for (MorRef f : d.members()) {
    const IdEntry* e = ida.find(f);
    if (!e) {
      missing.push_back(cat.morphism_name(f));
      continue;
    }
    if (!factorizes(cat, *e)) {
      fact.push_back(cat.morphism_name(f));
    } else {
      good.push_back(e);
      if (cat.compose(iota(cat, *e), e->r) != f || !d.contains(iota(cat, *e)))
        iot.push_back(cat.morphism_name(f));
    }
    if (!d.contains(e->eps)) eps.push_back(witness(cat, {{"f", f}, {"eps", e->eps}}));
  }
  clause(r, cat, "id.coverage", missing, "display maps without Id-structure");
  clause(r, cat, "id.factorization", fact, "eps∘r differs from the diagonal");
  clause(r, cat, "id.eps_display", eps, "eps outside D");
  clause(r, cat, "id.iota", iot, "iota∘r != f or iota outside D");
  return good;
}

struct TransportJob {
  const IdEntry* e;
  MorRef alpha;
  int i;
};

// 0 ok, 1 outside ^⊞D, 2 pullback missing
char transport_state(const FinCat& cat, const MorClass& left, const TransportJob& j) {
  const auto pb = pullback(cat, leg(cat, *j.e, j.i), j.alpha);
  if (!pb) return 2;
  return left.contains(transported_r(cat, *j.e, j.alpha, *pb)) ? 0 : 1;
}

bool entry_transports(const FinCat& cat, const MorClass& left, const IdEntry& e) {
  for (MorRef a : cat.morphisms_into(cat.src(e.f)))
    for (int i = 0; i < 2; ++i)
      if (transport_state(cat, left, {&e, a, i}) != 0) return false;
  return true;
}

struct MlJob {
  const IdEntry* e;
  MorRef sigma;
};

// σ*r_d : σ*A -> σ*Id(d), with the apex of σ*Id(d).
std::optional<std::pair<MorRef, ObjRef>> ml_transport(const FinCat& cat,
                                                      const IdEntry& e,
                                                      MorRef sigma) {
  const auto pb_id = pullback(cat, iota(cat, e), sigma);
  const auto pb_a = pullback(cat, e.f, sigma);
  if (!pb_id || !pb_a) return std::nullopt;
  const MorRef t =
      pb_id->mediate(cat, cat.compose(e.r, pb_a->proj0), pb_a->proj1);
  return std::make_pair(t, pb_id->apex);
}

Report ml_report(const FinCat& cat, const MorClass& d, const IdAssignment& ida,
                 bool parametrized) {
  Report r;
  const auto good = check_factorizations(cat, d, ida, r);
  const MorClass left = left_complement(cat, d);
  std::vector<MlJob> jobs;
  for (const IdEntry* e : good)
    for (MorRef s : cat.morphisms_into(cat.dst(e->f))) jobs.push_back({e, s});
  struct Outcome {
    char state = 0;  // 0 ok, 1 outside, 2 missing pullback
    std::vector<MorRef> bad_theta;
  };
  const auto out = parallel_map<Outcome>(jobs.size(), [&](std::size_t k) {
    Outcome o;
    const auto t = ml_transport(cat, *jobs[k].e, jobs[k].sigma);
    if (!t) {
      o.state = 2;
      return o;
    }
    if (!left.contains(t->first)) o.state = 1;
    if (parametrized) {
      for (MorRef theta : cat.morphisms_into(t->second)) {
        if (!d.contains(theta)) continue;
        const auto pb = pullback(cat, t->first, theta);
        if (!pb || !left.contains(pb->proj1)) o.bad_theta.push_back(theta);
      }
    }
    return o;
  });
  std::vector<std::string> missing, bad, bad_param;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const std::string w =
        witness(cat, {{"d", jobs[k].e->f}, {"sigma", jobs[k].sigma}});
    if (out[k].state == 2) missing.push_back(w);
    if (out[k].state == 1) bad.push_back(w);
    for (MorRef th : out[k].bad_theta)
      bad_param.push_back(w + ",theta=" + cat.morphism_name(th));
  }
  clause(r, cat, "ml.pullbacks", missing, "missing pullbacks for sigma*Id(d)");
  clause(r, cat, "ml.transport", bad, "sigma*r_d outside the left class");
  if (parametrized)
    clause(r, cat, "param_ml.transport", bad_param,
           "theta*(sigma*r_d) outside the left class");
  return r;
}

}  // namespace

Report verify_id(const FinCat& cat, const MorClass& d, const IdAssignment& ida) {
  Report r;
  const auto good = check_factorizations(cat, d, ida, r);
  const MorClass left = left_complement(cat, d);
  std::vector<TransportJob> jobs;
  for (const IdEntry* e : good)
    for (MorRef a : cat.morphisms_into(cat.src(e->f)))
      for (int i = 0; i < 2; ++i) jobs.push_back({e, a, i});
  const auto state = parallel_map<char>(
      jobs.size(), [&](std::size_t k) { return transport_state(cat, left, jobs[k]); });
  std::vector<std::string> bad;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const std::string w = witness(cat, {{"f", jobs[k].e->f}, {"alpha", jobs[k].alpha}}) +
                          ",i=" + std::to_string(jobs[k].i);
    if (state[k] == 2) {
      r.fail("id.transport_pullback", cat.name(),
             "pullback of pi_i∘eps along alpha does not exist", {w});
      return r;
    }
    if (state[k] == 1) bad.push_back(w);
  }
  clause(r, cat, "id.transport", bad, "alpha*r_f outside the left class");
  return r;
}

Report verify_ml_id(const FinCat& cat, const MorClass& d, const IdAssignment& ida) {
  return ml_report(cat, d, ida, false);
}

Report verify_param_ml_id(const FinCat& cat, const MorClass& d,
                          const IdAssignment& ida) {
  return ml_report(cat, d, ida, true);
}

MorRef param_ml_pullback(const FinCat& cat, const MorClass& d, const IdEntry& e,
                         MorRef sigma, MorRef theta) {
  if (!d.contains(theta))
    throw PreconditionError(cat.morphism_name(theta) + " is not a display map");
  const auto t = ml_transport(cat, e, sigma);
  if (!t) throw PreconditionError("sigma*Id(d) does not exist");
  if (cat.dst(theta) != t->second)
    throw PreconditionError(cat.morphism_name(theta) + " does not land in sigma*Id(d)");
  const auto pb = pullback(cat, t->first, theta);
  if (!pb) throw PreconditionError("theta*(sigma*r_d) does not exist");
  return pb->proj1;
}

Report verify_functorial_id(const FinCat& cat, const MorClass& d,
                            const FunctorialIdAssignment& fida) {
  Report r;
  const IdAssignment& ida = fida.base();
  for (MorRef f : d.members())
    if (!ida.find(f)) {
      r.fail("fid.base", cat.name(), "display map without Id-structure",
             {cat.morphism_name(f)});
      return r;
    }
  const auto arrows = display_slice_arrows(cat, d);
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, MorRef> k;
  std::vector<std::string> missing, typing, nat_r, nat_eps, unit, comp;
  auto name = [&](const SliceArrow& a) {
    return witness(cat, {{"d", a.d}, {"d2", a.d2}, {"m", a.m}});
  };
  for (const SliceArrow& a : arrows) {
    const auto act = fida.action(a.d, a.d2, a.m);
    if (!act) {
      missing.push_back(name(a));
      continue;
    }
    const IdEntry& e = ida.at(a.d);
    const IdEntry& e2 = ida.at(a.d2);
    if (cat.src(*act) != e.idobj || cat.dst(*act) != e2.idobj ||
        cat.compose(iota(cat, e2), *act) != iota(cat, e)) {
      typing.push_back(name(a));
      continue;
    }
    k[{a.d.index, a.d2.index, a.m.index}] = *act;
    if (cat.compose(*act, e.r) != cat.compose(e2.r, a.m)) nat_r.push_back(name(a));
    if (cat.compose(e2.eps, *act) != cat.compose(square_map(cat, e, e2, a.m), e.eps))
      nat_eps.push_back(name(a));
    if (a.d == a.d2 && cat.is_identity(a.m) && *act != cat.identity(e.idobj))
      unit.push_back(name(a));
  }
  for (const SliceArrow& a : arrows) {
    auto ka = k.find({a.d.index, a.d2.index, a.m.index});
    if (ka == k.end()) continue;
    for (const SliceArrow& b : arrows) {
      if (b.d != a.d2) continue;
      auto kb = k.find({b.d.index, b.d2.index, b.m.index});
      const MorRef bm = cat.compose(b.m, a.m);
      auto kc = k.find({a.d.index, b.d2.index, bm.index});
      if (kb == k.end() || kc == k.end()) continue;
      if (cat.compose(kb->second, ka->second) != kc->second)
        comp.push_back(name(a) + ";" + name(b));
    }
  }
  clause(r, cat, "fid.coverage", missing, "morphisms of D/Y without action");
  clause(r, cat, "fid.typing", typing, "action not a morphism Id(d) -> Id(d') over Y");
  clause(r, cat, "fid.naturality_r", nat_r, "Id(m)∘r_d != r_d'∘m");
  clause(r, cat, "fid.naturality_eps", nat_eps, "eps_d'∘Id(m) != (m×m)∘eps_d");
  clause(r, cat, "fid.identity", unit, "Id(id) != id");
  clause(r, cat, "fid.composition", comp, "Id(m'∘m) != Id(m')∘Id(m)");
  return r;
}

std::optional<IdAssignment> search_id(const FinCat& cat, const MorClass& d) {
  const MorClass left = left_complement(cat, d);
  const auto members = d.members();
  const auto found = parallel_map<std::optional<IdEntry>>(
      members.size(), [&](std::size_t k) -> std::optional<IdEntry> {
        const MorRef f = members[k];
        const auto sq = pullback(cat, f, f);
        if (!sq) return std::nullopt;
        const MorRef id = cat.identity(cat.src(f));
        const MorRef diag = sq->mediate(cat, id, id);
        for (ObjRef obj : cat.objects())
          for (MorRef r : cat.hom(cat.src(f), obj))
            for (MorRef eps : cat.hom(obj, sq->apex)) {
              if (!d.contains(eps) || cat.compose(eps, r) != diag) continue;
              const IdEntry e{f, obj, r, eps, diag, *sq};
              if (d.contains(iota(cat, e)) && entry_transports(cat, left, e)) return e;
            }
        return std::nullopt;
      });
  IdAssignment out(cat.num_morphisms());
  for (const auto& e : found) {
    if (!e) return std::nullopt;
    out.set(*e);
  }
  return out;
}

std::optional<FunctorialIdAssignment> search_functorial_action(
    const FinCat& cat, const MorClass& d, const IdAssignment& ida,
    std::size_t budget) {
  const auto arrows = display_slice_arrows(cat, d);
  const std::size_t n = arrows.size();
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    index[{arrows[i].d.index, arrows[i].d2.index, arrows[i].m.index}] = i;

  std::vector<std::vector<MorRef>> cand(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SliceArrow& a = arrows[i];
    const IdEntry& e = ida.at(a.d);
    const IdEntry& e2 = ida.at(a.d2);
    if (a.d == a.d2 && cat.is_identity(a.m)) {
      cand[i] = {cat.identity(e.idobj)};
      continue;
    }
    const MorRef mm = square_map(cat, e, e2, a.m);
    for (MorRef k : cat.hom(e.idobj, e2.idobj))
      if (cat.compose(iota(cat, e2), k) == iota(cat, e) &&
          cat.compose(k, e.r) == cat.compose(e2.r, a.m) &&
          cat.compose(e2.eps, k) == cat.compose(mm, e.eps))
        cand[i].push_back(k);
    if (cand[i].empty()) return std::nullopt;
  }
  // Composition constraints (a, b, b∘a), attached to their largest index.
  struct Tri {
    std::size_t a, b, c;
  };
  std::vector<std::vector<Tri>> at(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (arrows[j].d != arrows[i].d2) continue;
      const MorRef bm = cat.compose(arrows[j].m, arrows[i].m);
      const std::size_t c = index.at({arrows[i].d.index, arrows[j].d2.index, bm.index});
      at[std::max({i, j, c})].push_back({i, j, c});
    }
  std::vector<MorRef> choice(n);
  std::size_t nodes = 0;
  auto consistent = [&](std::size_t i) {
    for (const Tri& t : at[i])
      if (cat.compose(choice[t.b], choice[t.a]) != choice[t.c]) return false;
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    for (MorRef k : cand[i]) {
      if (++nodes > budget)
        throw BudgetExceeded("functorial action search exceeded " +
                             std::to_string(budget) + " nodes");
      choice[i] = k;
      if (consistent(i) && go(i + 1)) return true;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  FunctorialIdAssignment out(ida);
  for (std::size_t i = 0; i < n; ++i)
    out.set_action(arrows[i].d, arrows[i].d2, arrows[i].m, choice[i]);
  return out;
}

Report crosscheck_id_variants(const FinCat& cat, const MorClass& d,
                              const IdAssignment& ida) {
  const bool pm = verify_id(cat, d, ida).passed();
  const bool pml = verify_param_ml_id(cat, d, ida).passed();
  const bool stable = check_llp_pullback_stable(cat, d).holds;
  Report r;
  std::ostringstream obs;
  obs << "paulin_mohring=" << (pm ? "pass" : "fail")
      << " param_martin_lof=" << (pml ? "pass" : "fail")
      << " llp_pullback_stable=" << (stable ? "yes" : "no");
  r.pass("variants.observed", cat.name(), obs.str());
  if (pml && !pm)
    r.refute("variants.param_ml_implies_pm", cat.name(),
             "parametrized Martin-Löf holds but Paulin-Mohring fails");
  else
    r.pass("variants.param_ml_implies_pm", cat.name());
  if (pm && stable && !pml)
    r.refute("variants.pm_and_stable_implies_param_ml", cat.name(),
             "Paulin-Mohring and stability hold but parametrized Martin-Löf fails");
  else
    r.pass("variants.pm_and_stable_implies_param_ml", cat.name());
  return r;
}

}  // namespace dmc
