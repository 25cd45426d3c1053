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

#include "dmc/closure.hpp"

#include <functional>
#include <sstream>

#include "dmc/parallel.hpp"

namespace dmc {
namespace {

Splitting split_or_refute(const FinCat& cat, MorRef k, const std::string& step) {
  if (!is_idempotent(cat, k))
    throw Refutation(step, cat.morphism_name(k) + " is not idempotent");
  auto s = split_idempotent(cat, k);
  if (!s)
    throw Refutation(step, "idempotent " + cat.morphism_name(k) +
                               " does not split (category not Cauchy complete)");
  return *s;
}

PullbackResult pullback_or_refute(const FinCat& cat, MorRef a, MorRef b,
                                  const std::string& step) {
  auto pb = pullback(cat, a, b);
  if (!pb)
    throw Refutation(step, "pullback of " + cat.morphism_name(a) + " and " +
                               cat.morphism_name(b) + " does not exist");
  return *pb;
}

}  // namespace

ClosurePullback closure_pullback(const FinCat& cat, const MorClass& d,
                                 const IdAssignment& ida, MorRef e, MorRef alpha) {
  if (cat.dst(alpha) != cat.dst(e))
    throw PreconditionError("alpha does not land in the codomain of e");
  const RetractData rd = exhibit_retract_of_rho(cat, d, ida, e);
  const MorRef i = rd.incl_dom;
  const MorRef s = rd.retr_dom;
  const MorRef rho = cat.compose(e, s);
  const PullbackResult along = pullback_or_refute(cat, rho, alpha, "closure_pullback");
  // The retract (i s) of rho induces an idempotent on rho ×_Y A.
  const MorRef k = along.mediate(cat, cat.compose(i, s, along.proj0), along.proj1);
  const Splitting sp = split_or_refute(cat, k, "closure_pullback");
  const MorRef p0 = cat.compose(s, along.proj0, sp.incl);
  const MorRef p1 = cat.compose(along.proj1, sp.incl);
  if (!is_pullback(cat, e, alpha, sp.retract_obj, p0, p1))
    throw Refutation("closure_pullback", "split apex is not a pullback of " +
                                             cat.morphism_name(e) + " along " +
                                             cat.morphism_name(alpha));
  const PullbackResult result{e, alpha, sp.retract_obj, p0, p1};
  const auto direct = pullback(cat, e, alpha);
  if (!direct)
    throw Refutation("closure_pullback", "direct search finds no pullback");
  const auto cmp = pullback_comparison(cat, result, *direct);
  if (!cmp)
    throw Refutation("closure_pullback", "no comparison iso with the direct pullback");
  return ClosurePullback{result, rd, along, k, sp, *cmp};
}

ClosureId closure_id(const FinCat& cat, const MorClass& d,
                     const FunctorialIdAssignment& fida) {
  const IdAssignment& base = fida.base();
  const MorClass left = left_complement(cat, d);
  const MorClass closed = right_complement(cat, left);
  const auto members = closed.members();

  const auto entries = parallel_map<ClosureIdEntry>(members.size(), [&](std::size_t n) {
    const MorRef e = members[n];
    const RetractData rd = exhibit_retract_of_rho(cat, d, base, e, &closed, &left);
    const MorRef i = rd.incl_dom;
    const MorRef s = rd.retr_dom;
    const MorRef dm = cat.compose(e, s);
    const auto k = fida.action(dm, dm, cat.compose(i, s));
    if (!k)
      throw Refutation("closure_id", "no functorial action on i∘s for " +
                                         cat.morphism_name(e));
    const Splitting sp = split_or_refute(cat, *k, "closure_id");
    return ClosureIdEntry{e, rd, dm, *k, sp, {}, {}};
  });

  ClosureId out;
  out.fida = FunctorialIdAssignment(IdAssignment(cat.num_morphisms()));
  for (ClosureIdEntry ce : entries) {
    const MorRef e = ce.e;
    const MorRef i = ce.retract.incl_dom;
    const MorRef s = ce.retract.retr_dom;
    const IdEntry& ed = base.at(ce.d);
    const PullbackResult sq = pullback_or_refute(cat, e, e, "closure_id");
    const MorRef id_e = cat.identity(cat.src(e));
    const MorRef diag = sq.mediate(cat, id_e, id_e);
    const MorRef r = cat.compose(ce.splitting.retr, ed.r, i);
    const MorRef sxs = sq.mediate(cat, cat.compose(s, ed.square.proj0),
                                  cat.compose(s, ed.square.proj1));
    const MorRef ixi = ed.square.mediate(cat, cat.compose(i, sq.proj0),
                                         cat.compose(i, sq.proj1));
    const MorRef eps = cat.compose(sxs, ed.eps, ce.splitting.incl);
    const IdEntry entry{e, ce.splitting.retract_obj, r, eps, diag, sq};
    if (cat.compose(eps, r) != diag)
      throw Refutation("closure_id", "eps_e∘r_e is not the diagonal of " +
                                         cat.morphism_name(e));
    ce.r_retract = {i, ce.splitting.incl, s, ce.splitting.retr, std::nullopt};
    if (!is_retract_diagram(cat, r, ed.r, ce.r_retract))
      throw Refutation("closure_id", "r_e is not a retract of r_d for " +
                                         cat.morphism_name(e));
    ce.eps_retract = {ce.splitting.incl, ixi, ce.splitting.retr, sxs, std::nullopt};
    if (!is_retract_diagram(cat, eps, ed.eps, ce.eps_retract))
      throw Refutation("closure_id", "eps_e is not a retract of eps_d for " +
                                         cat.morphism_name(e));
    out.fida.base().set(entry);
    out.provenance.push_back(ce);
  }

  // Id(m) for m : e -> e' is the map induced on the splittings by
  // Id(i'∘m∘s) : Id(d) -> Id(d').
  std::vector<const ClosureIdEntry*> by_mor(cat.num_morphisms(), nullptr);
  for (const ClosureIdEntry& ce : out.provenance) by_mor[ce.e.index] = &ce;
  for (const SliceArrow& a : display_slice_arrows(cat, closed)) {
    const ClosureIdEntry& x = *by_mor[a.d.index];
    const ClosureIdEntry& y = *by_mor[a.d2.index];
    const MorRef c_m = cat.compose(y.retract.incl_dom, a.m, x.retract.retr_dom);
    const auto c = fida.action(x.d, y.d, c_m);
    if (!c)
      throw Refutation("closure_id", "no functorial action on " +
                                         cat.morphism_name(c_m));
    const SquareSplitting ss =
        split_square(cat, x.idempotent, y.idempotent, *c, x.splitting, y.splitting);
    out.fida.set_action(a.d, a.d2, a.m, ss.induced);
  }
  return out;
}

RetractData transport_retract(const FinCat& cat, const ClosureId& cid,
                              const IdAssignment& base, MorRef e, MorRef alpha,
                              int leg_index) {
  const ClosureIdEntry* ce = nullptr;
  for (const ClosureIdEntry& x : cid.provenance)
    if (x.e == e) ce = &x;
  if (!ce) throw PreconditionError(cat.morphism_name(e) + " has no closure entry");
  const IdEntry& ee = cid.fida.base().at(e);
  const IdEntry& ed = base.at(ce->d);
  const MorRef i = ce->retract.incl_dom;
  const MorRef ia = cat.compose(i, alpha);
  const PullbackResult pe =
      pullback_or_refute(cat, leg(cat, ee, leg_index), alpha, "transport_retract");
  const PullbackResult pd =
      pullback_or_refute(cat, leg(cat, ed, leg_index), ia, "transport_retract");
  const MorRef te = transported_r(cat, ee, alpha, pe);
  const MorRef td = transported_r(cat, ed, ia, pd);
  const MorRef id_a = cat.identity(cat.src(alpha));
  const RetractData rd{
      id_a, pd.mediate(cat, cat.compose(ce->splitting.incl, pe.proj0), pe.proj1), id_a,
      pe.mediate(cat, cat.compose(ce->splitting.retr, pd.proj0), pd.proj1),
      std::nullopt};
  if (!is_retract_diagram(cat, te, td, rd))
    throw Refutation("transport_retract", "alpha*r_e is not a retract of alpha*r_d");
  return rd;
}

namespace {

// First lift of the square passing `keep`, in index order.
MorRef filtered_lift(const FinCat& cat, const LiftSquare& sq,
                     const std::function<bool(MorRef)>& keep, const char* which) {
  for (MorRef h : all_lifts(cat, sq))
    if (keep(h)) return h;
  throw Refutation("closure_pi", std::string("lifting problem ") + which +
                                     " has no admissible solution: " +
                                     describe(cat, sq));
}

}  // namespace

ClosurePi closure_pi(const FinCat& cat, const MorClass& d, const IdAssignment& ida,
                     const PiTable& pid, MorRef f, MorRef g) {
  const MorClass left = left_complement(cat, d);
  const MorClass closed = right_complement(cat, left);
  if (!closed.contains(f) || !closed.contains(g) || cat.dst(g) != cat.src(f))
    throw PreconditionError("closure_pi needs composable members of dbar(D)");
  const ObjRef x = cat.src(f);
  const ObjRef y = cat.dst(f);
  const ObjRef w = cat.src(g);
  const IdEntry& idx = terminal_id(cat, ida, x);
  const Factorization ff = factorize(cat, d, ida, f, &left);
  const Factorization fg = factorize(cat, d, ida, g, &left);
  const PullbackResult& pbf = ff.pb_witness;  // proj0: Mf -> Id(Y), proj1: Mf -> X
  // M(ρg) : N -> Mf, the pullback of ρ(g) along Mf -> X.
  const PullbackResult pbn = pullback_or_refute(cat, fg.rho, pbf.proj1, "closure_pi");
  const MorRef mrho = pbn.proj1;

  PiResult big;
  if (auto it = pid.find({ff.rho.index, mrho.index}); it != pid.end()) {
    big = it->second;
  } else {
    auto found = find_pi(cat, d, ff.rho, mrho);
    if (!found) throw Refutation("closure_pi", "Pi_{rho f} M(rho g) does not exist");
    big = *found;
  }

  const MorRef e0x = leg(cat, idx, 0);
  const MorRef e1x = leg(cat, idx, 1);
  const MorRef e1y = cat.compose(leg(cat, terminal_id(cat, ida, y), 1), pbf.proj0);
  // Lift a: λ(f) against (ε0, f ε1) : Id(X) -> X × Y.
  const auto prod = product(cat, x, y);
  if (!prod) throw Refutation("closure_pi", "X × Y does not exist");
  const LiftSquare sq_a{ff.lambda, prod->mediate(cat, e0x, cat.compose(f, e1x)),
                        idx.r, prod->mediate(cat, pbf.proj1, e1y)};
  const MorRef a = filtered_lift(
      cat, sq_a, [&](MorRef h) { return cat.compose(h, ff.lambda) == idx.r; }, "a");
  // Lift b: (r_X g, 1) : W -> K against ρ(g), K = W ×_X Id(X) along ε1.
  const PullbackResult k = pullback_or_refute(cat, g, e1x, "closure_pi");
  const MorRef rg1 = k.mediate(cat, cat.identity(w), cat.compose(idx.r, g));
  const LiftSquare sq_b{rg1, fg.rho, fg.lambda, cat.compose(e0x, k.proj1)};
  const MorRef b = filtered_lift(
      cat, sq_b, [&](MorRef h) { return cat.compose(h, rg1) == fg.lambda; }, "b");
  // Lift c: λ(g) against g.
  const LiftSquare sq_c{fg.lambda, g, cat.identity(w), fg.rho};
  const MorRef c = filtered_lift(
      cat, sq_c,
      [&](MorRef h) { return cat.compose(h, fg.lambda) == cat.identity(w); }, "c");

  // For z into Y: P_z = pullback(z, f) and Q_z = pullback(z, ρf).
  struct Fiber {
    PullbackResult p, q;
  };
  auto fiber = [&](MorRef z) {
    return Fiber{pullback_or_refute(cat, z, f, "closure_pi"),
                 pullback_or_refute(cat, z, ff.rho, "closure_pi")};
  };
  // i_z : C/X(f*z, g) -> C/Mf(ρf*z, M(ρg)).
  auto i_z = [&](const Fiber& fz, MorRef m) {
    const MorRef qa = fz.q.proj1;
    const MorRef az = cat.compose(a, qa);
    const MorRef u = fz.p.mediate(cat, fz.q.proj0, cat.compose(e1x, az));
    const MorRef v = k.mediate(cat, cat.compose(m, u), az);
    return pbn.mediate(cat, cat.compose(b, v), qa);
  };
  // r_z : C/Mf(ρf*z, M(ρg)) -> C/X(f*z, g).
  auto r_z = [&](const Fiber& fz, MorRef n) {
    const MorRef l = fz.q.mediate(cat, fz.p.proj0, cat.compose(ff.lambda, fz.p.proj1));
    return cat.compose(c, pbn.proj0, n, l);
  };
  for (MorRef z : cat.morphisms_into(y)) {
    const Fiber fz = fiber(z);
    for (MorRef m : cat.hom(fz.p.apex, w)) {
      if (cat.compose(g, m) != fz.p.proj1) continue;
      if (r_z(fz, i_z(fz, m)) != m)
        throw Refutation("closure_pi", "r∘i != id at z=" + cat.morphism_name(z) +
                                           ", m=" + cat.morphism_name(m));
    }
  }

  // The idempotent on Π_{ρf} M(ρg) transposed from i∘r at the universal element.
  const Fiber fpi = fiber(big.pi);
  const MorRef target = i_z(fpi, r_z(fpi, big.ev));
  std::optional<MorRef> kappa;
  for (const TransposeRow& row : big.transpose_table)
    if (row.y == big.pi)
      for (const auto& [m, n] : row.pairs)
        if (n == target) kappa = m;
  if (!kappa) throw Refutation("closure_pi", "i∘r does not transpose to an endomorphism");
  const Splitting sp = split_or_refute(cat, *kappa, "closure_pi");
  const MorRef pi = cat.compose(big.pi, sp.incl);
  const Fiber fnew = fiber(pi);
  const MorRef sub_j = fpi.q.mediate(cat, cat.compose(sp.incl, fnew.q.proj0), fnew.q.proj1);
  const MorRef ev = r_z(fnew, cat.compose(big.ev, sub_j));
  auto res = check_universal_element(cat, f, g, pi, ev);
  if (!res)
    throw Refutation("closure_pi", "split object fails the Pi universal property for f=" +
                                       cat.morphism_name(f) + ", g=" + cat.morphism_name(g));
  const RetractData rd{sp.incl, cat.identity(y), sp.retr, cat.identity(y), y};
  if (!is_retract_diagram(cat, pi, big.pi, rd))
    throw Refutation("closure_pi", "Pi_f g is not a retract of Pi_{rho f} M(rho g)");
  return ClosurePi{*res, big.pi, *kappa, sp, rd, a, b, c};
}

bool ClosureCertificate::valid() const {
  return preconditions.passed() && dmc_report.passed() && sigma_report.passed() &&
         id_report.passed() && fid_report.passed() && (!pi_report || pi_report->passed());
}

Report ClosureCertificate::combined() const {
  Report r;
  r.append(preconditions);
  r.append(dmc_report);
  r.append(sigma_report);
  r.append(id_report);
  r.append(fid_report);
  if (pi_report) r.append(*pi_report);
  return r;
}

ClosureCertificate verify_main_theorem(const FinCat& cat, const MorClass& d,
                                       const FunctorialIdAssignment& fida,
                                       bool with_pi) {
  ClosureCertificate cert;
  const std::string name = cat.name();
  Report& pre = cert.preconditions;
  pre.append(check_dmc(cat, d));
  pre.append(check_sigma(cat, d));
  pre.append(verify_id(cat, d, fida.base()));
  if (pre.passed()) pre.append(verify_functorial_id(cat, d, fida));
  const CauchyCheck cc = is_cauchy_complete(cat);
  if (cc.complete)
    pre.pass("pre.cauchy_complete", name);
  else
    pre.fail("pre.cauchy_complete", name, "idempotent does not split",
             {cat.morphism_name(*cc.unsplit)});
  PiTable pid;
  if (with_pi && pre.passed()) {
    PiCheck pc = check_pi(cat, d);
    pre.append(pc.report);
    pid = std::move(pc.table);
  }
  cert.dbar = dbar(cat, d);
  if (!pre.passed()) return cert;

  const MorClass left = left_complement(cat, d);
  const auto closed = cert.dbar.members();
  cert.dmc_report = check_dmc(cat, cert.dbar);
  {
    std::vector<std::pair<MorRef, MorRef>> jobs;
    for (MorRef e : closed)
      for (MorRef a : cat.morphisms_into(cat.dst(e))) jobs.emplace_back(e, a);
    const auto errs = parallel_map<std::string>(jobs.size(), [&](std::size_t n) {
      try {
        closure_pullback(cat, d, fida.base(), jobs[n].first, jobs[n].second);
        return std::string();
      } catch (const Refutation& ex) {
        return std::string(ex.what());
      }
    });
    std::vector<std::string> bad;
    for (std::size_t n = 0; n < jobs.size(); ++n)
      if (!errs[n].empty())
        bad.push_back("e=" + cat.morphism_name(jobs[n].first) +
                      ",alpha=" + cat.morphism_name(jobs[n].second) + ": " + errs[n]);
    if (bad.empty())
      cert.dmc_report.pass("closure.pullback", name,
                           std::to_string(jobs.size()) + " pullbacks built by splitting");
    else
      cert.dmc_report.fail("closure.pullback", name, "constructed pullback failed", bad);
  }
  cert.dmc_report.promote_failures();
  cert.sigma_report = check_sigma(cat, cert.dbar);
  cert.sigma_report.promote_failures();

  try {
    const ClosureId cid = closure_id(cat, d, fida);
    cert.id_report = verify_id(cat, cert.dbar, cid.fida.base());
    std::vector<std::string> bad;
    std::size_t count = 0;
    for (MorRef e : closed)
      for (MorRef a : cat.morphisms_into(cat.src(e)))
        for (int i = 0; i < 2; ++i) {
          ++count;
          try {
            transport_retract(cat, cid, fida.base(), e, a, i);
          } catch (const Refutation& ex) {
            bad.push_back(ex.what());
          }
        }
    if (bad.empty())
      cert.id_report.pass("closure.transport_retract", name,
                          std::to_string(count) + " retract diagrams");
    else
      cert.id_report.fail("closure.transport_retract", name,
                          "alpha*r_e not a retract of alpha*r_d", bad);
    cert.fid_report = verify_functorial_id(cat, cert.dbar, cid.fida);
    for (const ClosureIdEntry& ce : cid.provenance) {
      std::ostringstream os;
      os << "Id(" << cat.morphism_name(ce.e) << "): retract of "
         << cat.morphism_name(ce.d) << " via s=" << cat.morphism_name(ce.retract.retr_dom)
         << ", splits " << cat.morphism_name(ce.idempotent) << " at "
         << cat.object_name(ce.splitting.retract_obj);
      cert.provenance.push_back(os.str());
    }
  } catch (const Refutation& ex) {
    cert.id_report.refute("closure.id", name, ex.what());
  }
  cert.id_report.promote_failures();
  cert.fid_report.promote_failures();

  if (with_pi) {
    Report pr;
    std::vector<std::pair<MorRef, MorRef>> pairs;
    for (MorRef f : closed)
      for (MorRef g : closed)
        if (cat.dst(g) == cat.src(f)) pairs.emplace_back(f, g);
    const auto errs = parallel_map<std::string>(pairs.size(), [&](std::size_t n) {
      const auto [f, g] = pairs[n];
      try {
        const ClosurePi cp = closure_pi(cat, d, fida.base(), pid, f, g);
        const auto brute = find_pi(cat, cert.dbar, f, g);
        if (!brute) return std::string("brute-force search finds no Pi");
        if (!pi_comparison(cat, cp.result, *brute))
          return std::string("not isomorphic to the brute-force Pi");
        return std::string();
      } catch (const Refutation& ex) {
        return std::string(ex.what());
      }
    });
    std::vector<std::string> bad;
    for (std::size_t n = 0; n < pairs.size(); ++n)
      if (!errs[n].empty())
        bad.push_back("f=" + cat.morphism_name(pairs[n].first) +
                      ",g=" + cat.morphism_name(pairs[n].second) + ": " + errs[n]);
    if (bad.empty())
      pr.pass("closure.pi", name,
              std::to_string(pairs.size()) + " pairs, each iso to brute force");
    else
      pr.fail("closure.pi", name, "constructed Pi failed", bad);
    pr.append(check_pi(cat, cert.dbar).report);
    pr.promote_failures();
    cert.pi_report = std::move(pr);
  }
  return cert;
}

ReflectionCheck check_reflection(const FinCat& cat, const MorClass& d,
                                 const MorClass& r) {
  if (dbar(cat, r) != r)
    throw PreconditionError("R is not a right class: dbar(R) != R");
  ReflectionCheck out;
  out.dbar_in_r = dbar(cat, d).subset_of(r);
  out.d_in_r = d.subset_of(r);
  return out;
}

}  // namespace dmc
