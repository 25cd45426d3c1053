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

#include "dmc/axioms.hpp"

#include <algorithm>

#include "dmc/parallel.hpp"

namespace dmc {
namespace {

std::string pair_name(const FinCat& cat, MorRef a, MorRef b, const char* sep) {
  return cat.morphism_name(a) + sep + cat.morphism_name(b);
}

void clause(Report& r, const FinCat& cat, const char* check,
            const std::vector<std::string>& bad, const std::string& what) {
  if (bad.empty())
    r.pass(check, cat.name());
  else
    r.fail(check, cat.name(), what, bad);
}

struct CospanJob {
  MorRef d;
  MorRef alpha;
};

}  // namespace

Report check_dmc(const FinCat& cat, const MorClass& d) {
  Report r;
  const auto t = terminal(cat);
  if (!t) {
    r.fail("dmc.terminal", cat.name(), "no terminal object");
    return r;
  }
  r.pass("dmc.terminal", cat.name(), cat.object_name(*t));

  std::vector<std::string> bad;
  for (MorRef m : cat.morphisms())
    if (!d.contains(m) && is_iso(cat, m)) bad.push_back(cat.morphism_name(m));
  clause(r, cat, "dmc.isomorphisms", bad, "isomorphisms outside D");

  bad.clear();
  for (ObjRef x : cat.objects()) {
    const MorRef m = to_terminal(cat, x, *t);
    if (!d.contains(m)) bad.push_back(cat.morphism_name(m));
  }
  clause(r, cat, "dmc.terminal_maps", bad, "maps to the terminal outside D");

  std::vector<CospanJob> jobs;
  for (MorRef dm : d.members())
    for (MorRef a : cat.morphisms_into(cat.dst(dm))) jobs.push_back({dm, a});
  // 0 = missing, 1 = exists but leaves D, 2 = fine
  const auto state = parallel_map<char>(jobs.size(), [&](std::size_t i) {
    const auto pb = pullback(cat, jobs[i].d, jobs[i].alpha);
    if (!pb) return char{0};
    return d.contains(pb->proj1) ? char{2} : char{1};
  });
  std::vector<std::string> missing, outside;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string w = "d=" + cat.morphism_name(jobs[i].d) +
                          ",alpha=" + cat.morphism_name(jobs[i].alpha);
    if (state[i] == 0) missing.push_back(w);
    if (state[i] == 1) outside.push_back(w);
  }
  clause(r, cat, "dmc.pullbacks_exist", missing, "missing pullbacks of display maps");
  clause(r, cat, "dmc.pullbacks_display", outside,
         "pulled-back display maps outside D");
  return r;
}

Report check_sigma(const FinCat& cat, const MorClass& d) {
  Report r;
  std::vector<std::string> bad;
  const auto members = d.members();
  for (MorRef f : members)
    for (MorRef g : members) {
      if (cat.dst(f) != cat.src(g)) continue;
      if (!d.contains(cat.compose(g, f))) bad.push_back(pair_name(cat, g, f, "."));
    }
  clause(r, cat, "sigma.composition", bad, "composites of display maps outside D");
  return r;
}

namespace {

// f*y for every y into Y, as pullback(y, f) (proj1 is f*y).
std::vector<PullbackResult> substitutions(const FinCat& cat, MorRef f) {
  std::vector<PullbackResult> out;
  for (MorRef y : cat.morphisms_into(cat.dst(f))) {
    auto pb = pullback(cat, y, f);
    if (!pb)
      throw PreconditionError("pullback of " + cat.morphism_name(y) + " along " +
                              cat.morphism_name(f) + " does not exist");
    out.push_back(*pb);
  }
  return out;
}

std::optional<PiResult> universal_element(const FinCat& cat, MorRef f, MorRef g,
                                          const PullbackResult& pb, MorRef ev,
                                          const std::vector<PullbackResult>& fstar,
                                          bool keep_table) {
  const MorRef pi = pb.left;
  const ObjRef w = cat.src(g);
  PiResult res{f, g, pi, pb, ev, {}};
  for (const PullbackResult& py : fstar) {
    const MorRef y = py.left;
    std::size_t targets = 0;
    for (MorRef n : cat.hom(py.apex, w))
      if (cat.compose(g, n) == py.proj1) ++targets;
    TransposeRow row{y, {}};
    std::vector<std::uint32_t> images;
    for (MorRef m : cat.hom(cat.src(y), cat.src(pi))) {
      if (cat.compose(pi, m) != y) continue;
      const MorRef fm = pb.mediate(cat, cat.compose(m, py.proj0), py.proj1);
      const MorRef n = cat.compose(ev, fm);
      images.push_back(n.index);
      if (keep_table) row.pairs.emplace_back(m, n);
    }
    if (images.size() != targets) return std::nullopt;
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      return std::nullopt;
    if (keep_table) res.transpose_table.push_back(std::move(row));
  }
  return res;
}

void require_composable_display(const FinCat& cat, const MorClass& d, MorRef f,
                                MorRef g) {
  if (cat.dst(g) != cat.src(f))
    throw PreconditionError(cat.morphism_name(g) + " and " + cat.morphism_name(f) +
                            " are not composable");
  if (!d.contains(f) || !d.contains(g))
    throw PreconditionError("Pi needs display maps, got " + cat.morphism_name(f) +
                            ", " + cat.morphism_name(g));
}

}  // namespace

std::optional<PiResult> check_universal_element(const FinCat& cat, MorRef f,
                                                MorRef g, MorRef pi, MorRef ev) {
  if (cat.dst(pi) != cat.dst(f) || cat.dst(g) != cat.src(f)) return std::nullopt;
  const auto pb = pullback(cat, pi, f);
  if (!pb || cat.src(ev) != pb->apex || cat.dst(ev) != cat.src(g) ||
      cat.compose(g, ev) != pb->proj1)
    return std::nullopt;
  return universal_element(cat, f, g, *pb, ev, substitutions(cat, f), true);
}

std::optional<PiResult> find_pi(const FinCat& cat, const MorClass& d, MorRef f,
                                MorRef g) {
  require_composable_display(cat, d, f, g);
  const auto fstar = substitutions(cat, f);
  for (MorRef p : cat.morphisms_into(cat.dst(f))) {
    if (!d.contains(p)) continue;
    const auto pb = pullback(cat, p, f);
    if (!pb) continue;
    for (MorRef ev : cat.hom(pb->apex, cat.src(g))) {
      if (cat.compose(g, ev) != pb->proj1) continue;
      if (universal_element(cat, f, g, *pb, ev, fstar, false))
        return universal_element(cat, f, g, *pb, ev, fstar, true);
    }
  }
  return std::nullopt;
}

PiCheck check_pi(const FinCat& cat, const MorClass& d) {
  std::vector<std::pair<MorRef, MorRef>> pairs;
  const auto members = d.members();
  for (MorRef f : members)
    for (MorRef g : members)
      if (cat.dst(g) == cat.src(f)) pairs.emplace_back(f, g);
  const auto found = parallel_map<std::optional<PiResult>>(
      pairs.size(),
      [&](std::size_t i) { return find_pi(cat, d, pairs[i].first, pairs[i].second); });
  PiCheck out;
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (found[i])
      out.table.emplace(std::make_pair(pairs[i].first.index, pairs[i].second.index),
                        *found[i]);
    else
      bad.push_back("f=" + cat.morphism_name(pairs[i].first) +
                    ",g=" + cat.morphism_name(pairs[i].second));
  }
  clause(out.report, cat, "pi.exists", bad, "no Pi-type for these pairs");
  return out;
}

std::optional<MorRef> pi_comparison(const FinCat& cat, const PiResult& a,
                                    const PiResult& b) {
  if (a.f != b.f || a.g != b.g) return std::nullopt;
  auto arrow = [&](const PiResult& from, const PiResult& to) -> std::optional<MorRef> {
    for (MorRef m : cat.hom(cat.src(from.pi), cat.src(to.pi))) {
      if (cat.compose(to.pi, m) != from.pi) continue;
      const auto fm =
          to.pb.mediator(cat, cat.compose(m, from.pb.proj0), from.pb.proj1);
      if (fm && cat.compose(to.ev, *fm) == from.ev) return m;
    }
    return std::nullopt;
  };
  const auto phi = arrow(a, b);
  const auto psi = arrow(b, a);
  if (!phi || !psi) return std::nullopt;
  if (cat.compose(*psi, *phi) != cat.identity(cat.src(a.pi)) ||
      cat.compose(*phi, *psi) != cat.identity(cat.src(b.pi)))
    return std::nullopt;
  return phi;
}

StabilityCheck check_llp_pullback_stable(const FinCat& cat, const MorClass& d) {
  const MorClass left = left_complement(cat, d);
  std::vector<CospanJob> jobs;  // (l, d)
  for (MorRef l : left.members())
    for (MorRef dm : d.members())
      if (cat.dst(dm) == cat.dst(l)) jobs.push_back({l, dm});
  const auto pulled = parallel_map<std::optional<MorRef>>(
      jobs.size(), [&](std::size_t i) -> std::optional<MorRef> {
        const auto pb = pullback(cat, jobs[i].d, jobs[i].alpha);
        if (!pb || left.contains(pb->proj1)) return std::nullopt;
        return pb->proj1;
      });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!pulled[i]) continue;
    StabilityCheck out;
    out.holds = false;
    out.left = jobs[i].d;
    out.display = jobs[i].alpha;
    out.pulled = pulled[i];
    out.square = llp(cat, *pulled[i], d).witness;
    return out;
  }
  return {};
}

}  // namespace dmc
