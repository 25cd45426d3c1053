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

#include "dmc/cauchy.hpp"

#include "dmc/views.hpp"

namespace dmc {

bool is_idempotent(const FinCat& cat, MorRef e) {
  return cat.is_endo(e) && cat.compose(e, e) == e;
}

std::vector<MorRef> idempotents(const FinCat& cat) {
  std::vector<MorRef> out;
  for (MorRef m : cat.morphisms())
    if (is_idempotent(cat, m)) out.push_back(m);
  return out;
}

bool is_splitting(const FinCat& cat, const Splitting& s) {
  const ObjRef c = cat.src(s.e);
  return cat.src(s.incl) == s.retract_obj && cat.dst(s.incl) == c &&
         cat.src(s.retr) == c && cat.dst(s.retr) == s.retract_obj &&
         cat.compose(s.incl, s.retr) == s.e &&
         cat.compose(s.retr, s.incl) == cat.identity(s.retract_obj);
}

namespace {

template <typename Visit>
void for_each_splitting(const FinCat& cat, MorRef e, Visit&& visit) {
  if (!is_idempotent(cat, e))
    throw PreconditionError(cat.morphism_name(e) + " is not idempotent");
  const ObjRef c = cat.src(e);
  for (ObjRef r : cat.objects())
    for (MorRef i : cat.hom(r, c))
      for (MorRef q : cat.hom(c, r)) {
        const Splitting s{e, r, i, q};
        if (is_splitting(cat, s) && !visit(s)) return;
      }
}

}  // namespace

std::optional<Splitting> split_idempotent(const FinCat& cat, MorRef e) {
  std::optional<Splitting> out;
  for_each_splitting(cat, e, [&](const Splitting& s) {
    out = s;
    return false;
  });
  return out;
}

std::vector<Splitting> all_splittings(const FinCat& cat, MorRef e) {
  std::vector<Splitting> out;
  for_each_splitting(cat, e, [&](const Splitting& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

CauchyCheck is_cauchy_complete(const FinCat& cat) {
  for (MorRef e : idempotents(cat))
    if (!split_idempotent(cat, e)) return {false, e};
  return {};
}

bool is_coequalizer_of(const FinCat& cat, MorRef e, MorRef q) {
  const ObjRef c = cat.src(e);
  if (cat.src(q) != c || cat.compose(q, e) != q) return false;
  const ObjRef r = cat.dst(q);
  for (ObjRef z : cat.objects())
    for (MorRef h : cat.hom(c, z)) {
      if (cat.compose(h, e) != h) continue;
      std::size_t factors = 0;
      for (MorRef u : cat.hom(r, z))
        if (cat.compose(u, q) == h) ++factors;
      if (factors != 1) return false;
    }
  return true;
}

bool verify_splitting_coequalizer(const FinCat& cat, MorRef e, const Splitting& s) {
  return s.e == e && is_splitting(cat, s) && is_coequalizer_of(cat, e, s.retr);
}

std::optional<Splitting> splitting_from_coequalizer(const FinCat& cat, MorRef e,
                                                    MorRef q) {
  if (!is_coequalizer_of(cat, e, q)) return std::nullopt;
  // e itself coequalizes (e, id); its factorization through q is the inclusion.
  for (MorRef i : cat.hom(cat.dst(q), cat.src(e)))
    if (cat.compose(i, q) == e) {
      const Splitting s{e, cat.dst(q), i, q};
      if (is_splitting(cat, s)) return s;
      return std::nullopt;
    }
  return std::nullopt;
}

SquareSplitting split_square(const FinCat& cat, MorRef e, MorRef f, MorRef c,
                             const Splitting& se, const Splitting& sf) {
  if (!is_idempotent(cat, e) || !is_idempotent(cat, f))
    throw PreconditionError("split_square needs idempotents");
  if (cat.src(c) != cat.src(e) || cat.dst(c) != cat.src(f) ||
      cat.compose(c, e) != cat.compose(f, c))
    throw PreconditionError("c does not commute with the idempotents");
  if (se.e != e || sf.e != f || !is_splitting(cat, se) || !is_splitting(cat, sf))
    throw PreconditionError("split_square needs splittings of e and f");
  SquareSplitting out;
  out.induced = cat.compose(sf.retr, c, se.incl);
  // u with sf.incl∘u = c∘se.incl and u∘se.retr = sf.retr∘c.
  std::size_t count = 0;
  const MorRef top = cat.compose(c, se.incl);
  const MorRef bottom = cat.compose(sf.retr, c);
  for (MorRef u : cat.hom(se.retract_obj, sf.retract_obj))
    if (cat.compose(sf.incl, u) == top && cat.compose(u, se.retr) == bottom) ++count;
  out.unique = count == 1;
  if (!out.unique)
    throw Refutation("split_square", std::to_string(count) +
                                         " morphisms complete the split square");
  out.iso = is_iso(cat, out.induced).has_value();
  if (is_iso(cat, c) && !out.iso)
    throw Refutation("split_square", "c is an isomorphism but " +
                                         cat.morphism_name(out.induced) + " is not");
  return out;
}

MorRef splitting_comparison_iso(const FinCat& cat, MorRef e, const Splitting& s1,
                                const Splitting& s2) {
  if (s1.e != e || s2.e != e || !is_splitting(cat, s1) || !is_splitting(cat, s2))
    throw PreconditionError("comparison needs two splittings of the same idempotent");
  std::vector<MorRef> found;
  for (MorRef u : cat.hom(s1.retract_obj, s2.retract_obj))
    if (cat.compose(s2.incl, u) == s1.incl && cat.compose(u, s1.retr) == s2.retr)
      found.push_back(u);
  if (found.size() != 1)
    throw Refutation("splitting_comparison_iso",
                     std::to_string(found.size()) + " comparison morphisms");
  if (!is_iso(cat, found.front()))
    throw Refutation("splitting_comparison_iso", "comparison is not an isomorphism");
  return found.front();
}

KaroubiEnvelope karoubi_envelope(const FinCat& cat) {
  KaroubiEnvelope k;
  CatBuilder b("karoubi(" + cat.name() + ")", kUnboundedLimits);
  k.embed_object.resize(cat.num_objects());
  for (MorRef e : idempotents(cat)) {
    const ObjRef c = cat.src(e);
    const bool plain = cat.is_identity(e);
    const ObjRef o = b.add_object(plain ? cat.object_name(c)
                                        : "(" + cat.object_name(c) + "," +
                                              cat.morphism_name(e) + ")");
    k.base_object.push_back(c);
    k.base_idempotent.push_back(e);
    if (plain) k.embed_object[c.index] = o;
  }
  const std::size_t n = k.base_object.size();
  // Morphisms (C,e) -> (C',e') are g with e'∘g∘e = g; the identity is e.
  std::vector<std::vector<std::pair<MorRef, MorRef>>> homs(n * n);  // (base, env)
  std::vector<std::pair<ObjRef, ObjRef>> ends;
  k.embed_morphism.resize(cat.num_morphisms());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t c = 0; c < n; ++c) {
      const MorRef ea = k.base_idempotent[a];
      const MorRef ec = k.base_idempotent[c];
      for (MorRef g : cat.hom(k.base_object[a], k.base_object[c])) {
        if (cat.compose(ec, g, ea) != g) continue;
        const bool plain = cat.is_identity(ea) && cat.is_identity(ec);
        const MorRef m = b.add_morphism(
            plain ? cat.morphism_name(g)
                  : cat.morphism_name(g) + "[" + cat.morphism_name(ea) + ">" +
                        cat.morphism_name(ec) + "]",
            ObjRef{a}, ObjRef{c});
        k.base_morphism.push_back(g);
        homs[a * n + c].emplace_back(g, m);
        if (plain) k.embed_morphism[g.index] = m;
        if (g == ea && a == c) b.set_identity(ObjRef{a}, m);
      }
    }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t c = 0; c < n; ++c)
      for (const auto& [g1, m1] : homs[a * n + c])
        for (std::uint32_t d = 0; d < n; ++d)
          for (const auto& [g2, m2] : homs[c * n + d]) {
            const MorRef h = cat.compose(g2, g1);
            for (const auto& [g3, m3] : homs[a * n + d])
              if (g3 == h) {
                b.set_comp(m2, m1, m3);
                break;
              }
          }
  k.cat = std::move(b).build();
  return k;
}

}  // namespace dmc
