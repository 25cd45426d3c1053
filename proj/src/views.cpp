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

#include "dmc/views.hpp"

#include <map>

namespace dmc {

std::optional<ObjRef> SliceView::object_of(MorRef arrow) const {
  for (std::uint32_t i = 0; i < object_arrow.size(); ++i)
    if (object_arrow[i] == arrow) return ObjRef{i};
  return std::nullopt;
}

std::optional<MorRef> SliceView::morphism_of(MorRef m, ObjRef from,
                                             ObjRef to) const {
  for (MorRef s : cat.hom(from, to))
    if (base_morphism[s.index] == m) return s;
  return std::nullopt;
}

SliceView slice(const FinCat& cat, ObjRef y) {
  SliceView view;
  view.base = y;
  CatBuilder b(cat.name() + "/" + cat.object_name(y), kUnboundedLimits);
  const std::vector<MorRef> arrows = cat.morphisms_into(y);
  for (MorRef x : arrows) {
    b.add_object(cat.morphism_name(x));
    view.object_arrow.push_back(x);
  }
  // (from, to, m) -> slice morphism
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, MorRef> index;
  for (std::uint32_t i = 0; i < arrows.size(); ++i) {
    for (std::uint32_t j = 0; j < arrows.size(); ++j) {
      for (MorRef m : cat.hom(cat.src(arrows[i]), cat.src(arrows[j]))) {
        if (cat.compose(arrows[j], m) != arrows[i]) continue;
        const MorRef s = b.add_morphism(
            cat.morphism_name(m) + "[" + cat.morphism_name(arrows[i]) + "," +
                cat.morphism_name(arrows[j]) + "]",
            ObjRef{i}, ObjRef{j});
        view.base_morphism.push_back(m);
        index.emplace(std::make_tuple(i, j, m.index), s);
        if (cat.is_identity(m) && i == j) b.set_identity(ObjRef{i}, s);
      }
    }
  }
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> into(
      arrows.size());  // slice object -> (slice morphism, source object)
  for (const auto& [k, f] : index) into[std::get<1>(k)].emplace_back(f.index, std::get<0>(k));
  for (const auto& [kg, g] : index) {
    const auto [gi, gj, gm] = kg;
    for (const auto& [f, fi] : into[gi]) {
      const MorRef h = cat.compose(MorRef{gm}, view.base_morphism[f]);
      b.set_comp(g, MorRef{f}, index.at(std::make_tuple(fi, gj, h.index)));
    }
  }
  view.cat = std::move(b).build();
  return view;
}

ArrowView arrow_category(const FinCat& cat) {
  ArrowView view;
  CatBuilder b(cat.name() + "^->", kUnboundedLimits);
  for (MorRef f : cat.morphisms()) {
    b.add_object(cat.morphism_name(f));
    view.object_arrow.push_back(f);
  }
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>,
           MorRef>
      index;
  for (MorRef f : cat.morphisms()) {
    for (MorRef g : cat.morphisms()) {
      for (MorRef top : cat.hom(cat.src(f), cat.src(g))) {
        for (MorRef bottom : cat.hom(cat.dst(f), cat.dst(g))) {
          if (cat.compose(g, top) != cat.compose(bottom, f)) continue;
          const MorRef s = b.add_morphism(
              "(" + cat.morphism_name(top) + "," + cat.morphism_name(bottom) +
                  "):" + cat.morphism_name(f) + "->" + cat.morphism_name(g),
              ObjRef{f.index}, ObjRef{g.index});
          view.squares.push_back({f, g, top, bottom});
          index.emplace(std::make_tuple(f.index, g.index, top.index, bottom.index), s);
          if (f == g && cat.is_identity(top) && cat.is_identity(bottom))
            b.set_identity(ObjRef{f.index}, s);
        }
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> into(cat.num_morphisms());
  for (std::uint32_t fi = 0; fi < view.squares.size(); ++fi)
    into[view.squares[fi].to.index].push_back(fi);
  for (std::uint32_t gi = 0; gi < view.squares.size(); ++gi) {
    const auto& g = view.squares[gi];
    for (std::uint32_t fi : into[g.from.index]) {
      const auto& f = view.squares[fi];
      const MorRef top = cat.compose(g.top, f.top);
      const MorRef bottom = cat.compose(g.bottom, f.bottom);
      b.set_comp(MorRef{gi}, MorRef{fi},
                 index.at(std::make_tuple(f.from.index, g.to.index, top.index,
                                          bottom.index)));
    }
  }
  view.cat = std::move(b).build();
  return view;
}

std::optional<RetractData> find_retract(const FinCat& cat, MorRef f, MorRef g,
                                        std::optional<ObjRef> over) {
  const ObjRef a = cat.src(f), b = cat.dst(f);
  const ObjRef x = cat.src(g), y = cat.dst(g);
  if (over) {
    if (b != *over || y != *over)
      throw PreconditionError("retract over " + cat.object_name(*over) +
                              " needs morphisms into it");
    const MorRef id = cat.identity(*over);
    for (MorRef i : cat.hom(a, x)) {
      if (cat.compose(g, i) != f) continue;
      for (MorRef s : cat.hom(x, a)) {
        if (cat.compose(f, s) != g) continue;
        if (cat.compose(s, i) == cat.identity(a)) return RetractData{i, id, s, id, over};
      }
    }
    return std::nullopt;
  }
  for (MorRef i0 : cat.hom(a, x)) {
    const MorRef gi0 = cat.compose(g, i0);
    for (MorRef i1 : cat.hom(b, y)) {
      if (cat.compose(i1, f) != gi0) continue;
      for (MorRef s0 : cat.hom(x, a)) {
        if (cat.compose(s0, i0) != cat.identity(a)) continue;
        const MorRef fs0 = cat.compose(f, s0);
        for (MorRef s1 : cat.hom(y, b)) {
          if (cat.compose(s1, i1) != cat.identity(b)) continue;
          if (cat.compose(s1, g) != fs0) continue;
          return RetractData{i0, i1, s0, s1, std::nullopt};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_retract_diagram(const FinCat& cat, MorRef f, MorRef g,
                        const RetractData& rd) {
  auto typed = [&](MorRef m, ObjRef s, ObjRef d) {
    return cat.src(m) == s && cat.dst(m) == d;
  };
  const ObjRef a = cat.src(f), b = cat.dst(f);
  const ObjRef x = cat.src(g), y = cat.dst(g);
  if (!typed(rd.incl_dom, a, x) || !typed(rd.incl_cod, b, y) ||
      !typed(rd.retr_dom, x, a) || !typed(rd.retr_cod, y, b))
    return false;
  if (rd.over && (b != *rd.over || y != *rd.over ||
                  !cat.is_identity(rd.incl_cod) || !cat.is_identity(rd.retr_cod)))
    return false;
  return cat.compose(g, rd.incl_dom) == cat.compose(rd.incl_cod, f) &&
         cat.compose(f, rd.retr_dom) == cat.compose(rd.retr_cod, g) &&
         cat.compose(rd.retr_dom, rd.incl_dom) == cat.identity(a) &&
         cat.compose(rd.retr_cod, rd.incl_cod) == cat.identity(b);
}

}  // namespace dmc
