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

#include "dmc/fincat.hpp"

#include <algorithm>
#include <sstream>

namespace dmc {

MorRef FinCat::compose(MorRef g, MorRef f) const {
  if (auto h = try_compose(g, f)) return *h;
  throw ModelError("composite " + morphism_name(g) + " . " + morphism_name(f) +
                   " is undefined in " + name_);
}

std::optional<ObjRef> FinCat::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return ObjRef{it->second};
}

std::optional<MorRef> FinCat::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) return std::nullopt;
  return MorRef{it->second};
}

std::vector<ObjRef> FinCat::objects() const {
  std::vector<ObjRef> out(objects_.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = ObjRef{i};
  return out;
}

std::vector<MorRef> FinCat::morphisms() const {
  std::vector<MorRef> out(morphisms_.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = MorRef{i};
  return out;
}

std::vector<MorRef> FinCat::morphisms_into(ObjRef y) const {
  std::vector<MorRef> out;
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].dst == y) out.push_back(MorRef{i});
  return out;
}

CatBuilder::CatBuilder(std::string name, Limits limits) : limits_(limits) {
  cat_.name_ = std::move(name);
}

ObjRef CatBuilder::add_object(std::string name) {
  if (cat_.object_index_.count(name))
    throw ModelError("duplicate object name '" + name + "'");
  if (cat_.objects_.size() >= limits_.max_objects)
    throw BudgetExceeded("object limit " + std::to_string(limits_.max_objects) +
                         " exceeded");
  const auto idx = static_cast<std::uint32_t>(cat_.objects_.size());
  cat_.object_index_.emplace(name, idx);
  cat_.objects_.push_back(std::move(name));
  ids_.emplace_back();
  return ObjRef{idx};
}

MorRef CatBuilder::add_morphism(std::string name, ObjRef src, ObjRef dst) {
  if (cat_.morphism_index_.count(name))
    throw ModelError("duplicate morphism name '" + name + "'");
  if (src.index >= cat_.objects_.size() || dst.index >= cat_.objects_.size())
    throw ModelError("morphism '" + name + "' has an unknown endpoint");
  if (cat_.morphisms_.size() >= limits_.max_morphisms)
    throw BudgetExceeded("morphism limit " +
                         std::to_string(limits_.max_morphisms) + " exceeded");
  const auto idx = static_cast<std::uint32_t>(cat_.morphisms_.size());
  cat_.morphism_index_.emplace(name, idx);
  cat_.morphisms_.push_back(Morphism{std::move(name), src, dst});
  return MorRef{idx};
}

MorRef CatBuilder::add_identity(ObjRef x, std::string name) {
  const MorRef m = add_morphism(std::move(name), x, x);
  set_identity(x, m);
  return m;
}

void CatBuilder::set_identity(ObjRef x, MorRef id) {
  if (ids_[x.index] && *ids_[x.index] != id)
    throw ModelError("object '" + cat_.objects_[x.index] +
                     "' already has an identity");
  ids_[x.index] = id;
}

void CatBuilder::set_comp(MorRef g, MorRef f, MorRef h) {
  if (dst(f) != src(g))
    throw ModelError("comp entry " + cat_.morphisms_[g.index].name + " . " +
                     cat_.morphisms_[f.index].name + " is not composable");
  comps_.emplace_back(g.index, f.index, h.index);
}

bool CatBuilder::has_comp(MorRef g, MorRef f) const {
  return std::any_of(comps_.begin(), comps_.end(), [&](const auto& t) {
    return std::get<0>(t) == g.index && std::get<1>(t) == f.index;
  });
}

void CatBuilder::fill_unit_laws() {
  const std::size_t n = cat_.morphisms_.size();
  std::vector<char> present(n * n, 0);
  for (const auto& [g, f, h] : comps_) present[g * n + f] = 1;
  for (std::uint32_t f = 0; f < n; ++f) {
    const Morphism& m = cat_.morphisms_[f];
    if (auto id = ids_[m.dst.index]; id && !present[id->index * n + f]) {
      comps_.emplace_back(id->index, f, f);
      present[id->index * n + f] = 1;
    }
    if (auto id = ids_[m.src.index]; id && !present[f * n + id->index]) {
      comps_.emplace_back(f, id->index, f);
      present[f * n + id->index] = 1;
    }
  }
}

std::optional<ObjRef> CatBuilder::find_object(std::string_view name) const {
  return cat_.find_object(name);
}

std::optional<MorRef> CatBuilder::find_morphism(std::string_view name) const {
  return cat_.find_morphism(name);
}

FinCat CatBuilder::build() && {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!ids_[i])
      throw ModelError("object '" + cat_.objects_[i] + "' has no identity");
    cat_.identities_.push_back(*ids_[i]);
  }
  const std::size_t n = cat_.morphisms_.size();
  const std::size_t k = cat_.objects_.size();
  cat_.comp_.assign(n * n, -1);
  for (const auto& [g, f, h] : comps_) {
    std::int32_t& slot = cat_.comp_[g * n + f];
    if (slot >= 0 && static_cast<std::uint32_t>(slot) != h)
      throw ModelError("conflicting comp entries for " +
                       cat_.morphisms_[g].name + " . " +
                       cat_.morphisms_[f].name);
    slot = static_cast<std::int32_t>(h);
  }
  cat_.homs_.assign(k * k, {});
  cat_.hom_position_.assign(n, 0);
  for (std::uint32_t m = 0; m < n; ++m) {
    const Morphism& mor = cat_.morphisms_[m];
    auto& h = cat_.homs_[mor.src.index * k + mor.dst.index];
    cat_.hom_position_[m] = static_cast<std::uint32_t>(h.size());
    h.push_back(MorRef{m});
  }
  return std::move(cat_);
}

ValidationReport validate_category(const FinCat& cat) {
  ValidationReport report;
  auto name = [&](MorRef m) { return cat.morphism_name(m); };
  const auto objs = cat.objects();
  const auto mors = cat.morphisms();

  for (ObjRef x : objs) {
    const MorRef id = cat.identity(x);
    if (cat.src(id) != x || cat.dst(id) != x)
      report.violations.push_back(
          {"identity", {id}, "identity of " + cat.object_name(x) + " is mistyped"});
  }
  // Totality and typing.
  for (MorRef g : mors) {
    for (MorRef f : mors) {
      if (cat.dst(f) != cat.src(g)) continue;
      auto h = cat.try_compose(g, f);
      if (!h) {
        report.violations.push_back(
            {"totality", {g, f}, "missing comp " + name(g) + " . " + name(f)});
      } else if (cat.src(*h) != cat.src(f) || cat.dst(*h) != cat.dst(g)) {
        report.violations.push_back({"typing", {g, f, *h},
                                     name(g) + " . " + name(f) + " = " +
                                         name(*h) + " has the wrong type"});
      }
    }
  }
  // Laws are checked wherever the composites involved are defined, so a
  // mistyped entry still surfaces the unit or associativity law it breaks.
  for (MorRef f : mors) {
    const MorRef l = cat.identity(cat.dst(f));
    const MorRef r = cat.identity(cat.src(f));
    if (auto lf = cat.try_compose(l, f); lf && *lf != f)
      report.violations.push_back(
          {"unit", {l, f}, name(l) + " . " + name(f) + " != " + name(f)});
    if (auto fr = cat.try_compose(f, r); fr && *fr != f)
      report.violations.push_back(
          {"unit", {f, r}, name(f) + " . " + name(r) + " != " + name(f)});
  }
  std::vector<std::vector<MorRef>> out_of(cat.num_objects());
  for (MorRef m : mors) out_of[cat.src(m).index].push_back(m);
  for (MorRef f : mors) {
    for (MorRef g : out_of[cat.dst(f).index]) {
      const auto gf = cat.try_compose(g, f);
      if (!gf) continue;
      for (MorRef h : out_of[cat.dst(g).index]) {
        const auto hg = cat.try_compose(h, g);
        if (!hg) continue;
        const auto left = cat.try_compose(h, *gf);
        const auto right = cat.try_compose(*hg, f);
        if (left != right)
          report.violations.push_back(
              {"associativity", {h, g, f},
               "(" + name(h) + " . " + name(g) + ") . " + name(f) + " != " +
                   name(h) + " . (" + name(g) + " . " + name(f) + ")"});
      }
    }
  }
  return report;
}

std::optional<MorRef> is_iso(const FinCat& cat, MorRef f) {
  const ObjRef a = cat.src(f);
  const ObjRef b = cat.dst(f);
  for (MorRef g : cat.hom(b, a)) {
    if (cat.compose(g, f) == cat.identity(a) &&
        cat.compose(f, g) == cat.identity(b))
      return g;
  }
  return std::nullopt;
}

std::vector<MorRef> hom_set(const FinCat& cat, ObjRef a, ObjRef b) {
  auto h = cat.hom(a, b);
  return {h.begin(), h.end()};
}

std::vector<ObjRef> terminals(const FinCat& cat) {
  std::vector<ObjRef> out;
  for (ObjRef t : cat.objects()) {
    bool ok = true;
    for (ObjRef x : cat.objects()) {
      if (cat.hom(x, t).size() != 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(t);
  }
  return out;
}

std::optional<ObjRef> terminal(const FinCat& cat) {
  for (ObjRef t : cat.objects()) {
    bool ok = true;
    for (ObjRef x : cat.objects()) {
      if (cat.hom(x, t).size() != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  return std::nullopt;
}

MorRef to_terminal(const FinCat& cat, ObjRef x, ObjRef t) {
  auto h = cat.hom(x, t);
  if (h.size() != 1)
    throw PreconditionError(cat.object_name(t) + " is not terminal");
  return h.front();
}

bool same_table(const FinCat& a, const FinCat& b) {
  if (a.name() != b.name() || a.num_objects() != b.num_objects() ||
      a.num_morphisms() != b.num_morphisms())
    return false;
  for (ObjRef x : a.objects()) {
    if (a.object_name(x) != b.object_name(x)) return false;
    if (a.identity(x) != b.identity(x)) return false;
  }
  for (MorRef m : a.morphisms()) {
    const Morphism& ma = a.morphism(m);
    const Morphism& mb = b.morphism(m);
    if (ma.name != mb.name || ma.src != mb.src || ma.dst != mb.dst) return false;
  }
  for (MorRef g : a.morphisms())
    for (MorRef f : a.morphisms())
      if (a.try_compose(g, f) != b.try_compose(g, f)) return false;
  return true;
}

}  // namespace dmc
