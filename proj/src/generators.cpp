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

#include "dmc/instances.hpp"

#include <algorithm>
#include <sstream>

#include "dmc/pullback.hpp"

namespace dmc {

std::optional<std::size_t> Poset::meet(std::size_t a, std::size_t b) const {
  // The lower bound of a and b lying above every other lower bound.
  for (std::size_t m = 0; m < size(); ++m) {
    if (!leq[m][a] || !leq[m][b]) continue;
    bool greatest = true;
    for (std::size_t x = 0; x < size() && greatest; ++x)
      if (leq[x][a] && leq[x][b] && !leq[x][m]) greatest = false;
    if (greatest) return m;
  }
  return std::nullopt;
}

std::optional<std::size_t> Poset::top() const {
  for (std::size_t t = 0; t < size(); ++t) {
    bool ok = true;
    for (std::size_t x = 0; x < size(); ++x) ok = ok && leq[x][t];
    if (ok) return t;
  }
  return std::nullopt;
}

namespace {

Poset make(std::vector<std::string> names) {
  Poset p;
  p.leq.assign(names.size(), std::vector<bool>(names.size(), false));
  for (std::size_t i = 0; i < names.size(); ++i) p.leq[i][i] = true;
  p.elements = std::move(names);
  return p;
}

void transitive_closure(Poset& p) {
  const std::size_t n = p.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq[k][j]) p.leq[i][j] = true;
}

}  // namespace

Poset chain_poset(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  Poset p = make(std::move(names));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) p.leq[i][j] = true;
  return p;
}

Poset boolean_poset(std::size_t atoms) {
  if (atoms > 5) throw PreconditionError("boolean lattice too large");
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::string> names;
  for (std::size_t s = 0; s < n; ++s) {
    std::string name;
    for (std::size_t a = 0; a < atoms; ++a)
      if (s >> a & 1) name += static_cast<char>('a' + a);
    names.push_back(name.empty() ? "0" : name);
  }
  Poset p = make(std::move(names));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) p.leq[s][t] = (s & t) == s;
  return p;
}

Poset m3_poset() {
  Poset p = make({"0", "a", "b", "c", "1"});
  for (std::size_t i = 0; i < 5; ++i) {
    p.leq[0][i] = true;
    p.leq[i][4] = true;
  }
  return p;
}

Poset n5_poset() {
  Poset p = make({"0", "a", "b", "c", "1"});
  for (std::size_t i = 0; i < 5; ++i) {
    p.leq[0][i] = true;
    p.leq[i][4] = true;
  }
  p.leq[1][2] = true;  // a < b, c incomparable to both
  return p;
}

Poset poset_from_spec(std::string_view spec) {
  auto number = [&](std::string_view s) -> std::size_t {
    std::size_t v = 0;
    if (s.empty()) throw ParseError("expected a size in '" + std::string(spec) + "'", 1, 1);
    for (char c : s) {
      if (c < '0' || c > '9')
        throw ParseError("bad size in '" + std::string(spec) + "'", 1, 1);
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
  };
  if (spec.rfind("chain:", 0) == 0) return chain_poset(number(spec.substr(6)));
  if (spec.rfind("boolean:", 0) == 0) return boolean_poset(number(spec.substr(8)));
  if (spec == "m3") return m3_poset();
  if (spec == "n5") return n5_poset();
  if (spec.rfind("rel:", 0) == 0) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> names;
    auto intern = [&](const std::string& s) {
      if (std::find(names.begin(), names.end(), s) == names.end()) names.push_back(s);
    };
    std::string body(spec.substr(4));
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto lt = item.find('<');
      if (lt == std::string::npos) {
        if (item.empty()) throw ParseError("empty relation item", 1, 1);
        intern(item);
        continue;
      }
      const std::string a = item.substr(0, lt), b = item.substr(lt + 1);
      if (a.empty() || b.empty()) throw ParseError("bad relation item '" + item + "'", 1, 1);
      intern(a);
      intern(b);
      pairs.emplace_back(a, b);
    }
    Poset p = make(names);
    auto at = [&](const std::string& s) {
      return static_cast<std::size_t>(std::find(names.begin(), names.end(), s) -
                                      names.begin());
    };
    for (const auto& [a, b] : pairs) p.leq[at(a)][at(b)] = true;
    transitive_closure(p);
    return p;
  }
  throw ParseError("unknown lattice spec '" + std::string(spec) + "'", 1, 1);
}

std::string heyting_morphism_name(const Poset& p, std::size_t a, std::size_t b) {
  if (a == b) return "id_" + p.elements[a];
  return "le_" + p.elements[a] + "_" + p.elements[b];
}

InstanceBundle gen_heyting(const Poset& p, const std::string& name) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && p.leq[a][b] && p.leq[b][a])
        throw PreconditionError("order is not antisymmetric");
  if (!p.top()) throw PreconditionError("not a lattice: no top element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!p.meet(a, b))
        throw PreconditionError("not a lattice: " + p.elements[a] + " and " +
                                p.elements[b] + " have no meet");

  CatBuilder cb(name);
  std::vector<ObjRef> obj;
  for (const std::string& e : p.elements) obj.push_back(cb.add_object(e));
  std::vector<std::vector<MorRef>> mor(n, std::vector<MorRef>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.leq[a][b]) {
        mor[a][b] = cb.add_morphism(heyting_morphism_name(p, a, b), obj[a], obj[b]);
        if (a == b) cb.set_identity(obj[a], mor[a][b]);
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (p.leq[a][b] && p.leq[b][c]) cb.set_comp(mor[b][c], mor[a][b], mor[a][c]);

  InstanceBundle out;
  out.cat = std::move(cb).build();
  const FinCat& cat = out.cat;
  out.d = MorClass::all(cat);
  out.notes.push_back("poset category of a finite lattice; display maps are all morphisms");
  IdAssignment ida(cat.num_morphisms());
  for (MorRef f : cat.morphisms()) {
    // Id(f) = dom(f): the diagonal is already an isomorphism.
    const MorRef id = cat.identity(cat.src(f));
    const auto sq = pullback(cat, f, f);
    ida.set(make_id_entry(cat, f, id, sq->mediate(cat, id, id)));
  }
  FunctorialIdAssignment fida(ida);
  for (const SliceArrow& a : display_slice_arrows(cat, out.d))
    fida.set_action(a.d, a.d2, a.m, a.m);
  out.fida = std::move(fida);

  // Π_f g for f : x <= y, g : w <= x is the largest p <= y with p ∧ x <= w.
  std::vector<PiExpectation> pis;
  bool complete = true;
  for (std::size_t w = 0; w < n && complete; ++w)
    for (std::size_t x = 0; x < n && complete; ++x)
      for (std::size_t y = 0; y < n && complete; ++y) {
        if (!p.leq[w][x] || !p.leq[x][y]) continue;
        std::optional<std::size_t> best;
        for (std::size_t q = 0; q < n; ++q) {
          if (!p.leq[q][y] || !p.leq[*p.meet(q, x)][w]) continue;
          bool greatest = true;
          for (std::size_t o = 0; o < n; ++o)
            if (p.leq[o][y] && p.leq[*p.meet(o, x)][w] && !p.leq[o][q]) greatest = false;
          if (greatest) best = q;
        }
        if (!best) {
          complete = false;
          out.notes.push_back("no residual for f=" + heyting_morphism_name(p, x, y) +
                              ", g=" + heyting_morphism_name(p, w, x) +
                              "; lattice is not Heyting, Pi table omitted");
          break;
        }
        pis.push_back({mor[x][y], mor[w][x], mor[*best][y]});
      }
  if (complete) out.pi_expected = std::move(pis);
  return out;
}

FinCat gen_walking(std::string_view shape) {
  if (shape == "arrow") {
    CatBuilder b("walking_arrow");
    const ObjRef o0 = b.add_object("0"), o1 = b.add_object("1");
    b.add_identity(o0, "id0");
    b.add_identity(o1, "id1");
    b.add_morphism("a", o0, o1);
    b.fill_unit_laws();
    return std::move(b).build();
  }
  if (shape == "idempotent") {
    CatBuilder b("walking_idempotent");
    const ObjRef o = b.add_object("*");
    b.add_identity(o, "id");
    const MorRef e = b.add_morphism("e", o, o);
    b.fill_unit_laws();
    b.set_comp(e, e, e);
    return std::move(b).build();
  }
  if (shape == "retract") {
    CatBuilder b("walking_retract");
    const ObjRef a = b.add_object("A"), c = b.add_object("B");
    const MorRef ia = b.add_identity(a, "idA");
    b.add_identity(c, "idB");
    const MorRef i = b.add_morphism("i", a, c);
    const MorRef r = b.add_morphism("r", c, a);
    const MorRef e = b.add_morphism("e", c, c);
    b.fill_unit_laws();
    b.set_comp(r, i, ia);
    b.set_comp(i, r, e);
    b.set_comp(e, e, e);
    b.set_comp(e, i, i);
    b.set_comp(r, e, r);
    return std::move(b).build();
  }
  if (shape == "iso") {
    CatBuilder b("walking_iso");
    const ObjRef o0 = b.add_object("0"), o1 = b.add_object("1");
    const MorRef i0 = b.add_identity(o0, "id0");
    const MorRef i1 = b.add_identity(o1, "id1");
    const MorRef f = b.add_morphism("f", o0, o1);
    const MorRef g = b.add_morphism("g", o1, o0);
    b.fill_unit_laws();
    b.set_comp(g, f, i0);
    b.set_comp(f, g, i1);
    return std::move(b).build();
  }
  if (shape == "cospan") {
    CatBuilder b("walking_cospan");
    const ObjRef o0 = b.add_object("0"), o1 = b.add_object("1"), o2 = b.add_object("2");
    b.add_identity(o0, "id0");
    b.add_identity(o1, "id1");
    b.add_identity(o2, "id2");
    b.add_morphism("a", o0, o2);
    b.add_morphism("b", o1, o2);
    b.fill_unit_laws();
    return std::move(b).build();
  }
  throw PreconditionError("unknown walking shape '" + std::string(shape) + "'");
}

}  // namespace dmc
