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

#include "dmc/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "dmc/lifting.hpp"
#include "dmc/pullback.hpp"
#include "dmc/views.hpp"

namespace dmc {

namespace {

using Perm = std::vector<std::size_t>;

Perm multiply(const Perm& h, const Perm& g) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = h[g[i]];
  return out;
}

// Elements of the generated group, identity first, then in discovery order.
std::vector<Perm> generate_group(std::size_t degree, const std::vector<Perm>& gens,
                                 std::size_t limit) {
  Perm e(degree);
  std::iota(e.begin(), e.end(), 0);
  std::vector<Perm> elems{e};
  std::set<Perm> seen{e};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : gens) {
      Perm p = multiply(g, elems[i]);
      if (seen.insert(p).second) {
        elems.push_back(std::move(p));
        if (elems.size() > limit) throw BudgetExceeded("group exceeds the size limit");
      }
    }
  }
  return elems;
}

std::size_t parse_size(std::string_view s, std::string_view spec) {
  if (s.empty()) throw ParseError("missing size in '" + std::string(spec) + "'", 1, 1);
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw ParseError("bad size in '" + std::string(spec) + "'", 1, 1);
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1000) throw ParseError("size too large in '" + std::string(spec) + "'", 1, 1);
  }
  return v;
}

Perm cycle(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

}  // namespace

GroupoidSpec groupoid_from_spec(std::string_view spec, const std::string& name) {
  GroupoidSpec g;
  g.name = name;
  auto one_object = [&](std::size_t degree, std::vector<Perm> gens) {
    g.components.push_back({{"*"}, degree, std::move(gens)});
  };
  if (spec == "terminal") {
    one_object(1, {});
  } else if (spec == "empty") {
  } else if (spec.rfind("cyclic:", 0) == 0) {
    const std::size_t n = parse_size(spec.substr(7), spec);
    if (n == 0) throw ParseError("cyclic group of order 0", 1, 1);
    one_object(n, {cycle(n)});
  } else if (spec.rfind("symmetric:", 0) == 0) {
    const std::size_t n = parse_size(spec.substr(10), spec);
    if (n == 0) throw ParseError("symmetric group of degree 0", 1, 1);
    std::vector<Perm> gens{cycle(n)};
    if (n > 1) {
      Perm t(n);
      std::iota(t.begin(), t.end(), 0);
      std::swap(t[0], t[1]);
      gens.push_back(t);
    }
    one_object(n, gens);
  } else if (spec.rfind("discrete:", 0) == 0) {
    const std::size_t n = parse_size(spec.substr(9), spec);
    for (std::size_t i = 0; i < n; ++i)
      g.components.push_back({{std::to_string(i)}, 1, {}});
  } else if (spec.rfind("codiscrete:", 0) == 0) {
    const std::size_t n = parse_size(spec.substr(11), spec);
    GroupoidSpec::Component c;
    for (std::size_t i = 0; i < n; ++i) c.objects.push_back(std::to_string(i));
    if (n > 0) g.components.push_back(std::move(c));
  } else if (spec.rfind("perm:", 0) == 0) {
    std::vector<Perm> gens;
    std::size_t degree = 0;
    std::stringstream ps{std::string(spec.substr(5))};
    std::string item;
    while (std::getline(ps, item, '/')) {
      Perm p;
      std::stringstream is(item);
      std::string v;
      while (std::getline(is, v, ',')) p.push_back(parse_size(v, spec));
      if (degree == 0) degree = p.size();
      if (p.empty() || p.size() != degree)
        throw ParseError("permutations of unequal degree in '" + std::string(spec) + "'",
                         1, 1);
      gens.push_back(std::move(p));
    }
    if (gens.empty()) throw ParseError("no permutations in '" + std::string(spec) + "'", 1, 1);
    one_object(degree, gens);
  } else {
    throw ParseError("unknown groupoid spec '" + std::string(spec) + "'", 1, 1);
  }
  return g;
}

FinCat build_groupoid(const GroupoidSpec& spec, Limits limits) {
  CatBuilder b(spec.name, limits);
  std::vector<std::vector<Perm>> groups;
  std::vector<std::map<Perm, std::size_t>> index;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, MorRef> refs;
  std::vector<std::vector<ObjRef>> objs;
  for (const auto& c : spec.components) {
    if (c.objects.empty()) throw PreconditionError("empty groupoid component");
    for (const Perm& p : c.generators) {
      Perm sorted = p;
      std::sort(sorted.begin(), sorted.end());
      Perm e(c.degree);
      std::iota(e.begin(), e.end(), 0);
      if (sorted != e) throw PreconditionError("generator is not a permutation");
    }
    groups.push_back(generate_group(c.degree, c.generators, limits.max_morphisms));
    index.emplace_back();
    for (std::size_t i = 0; i < groups.back().size(); ++i)
      index.back()[groups.back()[i]] = i;
    objs.emplace_back();
    for (const auto& o : c.objects) objs.back().push_back(b.add_object(o));
  }
  for (std::size_t c = 0; c < groups.size(); ++c) {
    const auto& names = spec.components[c].objects;
    for (std::size_t a = 0; a < names.size(); ++a)
      for (std::size_t g = 0; g < groups[c].size(); ++g)
        for (std::size_t t = 0; t < names.size(); ++t) {
          const bool id = a == t && g == 0;
          const std::string name =
              id ? "id_" + names[a] : names[a] + "_" + std::to_string(g) + "_" + names[t];
          const MorRef m = b.add_morphism(name, objs[c][a], objs[c][t]);
          refs[{c, a, g, t}] = m;
          if (id) b.set_identity(objs[c][a], m);
        }
  }
  for (std::size_t c = 0; c < groups.size(); ++c) {
    const std::size_t n = spec.components[c].objects.size();
    const std::size_t k = groups[c].size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t t = 0; t < n; ++t)
          for (std::size_t g = 0; g < k; ++g)
            for (std::size_t h = 0; h < k; ++h) {
              const std::size_t hg = index[c].at(multiply(groups[c][h], groups[c][g]));
              b.set_comp(refs[{c, m, h, t}], refs[{c, a, g, m}], refs[{c, a, hg, t}]);
            }
  }
  return std::move(b).build();
}

bool is_groupoid(const FinCat& cat) {
  for (MorRef m : cat.morphisms())
    if (!is_iso(cat, m)) return false;
  return true;
}

Functor identity_functor(const FinCat& a) {
  Functor f;
  f.obj = a.objects();
  f.mor = a.morphisms();
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  Functor out;
  out.obj.reserve(f.obj.size());
  out.mor.reserve(f.mor.size());
  for (ObjRef x : f.obj) out.obj.push_back(g.obj[x.index]);
  for (MorRef m : f.mor) out.mor.push_back(g.mor[m.index]);
  return out;
}

bool is_functor(const FinCat& a, const FinCat& b, const Functor& f) {
  if (f.obj.size() != a.num_objects() || f.mor.size() != a.num_morphisms()) return false;
  for (ObjRef x : f.obj)
    if (x.index >= b.num_objects()) return false;
  for (MorRef m : a.morphisms()) {
    const MorRef fm = f.mor[m.index];
    if (fm.index >= b.num_morphisms()) return false;
    if (b.src(fm) != f.obj[a.src(m).index] || b.dst(fm) != f.obj[a.dst(m).index])
      return false;
  }
  for (ObjRef x : a.objects())
    if (f.mor[a.identity(x).index] != b.identity(f.obj[x.index])) return false;
  for (MorRef g : a.morphisms())
    for (MorRef h : a.morphisms()) {
      auto gh = a.try_compose(g, h);
      if (!gh) continue;
      if (b.try_compose(f.mor[g.index], f.mor[h.index]) != f.mor[gh->index]) return false;
    }
  return true;
}

namespace {

// Non-identity morphisms whose composites generate everything, chosen
// greedily in index order.
std::vector<MorRef> generating_set(const FinCat& a) {
  const std::size_t n = a.num_morphisms();
  std::vector<char> reached(n, 0);
  for (ObjRef x : a.objects()) reached[a.identity(x).index] = 1;
  std::vector<MorRef> gens;
  for (MorRef m : a.morphisms()) {
    if (reached[m.index]) continue;
    gens.push_back(m);
    reached[m.index] = 1;
    for (bool changed = true; changed;) {
      changed = false;
      for (MorRef g : a.morphisms()) {
        if (!reached[g.index]) continue;
        for (MorRef f : a.morphisms()) {
          if (!reached[f.index]) continue;
          auto h = a.try_compose(g, f);
          if (h && !reached[h->index]) {
            reached[h->index] = 1;
            changed = true;
          }
        }
      }
    }
  }
  return gens;
}

class FunctorSearch {
 public:
  FunctorSearch(const FinCat& a, const FinCat& b, std::size_t budget,
                bool injective = false)
      : a_(a), b_(b), budget_(budget), injective_(injective), gens_(generating_set(a)) {}

  std::vector<Functor> run() {
    std::vector<std::int64_t> obj(a_.num_objects(), -1);
    objects(0, obj);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void objects(std::size_t i, std::vector<std::int64_t>& obj) {
    if (i == obj.size()) {
      std::vector<std::int64_t> mor(a_.num_morphisms(), -1);
      for (ObjRef x : a_.objects())
        mor[a_.identity(x).index] = b_.identity(ObjRef{static_cast<std::uint32_t>(obj[x.index])}).index;
      if (!propagate(mor)) return;
      morphisms(0, obj, mor);
      return;
    }
    for (std::uint32_t y = 0; y < b_.num_objects() && !done_; ++y) {
      if (injective_ && std::find(obj.begin(), obj.begin() + static_cast<std::ptrdiff_t>(i),
                                  static_cast<std::int64_t>(y)) != obj.begin() + static_cast<std::ptrdiff_t>(i))
        continue;
      obj[i] = y;
      objects(i + 1, obj);
    }
    obj[i] = -1;
  }

  void morphisms(std::size_t k, const std::vector<std::int64_t>& obj,
                 const std::vector<std::int64_t>& mor) {
    if (k == gens_.size()) {
      Functor f;
      for (auto o : obj) f.obj.push_back(ObjRef{static_cast<std::uint32_t>(o)});
      for (auto m : mor) {
        if (m < 0) return;
        f.mor.push_back(MorRef{static_cast<std::uint32_t>(m)});
      }
      if (out_.size() >= budget_)
        throw BudgetExceeded("more than " + std::to_string(budget_) + " functors " +
                             a_.name() + " -> " + b_.name());
      out_.push_back(std::move(f));
      if (injective_) done_ = true;
      return;
    }
    const MorRef g = gens_[k];
    if (mor[g.index] >= 0) {
      morphisms(k + 1, obj, mor);
      return;
    }
    const ObjRef s{static_cast<std::uint32_t>(obj[a_.src(g).index])};
    const ObjRef t{static_cast<std::uint32_t>(obj[a_.dst(g).index])};
    for (MorRef cand : b_.hom(s, t)) {
      if (done_) return;
      std::vector<std::int64_t> next = mor;
      next[g.index] = cand.index;
      if (propagate(next)) morphisms(k + 1, obj, next);
    }
  }

  // Extends the partial map along composites; false on a conflict.
  bool propagate(std::vector<std::int64_t>& mor) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (MorRef g : a_.morphisms()) {
        if (mor[g.index] < 0) continue;
        for (MorRef f : a_.morphisms()) {
          if (mor[f.index] < 0) continue;
          auto h = a_.try_compose(g, f);
          if (!h) continue;
          auto img = b_.try_compose(MorRef{static_cast<std::uint32_t>(mor[g.index])},
                                    MorRef{static_cast<std::uint32_t>(mor[f.index])});
          if (!img) return false;
          if (mor[h->index] < 0) {
            mor[h->index] = img->index;
            changed = true;
          } else if (mor[h->index] != img->index) {
            return false;
          }
        }
      }
    }
    if (injective_) {
      std::vector<char> used(b_.num_morphisms(), 0);
      for (auto m : mor) {
        if (m < 0) continue;
        if (used[static_cast<std::size_t>(m)]) return false;
        used[static_cast<std::size_t>(m)] = 1;
      }
    }
    return true;
  }

  const FinCat& a_;
  const FinCat& b_;
  std::size_t budget_;
  bool injective_;
  bool done_ = false;
  std::vector<MorRef> gens_;
  std::vector<Functor> out_;
};

std::vector<std::size_t> shape_invariant(const FinCat& c) {
  std::vector<std::size_t> v;
  for (ObjRef x : c.objects()) {
    // Size of the automorphism group, then the orders of its elements.
    std::vector<std::size_t> orders;
    for (MorRef g : c.hom(x, x)) {
      std::size_t k = 1;
      for (MorRef p = g; p != c.identity(x) && k <= c.num_morphisms(); ++k)
        p = c.compose(g, p);
      orders.push_back(k);
    }
    std::sort(orders.begin(), orders.end());
    std::size_t code = c.hom(x, x).size();
    for (std::size_t o : orders) code = code * 1000003 + o;
    v.push_back(code);
  }
  std::sort(v.begin(), v.end());
  v.push_back(c.num_objects());
  v.push_back(c.num_morphisms());
  return v;
}


}  // namespace

std::vector<Functor> enumerate_functors(const FinCat& a, const FinCat& b,
                                        std::size_t budget) {
  return FunctorSearch(a, b, budget).run();
}

std::optional<Functor> find_isomorphism(const FinCat& a, const FinCat& b) {
  if (shape_invariant(a) != shape_invariant(b)) return std::nullopt;
  // Equal sizes, so the first injective functor is an isomorphism.
  auto found = FunctorSearch(a, b, static_cast<std::size_t>(-1), true).run();
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

bool is_isofibration(const FinCat& e, const FinCat& b, const Functor& p) {
  for (ObjRef x : e.objects()) {
    const ObjRef px = p.obj[x.index];
    for (ObjRef y : b.objects())
      for (MorRef beta : b.hom(px, y)) {
        bool lifted = false;
        for (MorRef m : e.morphisms())
          if (e.src(m) == x && p.mor[m.index] == beta) {
            lifted = true;
            break;
          }
        if (!lifted) return false;
      }
  }
  return true;
}

StrictPullback strict_pullback(const FinCat& e, const FinCat& b, const Functor& p,
                               const FinCat& a, const Functor& f) {
  (void)b;
  CatBuilder cb("(" + e.name() + "x" + a.name() + ")", kUnboundedLimits);
  StrictPullback out;
  std::map<std::pair<std::uint32_t, std::uint32_t>, ObjRef> objs;
  for (ObjRef x : e.objects())
    for (ObjRef y : a.objects())
      if (p.obj[x.index] == f.obj[y.index]) {
        objs[{x.index, y.index}] =
            cb.add_object("(" + e.object_name(x) + "," + a.object_name(y) + ")");
        out.proj0.obj.push_back(x);
        out.proj1.obj.push_back(y);
      }
  std::map<std::pair<std::uint32_t, std::uint32_t>, MorRef> mors;
  for (MorRef m : e.morphisms())
    for (MorRef n : a.morphisms())
      if (p.mor[m.index] == f.mor[n.index]) {
        const ObjRef s = objs.at({e.src(m).index, a.src(n).index});
        const ObjRef t = objs.at({e.dst(m).index, a.dst(n).index});
        const MorRef r =
            cb.add_morphism("(" + e.morphism_name(m) + "," + a.morphism_name(n) + ")", s, t);
        mors[{m.index, n.index}] = r;
        if (e.is_identity(m) && a.is_identity(n)) cb.set_identity(s, r);
        out.proj0.mor.push_back(m);
        out.proj1.mor.push_back(n);
      }
  for (const auto& [gk, gr] : mors)
    for (const auto& [fk, fr] : mors) {
      if (e.dst(MorRef{fk.first}) != e.src(MorRef{gk.first}) ||
          a.dst(MorRef{fk.second}) != a.src(MorRef{gk.second}))
        continue;
      const MorRef h0 = e.compose(MorRef{gk.first}, MorRef{fk.first});
      const MorRef h1 = a.compose(MorRef{gk.second}, MorRef{fk.second});
      cb.set_comp(gr, fr, mors.at({h0.index, h1.index}));
    }
  out.apex = std::move(cb).build();
  return out;
}

PathGroupoid path_groupoid(const FinCat& e, const FinCat& b, const Functor& p) {
  PathGroupoid out;
  out.pair = strict_pullback(e, b, p, e, p);
  auto vertical = [&](MorRef u) { return b.is_identity(p.mor[u.index]); };

  CatBuilder cb("Path(" + e.name() + ")", kUnboundedLimits);
  std::map<std::uint32_t, ObjRef> obj_of;  // vertical iso -> path object
  std::vector<MorRef> verticals;
  for (MorRef u : e.morphisms())
    if (vertical(u)) {
      obj_of[u.index] = cb.add_object("<" + e.morphism_name(u) + ">");
      verticals.push_back(u);
    }
  struct Square {
    MorRef u, s, t, u2;
  };
  std::vector<Square> squares;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, MorRef> mor_of;
  for (MorRef u : verticals)
    for (MorRef s : e.morphisms()) {
      if (e.src(s) != e.src(u)) continue;
      const auto s_inv = is_iso(e, s);
      if (!s_inv) throw PreconditionError(e.name() + " is not a groupoid");
      for (MorRef t : e.morphisms()) {
        if (e.src(t) != e.dst(u) || p.mor[s.index] != p.mor[t.index]) continue;
        const MorRef u2 = e.compose(t, u, *s_inv);
        const MorRef m = cb.add_morphism("[" + e.morphism_name(u) + ";" +
                                             e.morphism_name(s) + ";" +
                                             e.morphism_name(t) + "]",
                                         obj_of.at(u.index), obj_of.at(u2.index));
        if (e.is_identity(s) && e.is_identity(t)) cb.set_identity(obj_of.at(u.index), m);
        mor_of[{u.index, s.index, t.index}] = m;
        squares.push_back({u, s, t, u2});
      }
    }
  for (const Square& g : squares)
    for (const Square& f : squares) {
      if (f.u2 != g.u) continue;
      const MorRef s = e.compose(g.s, f.s);
      const MorRef t = e.compose(g.t, f.t);
      cb.set_comp(mor_of.at({g.u.index, g.s.index, g.t.index}),
                  mor_of.at({f.u.index, f.s.index, f.t.index}),
                  mor_of.at({f.u.index, s.index, t.index}));
    }
  out.path = std::move(cb).build();

  for (ObjRef x : e.objects()) out.r.obj.push_back(obj_of.at(e.identity(x).index));
  for (MorRef m : e.morphisms()) {
    const MorRef ids = e.identity(e.src(m));
    out.r.mor.push_back(mor_of.at({ids.index, m.index, m.index}));
  }

  const FinCat& pair = out.pair.apex;
  std::map<std::pair<std::uint32_t, std::uint32_t>, ObjRef> pair_obj;
  for (ObjRef z : pair.objects())
    pair_obj[{out.pair.proj0.obj[z.index].index, out.pair.proj1.obj[z.index].index}] = z;
  std::map<std::pair<std::uint32_t, std::uint32_t>, MorRef> pair_mor;
  for (MorRef z : pair.morphisms())
    pair_mor[{out.pair.proj0.mor[z.index].index, out.pair.proj1.mor[z.index].index}] = z;
  for (MorRef u : verticals)
    out.eps.obj.push_back(pair_obj.at({e.src(u).index, e.dst(u).index}));
  for (const Square& q : squares) out.eps.mor.push_back(pair_mor.at({q.s.index, q.t.index}));
  out.vertical = verticals;
  for (const Square& q : squares) out.sides.push_back({q.u, q.s, q.t});
  return out;
}

Functor path_action(const PathGroupoid& src, const PathGroupoid& dst,
                    const Functor& m) {
  std::map<std::uint32_t, ObjRef> obj_of;
  for (ObjRef z : dst.path.objects()) obj_of[dst.vertical[z.index].index] = z;
  std::map<std::array<std::uint32_t, 3>, MorRef> mor_of;
  for (MorRef z : dst.path.morphisms()) {
    const auto& q = dst.sides[z.index];
    mor_of[{q[0].index, q[1].index, q[2].index}] = z;
  }
  Functor out;
  for (ObjRef z : src.path.objects())
    out.obj.push_back(obj_of.at(m.mor[src.vertical[z.index].index].index));
  for (MorRef z : src.path.morphisms()) {
    const auto& q = src.sides[z.index];
    out.mor.push_back(mor_of.at({m.mor[q[0].index].index, m.mor[q[1].index].index,
                                 m.mor[q[2].index].index}));
  }
  return out;
}

namespace {

struct SiteState {
  std::vector<FinCat> groupoids;
  std::vector<std::string> origin;
  // homs[i][j]: functors groupoids[i] -> groupoids[j], sorted.
  std::vector<std::vector<std::vector<Functor>>> homs;
  std::size_t total = 0;
};

void compute_homs(SiteState& st, const GroupoidSiteOptions& opts) {
  const std::size_t n = st.groupoids.size();
  st.homs.assign(n, std::vector<std::vector<Functor>>(n));
  st.total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t left =
          opts.max_site_morphisms > st.total ? opts.max_site_morphisms - st.total : 0;
      try {
        st.homs[i][j] = enumerate_functors(st.groupoids[i], st.groupoids[j], left);
      } catch (const BudgetExceeded&) {
        throw BudgetExceeded("groupoid site exceeds " +
                             std::to_string(opts.max_site_morphisms) +
                             " compiled morphisms");
      }
      st.total += st.homs[i][j].size();
    }
}

std::optional<std::pair<std::size_t, Functor>> find_copy(const std::vector<FinCat>& gs,
                                                         const FinCat& g) {
  for (std::size_t k = 0; k < gs.size(); ++k)
    if (auto iso = find_isomorphism(g, gs[k])) return std::make_pair(k, std::move(*iso));
  return std::nullopt;
}

Functor invert(const FinCat& a, const FinCat& b, const Functor& f) {
  Functor inv;
  inv.obj.resize(b.num_objects());
  inv.mor.resize(b.num_morphisms());
  for (ObjRef x : a.objects()) inv.obj[f.obj[x.index].index] = x;
  for (MorRef m : a.morphisms()) inv.mor[f.mor[m.index].index] = m;
  return inv;
}

FinCat renamed(const FinCat& g, const std::string& name) {
  CatBuilder b(name, kUnboundedLimits);
  for (ObjRef x : g.objects()) b.add_object(g.object_name(x));
  for (MorRef m : g.morphisms()) b.add_morphism(g.morphism_name(m), g.src(m), g.dst(m));
  for (ObjRef x : g.objects()) b.set_identity(x, g.identity(x));
  for (MorRef f : g.morphisms())
    for (MorRef h : g.morphisms())
      if (auto c = g.try_compose(f, h)) b.set_comp(f, h, *c);
  return std::move(b).build();
}

}  // namespace

GroupoidSite gen_groupoid_site(const std::vector<GroupoidSpec>& inputs,
                               const GroupoidSiteOptions& opts) {
  GroupoidSite site;
  SiteState st;
  const Limits glimits{opts.max_groupoid_morphisms, opts.max_groupoid_morphisms};
  std::set<std::string> names;
  for (const GroupoidSpec& spec : inputs) {
    if (!names.insert(spec.name).second)
      throw PreconditionError("duplicate groupoid name '" + spec.name + "'");
    FinCat g = build_groupoid(spec, glimits);
    if (auto copy = find_copy(st.groupoids, g)) {
      site.provenance.push_back("input " + spec.name + " is isomorphic to " +
                                st.groupoids[copy->first].name() + "; dropped");
      continue;
    }
    site.provenance.push_back("input " + spec.name);
    st.groupoids.push_back(std::move(g));
  }

  std::vector<std::string> pending_why;
  auto add_candidate = [&](FinCat g, const std::string& why, std::vector<FinCat>& pending) {
    if (g.num_morphisms() > opts.max_groupoid_morphisms)
      throw BudgetExceeded(why + " has " + std::to_string(g.num_morphisms()) +
                           " morphisms, above the per-groupoid budget");
    if (find_copy(st.groupoids, g) || find_copy(pending, g)) return;
    std::string name;
    for (std::size_t k = st.groupoids.size() + pending.size();; ++k) {
      name = "G" + std::to_string(k);
      if (!names.count(name)) break;
    }
    names.insert(name);
    pending_why.push_back("round " + std::to_string(site.rounds + 1) + ": " + name + " = " +
                          why);
    pending.push_back(renamed(g, name));
  };

  for (;;) {
    compute_homs(st, opts);
    std::vector<FinCat> pending;
    pending_why.clear();
    const std::size_t n = st.groupoids.size();
    const bool last = opts.max_rounds && site.rounds >= *opts.max_rounds;
    try {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < st.homs[i][j].size(); ++a) {
          const Functor& p = st.homs[i][j][a];
          const FinCat& e = st.groupoids[i];
          const FinCat& b = st.groupoids[j];
          if (!is_isofibration(e, b, p)) continue;
          const std::string pname = e.name() + "->" + b.name() + "." + std::to_string(a);
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t c = 0; c < st.homs[k][j].size(); ++c) {
              StrictPullback pb = strict_pullback(e, b, p, st.groupoids[k], st.homs[k][j][c]);
              add_candidate(std::move(pb.apex),
                            "pullback of " + pname + " along " + st.groupoids[k].name() +
                                "->" + b.name() + "." + std::to_string(c),
                            pending);
            }
          add_candidate(path_groupoid(e, b, p).path, "path groupoid of " + pname, pending);
        }
    } catch (const BudgetExceeded& ex) {
      // The last round of a fragment only decides whether closure failed.
      if (!last) throw;
      site.provenance.push_back(std::string("next round exceeds the budget: ") + ex.what());
      break;
    }
    if (pending.empty()) {
      site.closed = true;
      break;
    }
    if (last) {
      site.provenance.push_back("stopped after " + std::to_string(site.rounds) +
                                " rounds with " + std::to_string(pending.size()) +
                                " groupoids missing; compiled as a fragment");
      break;
    }
    for (FinCat& g : pending) st.groupoids.push_back(std::move(g));
    for (std::string& w : pending_why) site.provenance.push_back(std::move(w));
    ++site.rounds;
  }

  // Compile.
  const std::size_t n = st.groupoids.size();
  CatBuilder cb(site.closed ? "groupoid_site" : "groupoid_fragment", kUnboundedLimits);
  std::vector<ObjRef> obj;
  for (const FinCat& g : st.groupoids) obj.push_back(cb.add_object(g.name()));
  std::map<std::tuple<std::size_t, std::size_t, std::vector<MorRef>>, MorRef> index;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = 0;
      for (const Functor& f : st.homs[i][j]) {
        const bool id = i == j && f == identity_functor(st.groupoids[i]);
        const std::string name = id ? "id_" + st.groupoids[i].name()
                                    : st.groupoids[i].name() + "->" +
                                          st.groupoids[j].name() + "." + std::to_string(k++);
        const MorRef m = cb.add_morphism(name, obj[i], obj[j]);
        if (id) cb.set_identity(obj[i], m);
        index[{i, j, f.mor}] = m;
        site.functors.push_back(f);
        ends.emplace_back(i, j);
      }
    }
  for (std::size_t g = 0; g < site.functors.size(); ++g)
    for (std::size_t f = 0; f < site.functors.size(); ++f) {
      if (ends[f].second != ends[g].first) continue;
      const Functor h = compose_functors(site.functors[g], site.functors[f]);
      cb.set_comp(MorRef{static_cast<std::uint32_t>(g)}, MorRef{static_cast<std::uint32_t>(f)},
                  index.at({ends[f].first, ends[g].second, h.mor}));
    }
  InstanceBundle& bundle = site.bundle;
  bundle.cat = std::move(cb).build();
  const FinCat& cat = bundle.cat;
  auto site_mor = [&](std::size_t i, std::size_t j, const Functor& f) {
    return index.at({i, j, f.mor});
  };

  bundle.d = MorClass(cat.num_morphisms());
  for (MorRef m : cat.morphisms()) {
    const auto [i, j] = ends[m.index];
    if (is_isofibration(st.groupoids[i], st.groupoids[j], site.functors[m.index]))
      bundle.d.insert(m);
  }

  // Path-object Id-structure, wherever the fragment contains the objects.
  IdAssignment ida(cat.num_morphisms());
  std::map<std::uint32_t, PathGroupoid> paths;
  std::map<std::uint32_t, std::pair<std::size_t, Functor>> path_iso;
  for (MorRef d : bundle.d.members()) {
    const auto [i, j] = ends[d.index];
    const FinCat& e = st.groupoids[i];
    PathGroupoid pg = path_groupoid(e, st.groupoids[j], site.functors[d.index]);
    auto ic = find_copy(st.groupoids, pg.path);
    auto qc = find_copy(st.groupoids, pg.pair.apex);
    if (!ic || !qc) continue;
    const std::size_t k = ic->first, q = qc->first;
    const Functor& phi_i = ic->second;
    const Functor& phi_q = qc->second;
    const Functor phi_q_inv = invert(pg.pair.apex, st.groupoids[q], phi_q);
    const Functor phi_i_inv = invert(pg.path, st.groupoids[k], phi_i);
    PullbackResult sq;
    sq.left = d;
    sq.right = d;
    sq.apex = obj[q];
    sq.proj0 = site_mor(q, i, compose_functors(pg.pair.proj0, phi_q_inv));
    sq.proj1 = site_mor(q, i, compose_functors(pg.pair.proj1, phi_q_inv));
    if (!is_pullback(cat, d, d, sq.apex, sq.proj0, sq.proj1))
      throw Refutation("groupoid.pullback",
                       "strict pullback of " + cat.morphism_name(d) +
                           " is not a pullback in the compiled site");
    const MorRef r = site_mor(i, k, compose_functors(phi_i, pg.r));
    const MorRef eps = site_mor(k, q, compose_functors(phi_q, compose_functors(pg.eps, phi_i_inv)));
    const MorRef id = cat.identity(obj[i]);
    ida.set(IdEntry{d, obj[k], r, eps, sq.mediate(cat, id, id), sq});
    path_iso.emplace(d.index, std::make_pair(k, phi_i));
    paths.emplace(d.index, std::move(pg));
  }
  bundle.ida = ida;
  FunctorialIdAssignment fida(std::move(ida));
  for (const SliceArrow& a : display_slice_arrows(cat, bundle.d)) {
    auto p1 = paths.find(a.d.index), p2 = paths.find(a.d2.index);
    if (p1 == paths.end() || p2 == paths.end()) continue;
    const auto& [k1, phi1] = path_iso.at(a.d.index);
    const auto& [k2, phi2] = path_iso.at(a.d2.index);
    const Functor act = path_action(p1->second, p2->second, site.functors[a.m.index]);
    const Functor conj = compose_functors(
        phi2, compose_functors(act, invert(p1->second.path, st.groupoids[k1], phi1)));
    fida.set_action(a.d, a.d2, a.m, site_mor(k1, k2, conj));
  }
  bundle.fida = std::move(fida);
  bundle.notes.push_back(site.closed ? "compiled groupoid site"
                                     : "groupoid site fragment (closure not reached)");
  for (const std::string& line : site.provenance) bundle.notes.push_back(line);
  site.groupoids = std::move(st.groupoids);
  return site;
}

Report check_isofibration_lifting(const GroupoidSite& site) {
  Report rep;
  const FinCat& cat = site.bundle.cat;
  const FinCat terminal_g = build_groupoid(groupoid_from_spec("terminal", "1"));
  const FinCat walking_iso = build_groupoid(groupoid_from_spec("codiscrete:2", "J"));
  std::optional<std::size_t> one, j;
  for (std::size_t k = 0; k < site.groupoids.size(); ++k) {
    if (!one && find_isomorphism(site.groupoids[k], terminal_g)) one = k;
    if (!j && find_isomorphism(site.groupoids[k], walking_iso)) j = k;
  }
  if (!one || !j) {
    rep.skip("groupoid.isofibration_lifting", cat.name(),
             "site lacks a terminal groupoid or a walking iso");
    return rep;
  }
  const auto probes = hom_set(cat, ObjRef{static_cast<std::uint32_t>(*one)},
                              ObjRef{static_cast<std::uint32_t>(*j)});
  for (MorRef p : cat.morphisms()) {
    bool lifting = true;
    for (MorRef i : probes) lifting = lifting && lifts_against(cat, i, p);
    if (lifting != site.bundle.d.contains(p)) {
      rep.fail("groupoid.isofibration_lifting", cat.name(),
               "isofibration test and lifting test disagree",
               {cat.morphism_name(p)});
      return rep;
    }
  }
  rep.pass("groupoid.isofibration_lifting", cat.name());
  return rep;
}

}  // namespace dmc
