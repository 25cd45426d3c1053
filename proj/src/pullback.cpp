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

#include "dmc/pullback.hpp"

#include <algorithm>
#include <cstdint>

namespace dmc {

namespace {

std::uint64_t key(MorRef a, MorRef b) {
  return (std::uint64_t{a.index} << 32) | b.index;
}

// Number of cones (u, v) over the cospan with vertex t.
std::vector<std::size_t> cone_counts(const FinCat& cat, MorRef f, MorRef g) {
  const ObjRef a = cat.src(f);
  const ObjRef b = cat.src(g);
  std::vector<std::size_t> counts(cat.num_objects(), 0);
  for (ObjRef t : cat.objects()) {
    std::size_t n = 0;
    for (MorRef u : cat.hom(t, a)) {
      const MorRef fu = cat.compose(f, u);
      for (MorRef v : cat.hom(t, b))
        if (cat.compose(g, v) == fu) ++n;
    }
    counts[t.index] = n;
  }
  return counts;
}

// hom(t, P) -> cones(t), m |-> (p0 m, p1 m) must be a bijection for every t.
// Images are always cones, so injectivity plus equal size suffices.
bool universal(const FinCat& cat, ObjRef apex, MorRef p0, MorRef p1,
               const std::vector<std::size_t>& cones) {
  std::vector<std::uint64_t> images;
  for (ObjRef t : cat.objects()) {
    auto h = cat.hom(t, apex);
    if (h.size() != cones[t.index]) return false;
    images.clear();
    for (MorRef m : h) images.push_back(key(cat.compose(p0, m), cat.compose(p1, m)));
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      return false;
  }
  return true;
}

template <typename Visit>
void for_each_pullback(const FinCat& cat, MorRef f, MorRef g, Visit&& visit) {
  if (cat.dst(f) != cat.dst(g))
    throw PreconditionError("pullback of a non-cospan " + cat.morphism_name(f) +
                            ", " + cat.morphism_name(g));
  const auto cones = cone_counts(cat, f, g);
  const ObjRef a = cat.src(f);
  const ObjRef b = cat.src(g);
  for (ObjRef p : cat.objects()) {
    // Necessary: hom(p, p) is in bijection with the cones at p.
    if (cat.hom(p, p).size() != cones[p.index]) continue;
    for (MorRef p0 : cat.hom(p, a)) {
      const MorRef fp0 = cat.compose(f, p0);
      for (MorRef p1 : cat.hom(p, b)) {
        if (cat.compose(g, p1) != fp0) continue;
        if (universal(cat, p, p0, p1, cones)) {
          if (!visit(PullbackResult{f, g, p, p0, p1})) return;
        }
      }
    }
  }
}

}  // namespace

std::optional<MorRef> PullbackResult::mediator(const FinCat& cat, MorRef u,
                                               MorRef v) const {
  if (cat.src(u) != cat.src(v)) return std::nullopt;
  for (MorRef m : cat.hom(cat.src(u), apex))
    if (cat.compose(proj0, m) == u && cat.compose(proj1, m) == v) return m;
  return std::nullopt;
}

MorRef PullbackResult::mediate(const FinCat& cat, MorRef u, MorRef v) const {
  if (auto m = mediator(cat, u, v)) return *m;
  throw Refutation("pullback", "cone (" + cat.morphism_name(u) + ", " +
                                   cat.morphism_name(v) + ") has no mediator into " +
                                   cat.object_name(apex));
}

std::optional<PullbackResult> pullback(const FinCat& cat, MorRef f, MorRef g) {
  std::optional<PullbackResult> out;
  for_each_pullback(cat, f, g, [&](const PullbackResult& r) {
    out = r;
    return false;
  });
  return out;
}

std::vector<PullbackResult> all_pullbacks(const FinCat& cat, MorRef f, MorRef g) {
  std::vector<PullbackResult> out;
  for_each_pullback(cat, f, g, [&](const PullbackResult& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

bool is_pullback(const FinCat& cat, MorRef f, MorRef g, ObjRef apex, MorRef p0,
                 MorRef p1) {
  if (cat.dst(f) != cat.dst(g) || cat.src(p0) != apex || cat.src(p1) != apex ||
      cat.dst(p0) != cat.src(f) || cat.dst(p1) != cat.src(g))
    return false;
  if (cat.compose(f, p0) != cat.compose(g, p1)) return false;
  return universal(cat, apex, p0, p1, cone_counts(cat, f, g));
}

std::optional<MorRef> pullback_comparison(const FinCat& cat,
                                          const PullbackResult& a,
                                          const PullbackResult& b) {
  auto phi = b.mediator(cat, a.proj0, a.proj1);
  auto psi = a.mediator(cat, b.proj0, b.proj1);
  if (!phi || !psi) return std::nullopt;
  if (cat.compose(*psi, *phi) != cat.identity(a.apex) ||
      cat.compose(*phi, *psi) != cat.identity(b.apex))
    return std::nullopt;
  return phi;
}

std::optional<PullbackResult> product(const FinCat& cat, ObjRef x, ObjRef y) {
  auto t = terminal(cat);
  if (!t) return std::nullopt;
  return pullback(cat, to_terminal(cat, x, *t), to_terminal(cat, y, *t));
}

std::optional<PullbackResult> PullbackCache::get(MorRef f, MorRef g) {
  const std::uint64_t k = key(f, g);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  }
  auto r = pullback(cat_, f, g);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(k, r);
  return r;
}

namespace reference {

std::optional<PullbackResult> pullback(const FinCat& cat, MorRef f, MorRef g) {
  if (cat.dst(f) != cat.dst(g))
    throw PreconditionError("pullback of a non-cospan");
  const ObjRef a = cat.src(f);
  const ObjRef b = cat.src(g);
  for (ObjRef p : cat.objects()) {
    for (MorRef p0 : cat.hom(p, a)) {
      for (MorRef p1 : cat.hom(p, b)) {
        if (cat.compose(f, p0) != cat.compose(g, p1)) continue;
        bool ok = true;
        for (ObjRef t : cat.objects()) {
          for (MorRef u : cat.hom(t, a)) {
            for (MorRef v : cat.hom(t, b)) {
              if (cat.compose(f, u) != cat.compose(g, v)) continue;
              std::size_t mediators = 0;
              for (MorRef m : cat.hom(t, p))
                if (cat.compose(p0, m) == u && cat.compose(p1, m) == v) ++mediators;
              if (mediators != 1) {
                ok = false;
                break;
              }
            }
            if (!ok) break;
          }
          if (!ok) break;
        }
        if (ok) return PullbackResult{f, g, p, p0, p1};
      }
    }
  }
  return std::nullopt;
}

}  // namespace reference

}  // namespace dmc
