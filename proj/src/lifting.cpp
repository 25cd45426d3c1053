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

#include "dmc/lifting.hpp"

#include <sstream>

#include "dmc/parallel.hpp"
#include "dmc/views.hpp"

namespace dmc {
namespace {

// Squares from f to g that are images of a diagonal, as a bitmap over
// hom(A,X) x hom(B,Y).
std::vector<char> lifted_squares(const FinCat& cat, MorRef f, MorRef g) {
  const auto bottoms = cat.hom(cat.dst(f), cat.dst(g));
  const auto tops = cat.hom(cat.src(f), cat.src(g));
  std::vector<char> hit(tops.size() * bottoms.size(), 0);
  for (MorRef h : cat.hom(cat.dst(f), cat.src(g))) {
    const MorRef top = cat.compose(h, f);
    const MorRef bottom = cat.compose(g, h);
    hit[cat.hom_position(top) * bottoms.size() + cat.hom_position(bottom)] = 1;
  }
  return hit;
}

bool lifts_fast(const FinCat& cat, MorRef f, MorRef g) {
  const auto tops = cat.hom(cat.src(f), cat.src(g));
  const auto bottoms = cat.hom(cat.dst(f), cat.dst(g));
  if (tops.empty() || bottoms.empty()) return true;
  const auto hit = lifted_squares(cat, f, g);
  for (MorRef top : tops) {
    const MorRef gt = cat.compose(g, top);
    for (MorRef bottom : bottoms) {
      if (cat.compose(bottom, f) != gt) continue;
      if (!hit[cat.hom_position(top) * bottoms.size() + cat.hom_position(bottom)]) return false;
    }
  }
  return true;
}

MorClass complement(const FinCat& cat, const MorClass& cls, bool left) {
  const auto members = cls.members();
  const auto flags = parallel_map<char>(cat.num_morphisms(), [&](std::size_t i) {
    const MorRef m{static_cast<std::uint32_t>(i)};
    for (MorRef c : members) {
      const bool ok = left ? lifts_fast(cat, m, c) : lifts_fast(cat, c, m);
      if (!ok) return char{0};
    }
    return char{1};
  });
  MorClass out(cat.num_morphisms());
  for (std::uint32_t i = 0; i < flags.size(); ++i)
    if (flags[i]) out.insert(MorRef{i});
  return out;
}

}  // namespace

std::string describe(const FinCat& cat, const LiftSquare& sq) {
  std::ostringstream os;
  os << "square(left=" << cat.morphism_name(sq.left)
     << ", right=" << cat.morphism_name(sq.right)
     << ", top=" << cat.morphism_name(sq.top)
     << ", bottom=" << cat.morphism_name(sq.bottom) << ")";
  return os.str();
}

bool commutes(const FinCat& cat, const LiftSquare& sq) {
  if (cat.src(sq.top) != cat.src(sq.left) || cat.dst(sq.top) != cat.src(sq.right) ||
      cat.src(sq.bottom) != cat.dst(sq.left) ||
      cat.dst(sq.bottom) != cat.dst(sq.right))
    return false;
  return cat.compose(sq.right, sq.top) == cat.compose(sq.bottom, sq.left);
}

std::vector<MorRef> all_lifts(const FinCat& cat, const LiftSquare& sq) {
  if (!commutes(cat, sq))
    throw PreconditionError("lifting problem does not commute: " +
                            describe(cat, sq));
  std::vector<MorRef> out;
  for (MorRef h : cat.hom(cat.dst(sq.left), cat.src(sq.right)))
    if (cat.compose(h, sq.left) == sq.top && cat.compose(sq.right, h) == sq.bottom)
      out.push_back(h);
  return out;
}

std::optional<MorRef> solve_lift(const FinCat& cat, const LiftSquare& sq) {
  if (!commutes(cat, sq))
    throw PreconditionError("lifting problem does not commute: " +
                            describe(cat, sq));
  for (MorRef h : cat.hom(cat.dst(sq.left), cat.src(sq.right)))
    if (cat.compose(h, sq.left) == sq.top && cat.compose(sq.right, h) == sq.bottom)
      return h;
  return std::nullopt;
}

bool lifts_against(const FinCat& cat, MorRef f, MorRef g) {
  return lifts_fast(cat, f, g);
}

std::optional<LiftSquare> first_unliftable(const FinCat& cat, MorRef f, MorRef g) {
  const auto hit = lifted_squares(cat, f, g);
  const auto bottoms = cat.hom(cat.dst(f), cat.dst(g));
  for (MorRef top : cat.hom(cat.src(f), cat.src(g))) {
    const MorRef gt = cat.compose(g, top);
    for (MorRef bottom : bottoms) {
      if (cat.compose(bottom, f) != gt) continue;
      if (!hit[cat.hom_position(top) * bottoms.size() + cat.hom_position(bottom)])
        return LiftSquare{f, g, top, bottom};
    }
  }
  return std::nullopt;
}

LiftCheck llp(const FinCat& cat, MorRef f, const MorClass& cls) {
  for (MorRef g : cls.members())
    if (!lifts_fast(cat, f, g)) return {false, first_unliftable(cat, f, g)};
  return {};
}

LiftCheck rlp(const FinCat& cat, MorRef g, const MorClass& cls) {
  for (MorRef f : cls.members())
    if (!lifts_fast(cat, f, g)) return {false, first_unliftable(cat, f, g)};
  return {};
}

MorClass left_complement(const FinCat& cat, const MorClass& cls) {
  return complement(cat, cls, true);
}

MorClass right_complement(const FinCat& cat, const MorClass& cls) {
  return complement(cat, cls, false);
}

MorClass dbar(const FinCat& cat, const MorClass& cls) {
  return right_complement(cat, left_complement(cat, cls));
}

MorClass retract_closure(const FinCat& cat, const MorClass& cls) {
  MorClass current = cls;
  for (;;) {
    const auto members = current.members();
    const auto flags = parallel_map<char>(cat.num_morphisms(), [&](std::size_t i) {
      const MorRef m{static_cast<std::uint32_t>(i)};
      if (current.contains(m)) return char{0};
      for (MorRef g : members)
        if (find_retract(cat, m, g)) return char{1};
      return char{0};
    });
    bool grew = false;
    for (std::uint32_t i = 0; i < flags.size(); ++i)
      if (flags[i]) {
        current.insert(MorRef{i});
        grew = true;
      }
    if (!grew) return current;
  }
}

WfsReport verify_wfs(const FinCat& cat, const MorClass& left,
                     const MorClass& right, const std::vector<FactorPair>& factor) {
  if (factor.size() != cat.num_morphisms())
    throw PreconditionError("factorization must cover every morphism");
  WfsReport rep;
  for (MorRef f : cat.morphisms()) {
    const FactorPair& p = factor[f.index];
    if (cat.src(p.l) != cat.src(f) || cat.dst(p.r) != cat.dst(f) ||
        cat.try_compose(p.r, p.l) != f)
      throw PreconditionError("assigned factorization of " + cat.morphism_name(f) +
                              " does not compose to it");
    if (!left.contains(p.l) || !right.contains(p.r)) rep.unfactored.push_back(f);
  }
  rep.factorization_ok = rep.unfactored.empty();

  const MorClass lc = left_complement(cat, right);
  rep.left_is_llp = lc == left;
  if (!rep.left_is_llp) {
    for (MorRef m : cat.morphisms()) {
      if (lc.contains(m) == left.contains(m)) continue;
      rep.left_mismatch = m;
      if (left.contains(m)) rep.left_square = llp(cat, m, right).witness;
      break;
    }
  }
  const MorClass rc = right_complement(cat, left);
  rep.right_is_rlp = rc == right;
  if (!rep.right_is_rlp) {
    for (MorRef m : cat.morphisms()) {
      if (rc.contains(m) == right.contains(m)) continue;
      rep.right_mismatch = m;
      if (right.contains(m)) rep.right_square = rlp(cat, m, left).witness;
      break;
    }
  }
  return rep;
}

Report WfsReport::to_report(const FinCat& cat) const {
  Report r;
  if (factorization_ok) {
    r.pass("wfs.factorization", cat.name());
  } else {
    std::vector<std::string> w;
    for (MorRef m : unfactored) w.push_back(cat.morphism_name(m));
    r.fail("wfs.factorization", cat.name(), "assigned factors leave the classes", w);
  }
  auto side = [&](const char* check, bool ok, const std::optional<MorRef>& m,
                  const std::optional<LiftSquare>& sq, const char* what) {
    if (ok) {
      r.pass(check, cat.name());
      return;
    }
    std::vector<std::string> w;
    if (m) w.push_back(cat.morphism_name(*m));
    if (sq) w.push_back(describe(cat, *sq));
    r.fail(check, cat.name(), what, w);
  };
  side("wfs.left_is_llp", left_is_llp, left_mismatch, left_square,
       "left class differs from the left complement of the right class");
  side("wfs.right_is_rlp", right_is_rlp, right_mismatch, right_square,
       "right class differs from the right complement of the left class");
  return r;
}

namespace reference {

bool lifts_against(const FinCat& cat, MorRef f, MorRef g) {
  for (MorRef top : cat.hom(cat.src(f), cat.src(g)))
    for (MorRef bottom : cat.hom(cat.dst(f), cat.dst(g))) {
      if (cat.compose(g, top) != cat.compose(bottom, f)) continue;
      bool found = false;
      for (MorRef h : cat.hom(cat.dst(f), cat.src(g)))
        if (cat.compose(h, f) == top && cat.compose(g, h) == bottom) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

MorClass left_complement(const FinCat& cat, const MorClass& cls) {
  MorClass out(cat.num_morphisms());
  const auto members = cls.members();
  for (MorRef m : cat.morphisms()) {
    bool ok = true;
    for (MorRef c : members)
      if (!reference::lifts_against(cat, m, c)) {
        ok = false;
        break;
      }
    if (ok) out.insert(m);
  }
  return out;
}

MorClass right_complement(const FinCat& cat, const MorClass& cls) {
  MorClass out(cat.num_morphisms());
  const auto members = cls.members();
  for (MorRef m : cat.morphisms()) {
    bool ok = true;
    for (MorRef c : members)
      if (!reference::lifts_against(cat, c, m)) {
        ok = false;
        break;
      }
    if (ok) out.insert(m);
  }
  return out;
}

}  // namespace reference
}  // namespace dmc
