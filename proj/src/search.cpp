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

#include "dmc/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "dmc/axioms.hpp"
#include "dmc/id.hpp"
#include "dmc/lifting.hpp"
#include "dmc/parallel.hpp"
#include "dmc/pullback.hpp"

namespace dmc {

namespace {

std::optional<MorClass> close_class(const FinCat& cat, MorClass cls, PullbackCache& cache) {
  for (bool changed = true; changed;) {
    changed = false;
    const auto members = cls.members();
    for (MorRef g : members)
      for (MorRef f : members) {
        if (cat.dst(f) != cat.src(g)) continue;
        const MorRef h = cat.compose(g, f);
        if (!cls.contains(h)) {
          cls.insert(h);
          changed = true;
        }
      }
    for (MorRef d : members)
      for (MorRef alpha : cat.morphisms_into(cat.dst(d))) {
        const auto pb = cache.get(d, alpha);
        if (!pb) return std::nullopt;
        if (!cls.contains(pb->proj1)) {
          cls.insert(pb->proj1);
          changed = true;
        }
      }
  }
  return cls;
}

std::vector<std::uint32_t> key(const MorClass& c) {
  std::vector<std::uint32_t> k;
  for (MorRef m : c.members()) k.push_back(m.index);
  return k;
}

FinCat thin_category(const std::vector<std::vector<bool>>& leq, const std::string& name) {
  const std::size_t n = leq.size();
  CatBuilder b(name);
  std::vector<ObjRef> obj;
  for (std::size_t i = 0; i < n; ++i) obj.push_back(b.add_object("p" + std::to_string(i)));
  std::vector<std::vector<MorRef>> mor(n, std::vector<MorRef>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) {
        if (i == j) {
          mor[i][j] = b.add_identity(obj[i], "id_p" + std::to_string(i));
        } else {
          mor[i][j] = b.add_morphism("le_p" + std::to_string(i) + "_p" + std::to_string(j),
                                     obj[i], obj[j]);
        }
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k]) b.set_comp(mor[j][k], mor[i][j], mor[i][k]);
  return std::move(b).build();
}

// Least relation bitmask over all relabelings.
std::uint64_t canonical(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[perm[i]][perm[j]]) code |= std::uint64_t{1} << (i * n + j);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best | (std::uint64_t{n} << 58);
}

struct Outcome {
  std::optional<InstanceBundle> found;
  SearchStats stats;
  std::string provenance;
};

std::string class_text(const FinCat& cat, const MorClass& c) {
  std::string s = "{";
  for (MorRef m : c.members()) {
    if (s.size() > 1) s += ",";
    s += cat.morphism_name(m);
  }
  return s + "}";
}

Outcome examine(const FinCat& cat, const SearchBounds& bounds) {
  Outcome out;
  out.stats.categories = 1;
  const auto classes = candidate_classes(cat, bounds.max_classes);
  if (!classes) {
    out.stats.capped = 1;
    return out;
  }
  for (const MorClass& d : *classes) {
    ++out.stats.classes;
    if (dbar(cat, d) == d) continue;
    ++out.stats.not_closed;
    if (!check_dmc(cat, d).passed() || !check_sigma(cat, d).passed()) continue;
    const auto ida = search_id(cat, d);
    if (!ida) {
      ++out.stats.id_failures;
      continue;
    }
    std::optional<FunctorialIdAssignment> fida;
    try {
      fida = search_functorial_action(cat, d, *ida);
    } catch (const BudgetExceeded&) {
      ++out.stats.capped;
      continue;
    }
    if (!fida || !verify_functorial_id(cat, d, *fida).passed()) {
      ++out.stats.id_failures;
      continue;
    }
    InstanceBundle b;
    b.cat = cat;
    b.d = d;
    b.ida = fida->base();
    b.fida = std::move(fida);
    out.provenance = cat.name() + " with D = " + class_text(cat, d);
    b.notes.push_back("search witness: " + out.provenance);
    out.found = std::move(b);
    return out;
  }
  return out;
}

void merge(SearchStats& into, const SearchStats& s) {
  into.categories += s.categories;
  into.classes += s.classes;
  into.not_closed += s.not_closed;
  into.id_failures += s.id_failures;
  into.capped += s.capped;
  into.timed_out = into.timed_out || s.timed_out;
}

}  // namespace

std::optional<std::vector<MorClass>> candidate_classes(const FinCat& cat, std::size_t cap) {
  PullbackCache cache(cat);
  MorClass base = MorClass::isomorphisms(cat);
  for (ObjRef t : terminals(cat))
    for (ObjRef x : cat.objects()) base.insert(to_terminal(cat, x, t));
  auto first = close_class(cat, base, cache);
  if (!first) return std::vector<MorClass>{};
  std::vector<MorClass> out{*first};
  std::set<std::vector<std::uint32_t>> seen{key(*first)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (MorRef m : cat.morphisms()) {
      if (out[i].contains(m)) continue;
      MorClass next = out[i];
      next.insert(m);
      auto closed = close_class(cat, std::move(next), cache);
      if (!closed || !seen.insert(key(*closed)).second) continue;
      if (out.size() >= cap) return std::nullopt;
      out.push_back(std::move(*closed));
    }
  }
  return out;
}

std::vector<FinCat> thin_candidates(std::size_t max_objects, std::size_t max_morphisms) {
  std::vector<FinCat> out;
  std::set<std::uint64_t> seen;
  for (std::size_t n = 1; n <= max_objects; ++n) {
    // Naturally labeled posets: i < j in the order only if i < j as labels.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) leq[slots[s].first][slots[s].second] = true;
      bool transitive = true;
      for (std::size_t i = 0; i < n && transitive; ++i)
        for (std::size_t j = 0; j < n && transitive; ++j)
          for (std::size_t k = 0; k < n && transitive; ++k)
            if (leq[i][j] && leq[j][k] && !leq[i][k]) transitive = false;
      if (!transitive) continue;
      bool top = true;
      for (std::size_t i = 0; i < n; ++i) top = top && leq[i][n - 1];
      if (!top) continue;
      // Blow up each element into a clique of isomorphic copies.
      std::vector<std::vector<std::size_t>> mults;
      std::vector<std::size_t> mult;
      auto extend = [&](auto&& self, std::size_t left) -> void {
        if (mult.size() == n) {
          mults.push_back(mult);
          return;
        }
        for (std::size_t c = 1; c <= left; ++c) {
          mult.push_back(c);
          self(self, left - c);
          mult.pop_back();
        }
      };
      extend(extend, max_objects);
      for (const auto& mu : mults) {
        const std::size_t total = std::accumulate(mu.begin(), mu.end(), std::size_t{0});
        if (total > max_objects) continue;
        std::vector<std::size_t> cls;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t c = 0; c < mu[i]; ++c) cls.push_back(i);
        std::vector<std::vector<bool>> pre(total, std::vector<bool>(total));
        std::size_t pairs = 0;
        for (std::size_t x = 0; x < total; ++x)
          for (std::size_t y = 0; y < total; ++y) {
            pre[x][y] = leq[cls[x]][cls[y]];
            pairs += pre[x][y];
          }
        if (pairs <= max_morphisms && seen.insert(canonical(pre)).second)
          out.push_back(thin_category(pre, "thin" + std::to_string(out.size())));
      }
    }
  }
  return out;
}

std::vector<FinCat> small_categories(std::size_t max_morphisms) {
  std::vector<FinCat> out;
  for (std::size_t total = 1; total <= max_morphisms; ++total)
    for (std::size_t k = 1; k <= total; ++k) {
      const std::size_t n = total - k;
      // Typings of the non-identity morphisms, nondecreasing in (src, dst).
      std::vector<std::vector<std::size_t>> typings;
      std::vector<std::size_t> typ;
      auto extend = [&](auto&& self, std::size_t from) -> void {
        if (typ.size() == n) {
          typings.push_back(typ);
          return;
        }
        for (std::size_t t = from; t < k * k; ++t) {
          typ.push_back(t);
          self(self, t);
          typ.pop_back();
        }
      };
      extend(extend, 0);
      for (const auto& ty : typings) {
        std::vector<std::pair<std::size_t, std::size_t>> ends;
        for (std::size_t t : ty) ends.emplace_back(t / k, t % k);
        // Composable pairs (g, f) of non-identities and their candidate values.
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        std::vector<std::vector<std::size_t>> options;
        for (std::size_t g = 0; g < n; ++g)
          for (std::size_t f = 0; f < n; ++f) {
            if (ends[f].second != ends[g].first) continue;
            std::vector<std::size_t> opt;
            const std::size_t s = ends[f].first, t = ends[g].second;
            if (s == t) opt.push_back(n + s);  // the identity of s
            for (std::size_t h = 0; h < n; ++h)
              if (ends[h].first == s && ends[h].second == t) opt.push_back(h);
            pairs.emplace_back(g, f);
            options.push_back(std::move(opt));
          }
        if (!std::all_of(options.begin(), options.end(),
                         [](const auto& o) { return !o.empty(); }))
          continue;
        // Backtrack over the table, pruning on associativity as soon as the
        // composites of a triple are known.
        const std::size_t total_m = n + k;
        std::vector<std::int64_t> table(total_m * total_m, -1);
        auto src_of = [&](std::size_t m) { return m < n ? ends[m].first : m - n; };
        auto dst_of = [&](std::size_t m) { return m < n ? ends[m].second : m - n; };
        for (std::size_t m = 0; m < total_m; ++m) {
          table[(n + dst_of(m)) * total_m + m] = static_cast<std::int64_t>(m);
          table[m * total_m + n + src_of(m)] = static_cast<std::int64_t>(m);
        }
        auto at = [&](std::size_t g, std::size_t f) { return table[g * total_m + f]; };
        auto associative = [&]() {
          for (std::size_t f = 0; f < n; ++f)
            for (std::size_t g = 0; g < n; ++g) {
              if (dst_of(f) != src_of(g)) continue;
              const auto gf = at(g, f);
              if (gf < 0) continue;
              for (std::size_t h = 0; h < n; ++h) {
                if (dst_of(g) != src_of(h)) continue;
                const auto hg = at(h, g);
                if (hg < 0) continue;
                const auto l = at(h, static_cast<std::size_t>(gf));
                const auto r = at(static_cast<std::size_t>(hg), f);
                if (l >= 0 && r >= 0 && l != r) return false;
              }
            }
          return true;
        };
        auto emit = [&]() {
          CatBuilder b("cat" + std::to_string(out.size()));
          std::vector<ObjRef> obj;
          for (std::size_t x = 0; x < k; ++x) obj.push_back(b.add_object("o" + std::to_string(x)));
          std::vector<MorRef> mor(total_m);
          for (std::size_t m = 0; m < n; ++m)
            mor[m] = b.add_morphism("m" + std::to_string(m), obj[ends[m].first],
                                    obj[ends[m].second]);
          for (std::size_t x = 0; x < k; ++x)
            mor[n + x] = b.add_identity(obj[x], "id_o" + std::to_string(x));
          for (const auto& [g, f] : pairs)
            b.set_comp(mor[g], mor[f], mor[static_cast<std::size_t>(at(g, f))]);
          b.fill_unit_laws();
          FinCat cat = std::move(b).build();
          if (validate_category(cat).ok() && terminal(cat)) out.push_back(std::move(cat));
        };
        auto fill = [&](auto&& self, std::size_t p) -> void {
          if (p == pairs.size()) {
            emit();
            return;
          }
          const auto [g, f] = pairs[p];
          for (std::size_t h : options[p]) {
            table[g * total_m + f] = static_cast<std::int64_t>(h);
            if (associative()) self(self, p + 1);
          }
          table[g * total_m + f] = -1;
        };
        fill(fill, 0);
      }
    }
  return out;
}

std::string SearchResult::summary() const {
  std::ostringstream s;
  if (found) {
    s << "found: " << witness;
    return s.str();
  }
  s << (exhausted ? "search exhausted" : "search incomplete") << ": " << stats.categories
    << " categories with a terminal object, " << stats.classes << " candidate classes, "
    << stats.not_closed << " with dbar != D, " << stats.id_failures
    << " of those without a functorial Id-structure";
  if (stats.capped) s << ", " << stats.capped << " capped";
  if (stats.timed_out) s << ", time budget reached";
  return s.str();
}

SearchResult search_nonclosed_instance(const SearchBounds& bounds) {
  SearchResult res;
  const auto start = std::chrono::steady_clock::now();
  std::atomic<bool> timed_out{false};
  auto run_phase = [&](const std::vector<FinCat>& cats, const std::string& phase) {
    // Shards are candidates in list order; the first hit by index wins.
    auto outcomes = parallel_map<Outcome>(cats.size(), [&](std::size_t i) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (elapsed > bounds.time_budget_seconds) {
        timed_out = true;
        Outcome o;
        o.stats.timed_out = true;
        return o;
      }
      return examine(cats[i], bounds);
    });
    for (Outcome& o : outcomes) {
      merge(res.stats, o.stats);
      if (o.found && !res.found) {
        res.found = std::move(o.found);
        res.witness = phase + ": " + o.provenance;
      }
    }
    res.provenance.push_back(phase + ": " + std::to_string(cats.size()) + " categories");
  };
  std::vector<FinCat> small;
  for (FinCat& c : small_categories(std::min(bounds.exhaustive_morphisms, bounds.max_morphisms)))
    if (c.num_objects() <= bounds.max_objects) small.push_back(std::move(c));
  run_phase(small, "all categories with at most " +
                       std::to_string(bounds.exhaustive_morphisms) + " morphisms");
  if (!res.found)
    run_phase(thin_candidates(bounds.max_objects, bounds.max_morphisms),
              "preorders with a top element");
  res.stats.timed_out = timed_out;
  res.exhausted = !res.found && res.stats.capped == 0 && !res.stats.timed_out;
  return res;
}

}  // namespace dmc
