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

#ifndef DMC_PULLBACK_HPP
#define DMC_PULLBACK_HPP

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dmc/fincat.hpp"

namespace dmc {

// A pullback square over the cospan (left: A -> C, right: B -> C).
//
//        proj1
//     P -----> B
//     |        |
// proj0        right
//     v        v
//     A -----> C
//        left
//
// For a display map d and any alpha, pullback(cat, d, alpha).proj1 is the
// substituted map alpha*d : P -> dom(alpha).
struct PullbackResult {
  MorRef left;
  MorRef right;
  ObjRef apex;
  MorRef proj0;
  MorRef proj1;

  // The unique m with proj0∘m = u and proj1∘m = v, when (u, v) is a cone.
  std::optional<MorRef> mediator(const FinCat& cat, MorRef u, MorRef v) const;
  // As mediator(), but throws Refutation when the cone has no mediator.
  MorRef mediate(const FinCat& cat, MorRef u, MorRef v) const;
};

// Least-index (apex, proj0, proj1) satisfying the universal property,
// checked exhaustively over every object and cone. Requires dst(f) == dst(g).
std::optional<PullbackResult> pullback(const FinCat& cat, MorRef f, MorRef g);

// Every representative, in the same candidate order.
std::vector<PullbackResult> all_pullbacks(const FinCat& cat, MorRef f, MorRef g);

// Exhaustive universal-property check of a candidate square.
bool is_pullback(const FinCat& cat, MorRef f, MorRef g, ObjRef apex, MorRef p0,
                 MorRef p1);

// The unique iso between two pullbacks of the same cospan commuting with the
// projections (from a's apex to b's apex).
std::optional<MorRef> pullback_comparison(const FinCat& cat,
                                          const PullbackResult& a,
                                          const PullbackResult& b);

// Pullback of the product-like cospan X -> T <- Y for a terminal T.
std::optional<PullbackResult> product(const FinCat& cat, ObjRef x, ObjRef y);

// Memoized pullback(cat, f, g) for sweeps that revisit the same cospans.
// Safe to share between workers.
class PullbackCache {
 public:
  explicit PullbackCache(const FinCat& cat) : cat_(cat) {}
  const FinCat& cat() const { return cat_; }
  std::optional<PullbackResult> get(MorRef f, MorRef g);

 private:
  const FinCat& cat_;
  std::mutex mu_;
  std::unordered_map<std::uint64_t, std::optional<PullbackResult>> memo_;
};

namespace reference {
// Serial reference: searches a mediator for every cone individually.
std::optional<PullbackResult> pullback(const FinCat& cat, MorRef f, MorRef g);
}  // namespace reference

}  // namespace dmc

#endif  // DMC_PULLBACK_HPP
