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

#include "dmc/morclass.hpp"

#include <bit>
#include <stdexcept>

namespace dmc {

MorClass MorClass::all(const FinCat& cat) {
  MorClass c(cat.num_morphisms());
  for (MorRef m : cat.morphisms()) c.insert(m);
  return c;
}

MorClass MorClass::isomorphisms(const FinCat& cat) {
  MorClass c(cat.num_morphisms());
  for (MorRef m : cat.morphisms())
    if (is_iso(cat, m)) c.insert(m);
  return c;
}

MorClass MorClass::identities(const FinCat& cat) {
  MorClass c(cat.num_morphisms());
  for (ObjRef x : cat.objects()) c.insert(cat.identity(x));
  return c;
}

MorClass MorClass::of(const FinCat& cat, const std::vector<MorRef>& members) {
  MorClass c(cat.num_morphisms());
  for (MorRef m : members) {
    if (m.index >= cat.num_morphisms())
      throw std::out_of_range("morphism index out of range");
    c.insert(m);
  }
  return c;
}

std::size_t MorClass::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<MorRef> MorClass::members() const {
  std::vector<MorRef> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(MorRef{static_cast<std::uint32_t>(w * 64 + b)});
      bits &= bits - 1;
    }
  }
  return out;
}

bool MorClass::subset_of(const MorClass& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

MorClass& MorClass::unite(const MorClass& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

MorClass& MorClass::intersect(const MorClass& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

MorClass MorClass::minus(const MorClass& other) const {
  MorClass out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
  return out;
}

}  // namespace dmc
