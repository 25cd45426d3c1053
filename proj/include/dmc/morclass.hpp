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

#ifndef DMC_MORCLASS_HPP
#define DMC_MORCLASS_HPP

#include <cstdint>
#include <vector>

#include "dmc/fincat.hpp"

namespace dmc {

// A set of morphisms of one fixed category, stored as a bitset over the
// morphism table. Iteration is always in ascending index order.
class MorClass {
 public:
  MorClass() = default;
  explicit MorClass(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static MorClass all(const FinCat& cat);
  static MorClass isomorphisms(const FinCat& cat);
  static MorClass identities(const FinCat& cat);
  static MorClass of(const FinCat& cat, const std::vector<MorRef>& members);

  std::size_t universe() const { return universe_; }
  bool contains(MorRef m) const {
    return (words_[m.index / 64] >> (m.index % 64)) & 1U;
  }
  void insert(MorRef m) { words_[m.index / 64] |= std::uint64_t{1} << (m.index % 64); }
  void erase(MorRef m) { words_[m.index / 64] &= ~(std::uint64_t{1} << (m.index % 64)); }

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<MorRef> members() const;

  bool subset_of(const MorClass& other) const;
  MorClass& unite(const MorClass& other);
  MorClass& intersect(const MorClass& other);
  MorClass minus(const MorClass& other) const;

  friend bool operator==(const MorClass&, const MorClass&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dmc

#endif  // DMC_MORCLASS_HPP
