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

#ifndef DMC_TYPES_HPP
#define DMC_TYPES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace dmc {

// Index into a category's object table.
struct ObjRef {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(ObjRef, ObjRef) = default;
};

// Index into a category's morphism table.
struct MorRef {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(MorRef, MorRef) = default;
};

// Soft size limits. Every check is polynomial-to-exponential in the table
// size, so the defaults keep instances at desk scale; callers may raise them.
struct Limits {
  std::size_t max_objects = 64;
  std::size_t max_morphisms = 512;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed structural input: bad composition tables, unknown names, ...
class ModelError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A theorem contract failed on a concrete instance. Either the implementation
// is wrong or the instance is a counterexample; both must surface loudly.
class Refutation : public Error {
 public:
  Refutation(std::string step, const std::string& detail)
      : Error(step + ": " + detail), step_(std::move(step)) {}
  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

}  // namespace dmc

template <>
struct std::hash<dmc::MorRef> {
  std::size_t operator()(dmc::MorRef m) const noexcept { return m.index; }
};

template <>
struct std::hash<dmc::ObjRef> {
  std::size_t operator()(dmc::ObjRef o) const noexcept { return o.index; }
};

#endif  // DMC_TYPES_HPP
