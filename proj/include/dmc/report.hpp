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

#ifndef DMC_REPORT_HPP
#define DMC_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dmc {

enum class Status { Pass, Fail, Skip };

const char* to_string(Status s);

struct Record {
  std::string check;
  std::string target;
  Status status = Status::Pass;
  std::string detail;
  std::vector<std::string> witnesses;
  // Set when the failure is a theorem-contract violation.
  bool refutation = false;
};

// Ordered list of check outcomes. Assembly is sequential and deterministic.
class Report {
 public:
  Record& add(std::string check, std::string target, Status status,
              std::string detail = {}, std::vector<std::string> witnesses = {});
  Record& pass(std::string check, std::string target, std::string detail = {});
  Record& fail(std::string check, std::string target, std::string detail = {},
               std::vector<std::string> witnesses = {});
  Record& skip(std::string check, std::string target, std::string detail = {});
  Record& refute(std::string check, std::string target, std::string detail,
                 std::vector<std::string> witnesses = {});

  void append(const Report& other);
  // Marks every FAIL record as a theorem-contract violation.
  void promote_failures();

  const std::vector<Record>& records() const { return records_; }
  bool passed() const;
  bool has_refutation() const;
  std::size_t failures() const;

  void write_human(std::ostream& out) const;
  void write_machine(std::ostream& out) const;

 private:
  std::vector<Record> records_;
};

}  // namespace dmc

#endif  // DMC_REPORT_HPP
