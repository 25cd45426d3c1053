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

#include "dmc/report.hpp"

#include <algorithm>

namespace dmc {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

Record& Report::add(std::string check, std::string target, Status status,
                    std::string detail, std::vector<std::string> witnesses) {
  records_.push_back(Record{std::move(check), std::move(target), status,
                            std::move(detail), std::move(witnesses), false});
  return records_.back();
}

Record& Report::pass(std::string check, std::string target, std::string detail) {
  return add(std::move(check), std::move(target), Status::Pass, std::move(detail));
}

Record& Report::fail(std::string check, std::string target, std::string detail,
                     std::vector<std::string> witnesses) {
  return add(std::move(check), std::move(target), Status::Fail,
             std::move(detail), std::move(witnesses));
}

Record& Report::skip(std::string check, std::string target, std::string detail) {
  return add(std::move(check), std::move(target), Status::Skip, std::move(detail));
}

void Report::promote_failures() {
  for (Record& r : records_)
    if (r.status == Status::Fail) r.refutation = true;
}

Record& Report::refute(std::string check, std::string target,
                       std::string detail, std::vector<std::string> witnesses) {
  Record& r = fail(std::move(check), std::move(target), std::move(detail),
                   std::move(witnesses));
  r.refutation = true;
  return r;
}

void Report::append(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool Report::passed() const {
  return std::none_of(records_.begin(), records_.end(),
                      [](const Record& r) { return r.status == Status::Fail; });
}

bool Report::has_refutation() const {
  return std::any_of(records_.begin(), records_.end(),
                     [](const Record& r) { return r.refutation; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(),
                    [](const Record& r) { return r.status == Status::Fail; }));
}

void Report::write_human(std::ostream& out) const {
  for (const Record& r : records_) {
    out << to_string(r.status) << "  " << r.check;
    if (!r.target.empty()) out << "  [" << r.target << "]";
    if (!r.detail.empty()) out << "  " << r.detail;
    if (r.refutation) out << "  (REFUTATION)";
    out << '\n';
    for (const std::string& w : r.witnesses) out << "      " << w << '\n';
  }
}

// One record per line: check, target, status, detail, witnesses (joined
// with ';'). Tabs and newlines inside fields are replaced by spaces.
void Report::write_machine(std::ostream& out) const {
  auto clean = [](std::string s) {
    std::replace(s.begin(), s.end(), '\t', ' ');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
  };
  for (const Record& r : records_) {
    std::string w;
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      if (i) w += ';';
      w += clean(r.witnesses[i]);
    }
    out << clean(r.check) << '\t' << clean(r.target) << '\t'
        << (r.refutation ? "REFUTED" : to_string(r.status)) << '\t'
        << clean(r.detail) << '\t' << w << '\n';
  }
}

}  // namespace dmc
