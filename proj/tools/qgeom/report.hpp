// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace qgeom::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed = false;
  /// Soft checks are reported but never change the exit code.
  bool hard = true;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Json>> rows;
};

struct Report {
  Json config = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;
  Table table;

  void check(std::string name, double measured, double tolerance, bool hard = true,
             std::string detail = {});
  bool hard_failure() const;
};

/// Numbers print with 17 significant digits; non-finite values become null.
void write_json(std::ostream& os, const Json& j);

void write_report_json(std::ostream& os, const Report& r, const std::string& version);

void write_csv(std::ostream& os, const Table& t);

Json to_json(const Check& c);

}  // namespace qgeom::cli
