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

#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace qgeom::cli {
namespace {

void write_number(std::ostream& os, double v) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void write_string(std::ostream& os, const std::string& s) {
  os << Json(s).dump();
}

void write_value(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner;
        write_string(os, it.key());
        os << ": ";
        write_value(os, it.value(), indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Flat numeric arrays stay on one line.
      bool flat = true;
      for (const auto& e : j) flat = flat && e.is_primitive();
      if (flat) {
        os << "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k) os << ", ";
          write_value(os, j[k], indent + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) os << ",\n";
        os << inner;
        write_value(os, j[k], indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float:
      write_number(os, j.get<double>());
      return;
    case Json::value_t::string:
      write_string(os, j.get<std::string>());
      return;
    default:
      os << j.dump();
      return;
  }
}

std::string csv_field(const Json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  if (j.is_null()) return "";
  return j.dump();
}

}  // namespace

void Report::check(std::string name, double measured, double tolerance, bool hard,
                   std::string detail) {
  Check c;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tolerance;
  c.passed = std::isfinite(measured) && measured <= tolerance;
  c.hard = hard;
  c.detail = std::move(detail);
  checks.push_back(std::move(c));
}

bool Report::hard_failure() const {
  for (const auto& c : checks)
    if (c.hard && !c.passed) return true;
  return false;
}

Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["hard"] = c.hard;
  j["measured"] = c.measured;
  j["tolerance"] = c.tolerance;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

void write_json(std::ostream& os, const Json& j) {
  write_value(os, j, 0);
  os << "\n";
}

void write_report_json(std::ostream& os, const Report& r, const std::string& version) {
  Json j;
  j["config"] = r.config;
  j["results"] = r.results;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  j["version"] = version;
  write_json(os, j);
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t k = 0; k < t.header.size(); ++k) {
    if (k) os << ',';
    os << csv_field(Json(t.header[k]));
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ',';
      os << csv_field(row[k]);
    }
    os << '\n';
  }
}

}  // namespace qgeom::cli
