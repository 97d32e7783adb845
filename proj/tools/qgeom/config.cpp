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

#include "config.hpp"

#include <cmath>
#include <sstream>

#include "qgeom/error.hpp"

namespace qgeom::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& s) {
  const std::string t = trim(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "not a number: '" + s + "'");
  }
  if (used != t.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidArgument, "not a number: '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw Error(ErrorKind::InvalidArgument, "empty complex number");
  if (const auto at = t.find('@'); at != std::string::npos) {
    return std::polar(to_double(t.substr(0, at)), to_double(t.substr(at + 1)));
  }
  if (t.back() != 'j' && t.back() != 'i') return {to_double(t), 0.0};
  const std::string body = t.substr(0, t.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t cut = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  auto imag_part = [](const std::string& s) {
    if (s == "+" || s.empty()) return 1.0;
    if (s == "-") return -1.0;
    return to_double(s);
  };
  if (cut == std::string::npos) return {0.0, imag_part(body)};
  return {to_double(body.substr(0, cut)), imag_part(body.substr(cut))};
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text, ',')) out.push_back(to_double(s));
  return out;
}

InitialCoefficients parse_eta(const std::string& text, std::vector<std::string>* warnings) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) {
    throw Error(ErrorKind::InvalidArgument, "--eta needs four comma-separated values");
  }
  std::array<Complex, 4> e;
  double n2 = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    e[k] = parse_complex(parts[k]);
    n2 += std::norm(e[k]);
  }
  if (std::abs(n2 - 1.0) > 1e-9 && warnings) {
    std::ostringstream os;
    os.precision(17);
    os << "eta normalized (squared norm was " << n2 << ")";
    warnings->push_back(os.str());
  }
  return InitialCoefficients::normalized(e);
}

GridSpec parse_grid(const std::string& text) {
  GridSpec grid;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::InvalidArgument, "grid axis '" + item + "' is not name=a:b:n");
    }
    const auto range = split(item.substr(eq + 1), ':');
    if (range.size() != 3) {
      throw Error(ErrorKind::InvalidArgument, "grid axis '" + item + "' is not name=a:b:n");
    }
    GridAxis ax;
    ax.coord = parse_coord(trim(item.substr(0, eq)));
    ax.lo = to_double(range[0]);
    ax.hi = to_double(range[1]);
    const double n = to_double(range[2]);
    if (n < 1 || n != std::floor(n) || n > 1e6) {
      throw Error(ErrorKind::InvalidArgument, "grid count must be an integer in [1, 1e6]");
    }
    ax.count = static_cast<int>(n);
    grid.push_back(ax);
  }
  return grid;
}

void resolve_params(RunConfig& cfg) {
  if (!cfg.c_text.empty()) {
    const auto c = parse_doubles(cfg.c_text);
    if (c.size() != 3) throw Error(ErrorKind::InvalidArgument, "--c needs c1,c2,c3");
    cfg.params.c1 = c[0];
    cfg.params.c2 = c[1];
    cfg.params.c3 = c[2];
    cfg.params_given = true;
  }
  if (!std::isfinite(cfg.params.b) || !std::isfinite(cfg.params.beta)) {
    throw Error(ErrorKind::InvalidArgument, "--b and --beta must be finite");
  }
  if (!(cfg.gamma > 0.0) || !std::isfinite(cfg.gamma)) {
    throw Error(ErrorKind::InvalidArgument, "--gamma must be positive");
  }
}

std::optional<Case> resolve_case(const RunConfig& cfg) {
  if (cfg.case_text.empty()) return std::nullopt;
  return parse_case(cfg.case_text);
}

InitialCoefficients resolve_eta(RunConfig& cfg) {
  const auto c = resolve_case(cfg);
  if (!cfg.eta_text.empty()) {
    auto eta = parse_eta(cfg.eta_text, &cfg.warnings);
    if (c && classify(eta).id != *c) {
      throw Error(ErrorKind::CaseMismatch, "--eta classifies as " + classify(eta).name() +
                                               ", not " + std::string(to_string(*c)));
    }
    return eta;
  }
  return default_coefficients(c.value_or(Case::C7));
}

}  // namespace qgeom::cli
