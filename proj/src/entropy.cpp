// Copyright 2026 The anqie Authors
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

#include "anqie/entropy.hpp"

#include <cmath>
#include <numbers>

#include "anqie/error.hpp"

namespace anqie {

Units ParseUnits(std::string_view name) {
  if (name == "nats") return Units::kNats;
  if (name == "bits") return Units::kBits;
  throw InvalidArgument("unknown units '" + std::string(name) + "' (nats, bits)");
}

std::string_view UnitsName(Units units) {
  return units == Units::kBits ? "bits" : "nats";
}

EntropyReport Estimate(const BlockProfile& profile, double min_coverage, Units units) {
  if (profile.rows.empty()) throw InvalidArgument("empty block profile");
  if (!(min_coverage > 0.0) || !std::isfinite(min_coverage)) {
    throw InvalidArgument("min_coverage must be a positive number");
  }
  const double scale = units == Units::kBits ? 1.0 / std::numbers::ln2 : 1.0;

  EntropyReport report;
  report.profile = profile;
  report.min_coverage = min_coverage;
  report.units = units;
  for (const BlockRow& row : profile.rows) {
    const auto m = static_cast<double>(row.m);
    report.h.push_back(std::log(static_cast<double>(row.b)) / m * scale);
    report.h_regular.push_back(std::log(static_cast<double>(row.r)) / m * scale);
  }

  std::size_t m_star = 0;
  for (const BlockRow& row : profile.rows) {
    if (row.m < 2) continue;
    if (static_cast<double>(row.pos_b) >= min_coverage * static_cast<double>(row.b)) {
      m_star = row.m;
    }
  }
  if (m_star == 0) {
    report.saturated = true;
    m_star = 1;
    for (std::size_t m = 2; m <= report.h.size(); ++m) {
      if (report.h[m - 1] < report.h[m_star - 1]) m_star = m;
    }
    report.warnings.push_back(
        "no block length m >= 2 has coverage >= " + std::to_string(min_coverage) +
        "; estimate falls back to the minimum h_m and is unreliable");
  } else if (m_star == profile.m_max() && profile.m_max() < profile.n) {
    report.warnings.push_back(
        "coverage still holds at m_max; a larger m_max may lower the estimate");
  }
  report.m_star = m_star;
  report.estimate = report.h[m_star - 1];
  const BlockRow& star = profile.at(m_star);
  report.reliability_ratio =
      static_cast<double>(star.pos_b) / static_cast<double>(star.b);

  if (m_star >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t m = 1; m <= m_star; ++m) {
      const auto x = static_cast<double>(m);
      const double y = std::log(static_cast<double>(profile.at(m).b));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const auto k = static_cast<double>(m_star);
    report.regression_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx) * scale;
  }
  return report;
}

EntropyReport EntropyOf(const SymbolicSequence& seq, std::size_t m_max,
                        double min_coverage, Units units) {
  return Estimate(Profile(seq, m_max), min_coverage, units);
}

double ZigzagLowerBound(unsigned m) {
  if (m == 0) throw InvalidArgument("zigzag lower bound needs m >= 1");
  // a_m = 2^{J^2} (1 + sum_{j<J} 2^{j^2 - J^2}), J = 4m.
  const double top = 4.0 * m;
  double tail = 0.0;
  for (unsigned j = 0; j < 4 * m; ++j) {
    const double jj = static_cast<double>(j);
    tail += std::exp2(jj * jj - top * top);
  }
  const double log_a = top * top * std::numbers::ln2 + std::log1p(tail);
  return log_a / (static_cast<double>(m) + 1.0);
}

nlohmann::json ReportToJson(const EntropyReport& report) {
  nlohmann::json h = nlohmann::json::array();
  nlohmann::json hr = nlohmann::json::array();
  for (std::size_t i = 0; i < report.h.size(); ++i) {
    h.push_back({{"m", i + 1}, {"h_m", report.h[i]}});
    hr.push_back({{"m", i + 1}, {"h_m", report.h_regular[i]}});
  }
  nlohmann::json j = {
      {"estimate", report.estimate},
      {"units", UnitsName(report.units)},
      {"m_star", report.m_star},
      {"saturated", report.saturated},
      {"reliability_ratio", report.reliability_ratio},
      {"min_coverage", report.min_coverage},
      {"profile", ProfileToJson(report.profile)},
      {"h", h},
      {"h_regular", hr},
      {"warnings", report.warnings},
  };
  if (report.regression_slope) {
    j["regression_slope"] = *report.regression_slope;
  } else {
    j["regression_slope"] = nullptr;
  }
  return j;
}

}  // namespace anqie
