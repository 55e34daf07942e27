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

#ifndef ANQIE_ENTROPY_HPP_
#define ANQIE_ENTROPY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anqie/blockcount.hpp"
#include "anqie/seqcore.hpp"
#include "json.hpp"

namespace anqie {

enum class Units { kNats, kBits };

Units ParseUnits(std::string_view name);
std::string_view UnitsName(Units units);

inline constexpr double kDefaultMinCoverage = 50.0;

// Finite-prefix entropy estimate. For a finite-range sequence the entropy is
// lim log|B_m|/m = inf_m log|B_m|/m (log|B_m| is subadditive), so the
// estimate reads h_m at the largest m whose window count still covers the
// observed blocks min_coverage times over.
struct EntropyReport {
  BlockProfile profile;
  std::vector<double> h;          // h[m-1] = ln b(m) / m, in `units`
  std::vector<double> h_regular;  // h_regular[m-1] = ln r(m) / m
  double estimate = 0.0;
  std::size_t m_star = 0;
  bool saturated = false;
  double reliability_ratio = 0.0;  // pos_b(m_star) / b(m_star)
  double min_coverage = kDefaultMinCoverage;
  Units units = Units::kNats;
  // Least-squares slope of ln b(m) against m over 1..m_star. Informational.
  std::optional<double> regression_slope;
  std::vector<std::string> warnings;
};

EntropyReport Estimate(const BlockProfile& profile,
                       double min_coverage = kDefaultMinCoverage,
                       Units units = Units::kNats);

// Profile + Estimate. m_max == 0 selects DefaultMaxBlockLength(n).
EntropyReport EntropyOf(const SymbolicSequence& seq, std::size_t m_max = 0,
                        double min_coverage = kDefaultMinCoverage,
                        Units units = Units::kNats);

// ln(a_m)/(m+1) with a_m = sum_{j=0}^{4m} 2^{j^2}: the lower bound on the
// entropy of the zigzag interval map obtained from a_m disjoint intervals
// that F^{m+1} maps across [0, 2^{-2m}). Evaluated in log space. Nats.
double ZigzagLowerBound(unsigned m);

nlohmann::json ReportToJson(const EntropyReport& report);

}  // namespace anqie

#endif  // ANQIE_ENTROPY_HPP_
