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
#include <cmath>
#include <numbers>
#include <vector>

#include "anqie/blockcount.hpp"
#include "anqie/entropy.hpp"
#include "anqie/generators.hpp"
#include "anqie/laws.hpp"
#include "anqie/quantize.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anqie;

namespace {

SymbolicSequence Gen(GeneratorKind kind, std::size_t n, std::uint64_t seed = 1) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.seed = seed;
  return GenerateSymbolic(spec);
}

SymbolicSequence Periodic(std::size_t p, std::size_t n) {
  GeneratorSpec spec;
  spec.n = n;
  spec.pattern.clear();
  for (std::size_t i = 0; i < p; ++i) spec.pattern.push_back(static_cast<std::int64_t>(i));
  return GenerateSymbolic(spec);
}

}  // namespace

TEST_CASE("constant sequence has zero estimate") {
  const EntropyReport r = EntropyOf(Periodic(1, 1000));
  CHECK(r.estimate == 0.0);
  CHECK_FALSE(r.saturated);
}

TEST_CASE("report invariants") {
  for (const auto& s : {Gen(GeneratorKind::kChampernowne, 20000), Gen(GeneratorKind::kPrimeIndicator, 20000),
                        Periodic(7, 20000), Gen(GeneratorKind::kIidRandom, 20000, 4)}) {
    const EntropyReport r = EntropyOf(s);
    REQUIRE(r.h.size() == r.profile.m_max());
    CHECK(r.h[0] == doctest::Approx(std::log(static_cast<double>(s.occurring_symbols()))));
    CHECK(r.estimate == r.h[r.m_star - 1]);
    for (std::size_t m = 1; m <= r.h.size(); ++m) {
      CHECK(r.h[m - 1] >= 0.0);
      CHECK(r.h[m - 1] == std::log(static_cast<double>(r.profile.at(m).b)) / m);
      CHECK(r.h_regular[m - 1] == std::log(static_cast<double>(r.profile.at(m).r)) / m);
      for (std::size_t k = 1; m + k <= r.h.size(); ++k) {
        CHECK((m + k) * r.h[m + k - 1] <= m * r.h[m - 1] + k * r.h[k - 1] + 1e-12);
      }
    }
    CHECK(r.reliability_ratio ==
          static_cast<double>(r.profile.at(r.m_star).pos_b) / r.profile.at(r.m_star).b);
  }
}

TEST_CASE("coverage rule selects the largest reliable m") {
  const SymbolicSequence s = Gen(GeneratorKind::kChampernowne, 50000);
  const BlockProfile p = Profile(s, 20);
  const EntropyReport r = Estimate(p, 50.0);
  std::size_t expected = 0;
  for (std::size_t m = 1; m <= 20; ++m) {
    if (p.at(m).pos_b >= 50 * p.at(m).b) expected = m;
  }
  REQUIRE(expected >= 2);
  CHECK(r.m_star == expected);
  CHECK_FALSE(r.saturated);
}

TEST_CASE("saturated profiles fall back to the minimum") {
  const BlockProfile p = Profile(Gen(GeneratorKind::kIidRandom, 150, 9), 12);
  const EntropyReport r = Estimate(p, 50.0);
  CHECK(r.saturated);
  CHECK_FALSE(r.warnings.empty());
  double lowest = r.h[0];
  for (double h : r.h) lowest = std::min(lowest, h);
  CHECK(r.estimate == lowest);
}

TEST_CASE("random binary estimate is near ln 2") {
  const EntropyReport r = EntropyOf(Gen(GeneratorKind::kIidRandom, 1000000, 1));
  CHECK(r.estimate >= 0.64);
  CHECK(r.estimate <= 0.70);
  CHECK(std::pow(2.0, static_cast<double>(r.m_star)) <= 1e6 / r.min_coverage);
  for (std::size_t m = 1; m <= r.m_star; ++m) CHECK(r.h[m - 1] == doctest::Approx(std::numbers::ln2));
}

TEST_CASE("periodic estimate is bounded by ln p / m_star") {
  const EntropyReport r = EntropyOf(Periodic(2, 10000));
  CHECK(r.estimate <= std::numbers::ln2 / r.m_star + 1e-15);
  CHECK(r.estimate < 0.05);
}

TEST_CASE("sturmian estimate with a long profile") {
  const EntropyReport r = EntropyOf(Gen(GeneratorKind::kSturmian, 1000000), 1000);
  CHECK(r.estimate <= std::log(r.m_star + 1.0) / r.m_star + 1e-15);
  CHECK(r.estimate < 0.01);
}

TEST_CASE("bits are nats over ln 2") {
  const SymbolicSequence s = Gen(GeneratorKind::kChampernowne, 30000);
  const EntropyReport nats = EntropyOf(s, 0, 50.0, Units::kNats);
  const EntropyReport bits = EntropyOf(s, 0, 50.0, Units::kBits);
  CHECK(bits.m_star == nats.m_star);
  CHECK(bits.estimate == doctest::Approx(nats.estimate / std::numbers::ln2));
  CHECK(ReportToJson(bits)["units"] == "bits");
}

TEST_CASE("injective recoding leaves the report identical") {
  const SymbolicSequence s = Gen(GeneratorKind::kPrimeIndicator, 40000);
  const SymbolicSequence t = Recode(s, ReciprocalShiftMap());
  CHECK(ReportToJson(EntropyOf(s)) == ReportToJson(EntropyOf(t)));
}

TEST_CASE("shift never raises h_m") {
  const SymbolicSequence s = Gen(GeneratorKind::kChampernowne, 40000);
  const EntropyReport a = EntropyOf(s, 16);
  for (std::size_t k : {1, 5, 40}) {
    const EntropyReport b = EntropyOf(Shift(s, k), 16);
    for (std::size_t m = 1; m <= 16; ++m) CHECK(b.h[m - 1] <= a.h[m - 1]);
  }
}

TEST_CASE("report json layout") {
  const nlohmann::json j = ReportToJson(EntropyOf(Periodic(3, 500), 6));
  for (const char* key : {"estimate", "units", "m_star", "saturated", "profile", "h"}) CHECK(j.contains(key));
  CHECK(j["h"].size() == 6);
  CHECK(j["h"][0].contains("m"));
  CHECK(j["h"][0].contains("h_m"));
  CHECK(j["profile"]["n"] == 500);
}

TEST_CASE("zigzag lower bound") {
  CHECK(ZigzagLowerBound(1) == doctest::Approx(std::log(66067.0) / 2).epsilon(1e-12));
  CHECK(std::abs(ZigzagLowerBound(1) - oracle::ZigzagBound(1)) < 1e-9);
  CHECK(ZigzagLowerBound(1) > 16 * std::numbers::ln2 / 2);
  CHECK(ZigzagLowerBound(2) > ZigzagLowerBound(1));
  for (unsigned m = 1; m <= 12; ++m) {
    CHECK(ZigzagLowerBound(m) == doctest::Approx(oracle::ZigzagBound(m)).epsilon(1e-12));
    // The lower terms vanish in double precision once 2^(8m-1) > 2^53.
    if (m <= 4) {
      CHECK(ZigzagLowerBound(m) > (16.0 * m * m) * std::numbers::ln2 / (m + 1));
    } else {
      CHECK(ZigzagLowerBound(m) >= (16.0 * m * m) * std::numbers::ln2 / (m + 1));
    }
  }
}

TEST_SUITE("known-gaps") {
  TEST_CASE("quadratic phase symbols estimate below 0.05") {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::kQuadraticPhase;
    spec.n = 1000000;
    spec.theta = std::numbers::sqrt2;
    spec.mode = PhaseMode::kBins;
    spec.bins = 8;
    const EntropyReport r = EntropyOf(GenerateSymbolic(spec), 1000);
    CHECK(r.estimate < 0.05);
  }

  TEST_CASE("zigzag orbit estimate above the doubling baseline") {
    GeneratorSpec spec;
    spec.n = 1000000;
    spec.kind = GeneratorKind::kZigzagOrbit;
    const NumericSequence zig = GenerateNumeric(spec);
    spec.kind = GeneratorKind::kDoublingOrbit;
    const NumericSequence dbl = GenerateNumeric(spec);
    auto binned = [](const NumericSequence& v) {
      std::vector<std::int64_t> codes(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        codes[i] = std::min<std::int64_t>(1023, static_cast<std::int64_t>(v[i].real() * 1024));
      }
      return SymbolicSequence::FromIntegers(codes);
    };
    CHECK(EntropyOf(binned(zig)).estimate > EntropyOf(binned(dbl)).estimate);
  }
}
