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
#include "anqie/error.hpp"
#include "anqie/generators.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anqie;

namespace {

std::vector<std::int64_t> Ints(const SymbolicSequence& s) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.label_at(i).as_integer());
  return out;
}

GeneratorSpec Spec(GeneratorKind kind, std::size_t n) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  return spec;
}

}  // namespace

TEST_CASE("periodic") {
  CHECK(Ints(GenerateSymbolic(Spec(GeneratorKind::kPeriodic, 6))) ==
        std::vector<std::int64_t>{0, 1, 0, 1, 0, 1});
  GeneratorSpec s = Spec(GeneratorKind::kPeriodic, 7);
  s.pattern = {4, 4, 9};
  CHECK(Ints(GenerateSymbolic(s)) == std::vector<std::int64_t>{4, 4, 9, 4, 4, 9, 4});
}

TEST_CASE("quadratic phase values") {
  GeneratorSpec s = Spec(GeneratorKind::kQuadraticPhase, 4);
  s.theta = std::numbers::sqrt2;
  const NumericSequence v = GenerateNumeric(s);
  const double phases[] = {0.0, 0.41421356237309515, 0.6568542494923806, 0.7279220613578552};
  for (int i = 0; i < 4; ++i) {
    const Complex expected = std::polar(1.0, 2 * std::numbers::pi * phases[i]);
    CHECK(std::abs(v[i] - expected) < 1e-12);
  }
  s.mode = PhaseMode::kPhase;
  const NumericSequence p = GenerateNumeric(s);
  for (int i = 0; i < 4; ++i) CHECK(p[i].real() == doctest::Approx(phases[i]).epsilon(1e-14));
  s.mode = PhaseMode::kBins;
  s.bins = 8;
  CHECK(Ints(GenerateSymbolic(s)) == std::vector<std::int64_t>{0, 3, 5, 5});
}

TEST_CASE("quadratic phase stays exact for large n") {
  // frac(n^2 theta) computed from the exact binary value of theta.
  GeneratorSpec s = Spec(GeneratorKind::kQuadraticPhase, 1000001);
  s.theta = std::numbers::sqrt2;
  s.mode = PhaseMode::kPhase;
  const NumericSequence p = GenerateNumeric(s);
  const ExactRotation rot(std::numbers::sqrt2);
  CHECK(p[1000000].real() == rot.Frac(1000000ULL * 1000000ULL));
  // sqrt2 = 6369051672525773 / 2^52 exactly as a double.
  const unsigned __int128 num = 6369051672525773ULL;
  const unsigned __int128 n2 = 1000000ULL * 1000000ULL;
  const unsigned __int128 mask = (static_cast<unsigned __int128>(1) << 52) - 1;
  const double expected = std::ldexp(static_cast<double>((num * n2) & mask), -52);
  CHECK(p[1000000].real() == expected);
}

TEST_CASE("delta and prime indicator") {
  GeneratorSpec d = Spec(GeneratorKind::kDelta, 5);
  d.support = 2;
  CHECK(Ints(GenerateSymbolic(d)) == std::vector<std::int64_t>{0, 0, 1, 0, 0});
  CHECK(Ints(GenerateSymbolic(Spec(GeneratorKind::kPrimeIndicator, 10))) ==
        std::vector<std::int64_t>{0, 0, 1, 1, 0, 1, 0, 1, 0, 0});
  const auto primes = Ints(GenerateSymbolic(Spec(GeneratorKind::kPrimeIndicator, 100001)));
  for (std::uint64_t v = 0; v <= 100000; ++v) REQUIRE(primes[v] == oracle::IsPrime(v));
}

TEST_CASE("sturmian has m + 1 factors") {
  const SymbolicSequence s = GenerateSymbolic(Spec(GeneratorKind::kSturmian, 1000000));
  const BlockProfile p = Profile(s, 30);
  for (std::size_t m = 1; m <= 30; ++m) CHECK(p.at(m).b == m + 1);
}

TEST_CASE("champernowne contains every short word") {
  const SymbolicSequence s = GenerateSymbolic(Spec(GeneratorKind::kChampernowne, 200000));
  const BlockProfile p = Profile(s, 12);
  for (std::size_t m = 1; m <= 12; ++m) CHECK(p.at(m).b == (1u << m));
  CHECK(Ints(GenerateSymbolic(Spec(GeneratorKind::kChampernowne, 9))) ==
        std::vector<std::int64_t>{1, 1, 0, 1, 1, 1, 0, 0, 1});
}

TEST_CASE("quadratic phase complexity grows polynomially") {
  GeneratorSpec s = Spec(GeneratorKind::kQuadraticPhase, 200000);
  s.theta = std::numbers::sqrt2;
  s.mode = PhaseMode::kBins;
  const BlockProfile p = Profile(GenerateSymbolic(s), 10);
  // Least squares of ln b against ln m: a power law fits tightly, and the
  // exponent stays small.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int lo = 3, hi = 10, k = hi - lo + 1;
  for (int m = lo; m <= hi; ++m) {
    const double x = std::log(m), y = std::log(static_cast<double>(p.at(m).b));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double icpt = (sy - slope * sx) / k;
  double residual = 0;
  for (int m = lo; m <= hi; ++m) {
    const double r = std::log(static_cast<double>(p.at(m).b)) - (icpt + slope * std::log(m));
    residual = std::max(residual, std::abs(r));
  }
  CHECK(slope < 4.0);
  CHECK(residual < 0.1);
}

TEST_CASE("generators are deterministic") {
  for (const char* kind : {"periodic", "sturmian", "quadratic_phase", "rotation_orbit", "doubling_orbit",
                           "zigzag_orbit", "champernowne", "prime_indicator", "delta", "iid_random"}) {
    GeneratorSpec s = SpecFromJson({{"kind", kind}, {"n", 5000}, {"seed", 77}});
    const AnySequence a = Generate(s);
    const AnySequence b = Generate(SpecFromJson(SpecToJson(s)));
    CHECK(a == b);
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(Validate(Spec(GeneratorKind::kPeriodic, 0)), InvalidArgument);
  GeneratorSpec s = Spec(GeneratorKind::kSturmian, 10);
  s.theta = 1.5;
  CHECK_THROWS_AS(Validate(s), InvalidArgument);
  s = Spec(GeneratorKind::kIidRandom, 10);
  s.probabilities = {0.5, 0.6};
  CHECK_THROWS_AS(Validate(s), InvalidArgument);
  s = Spec(GeneratorKind::kQuadraticPhase, 10);
  s.mode = PhaseMode::kBins;
  s.bins = 0;
  CHECK_THROWS_AS(Validate(s), InvalidArgument);
  CHECK_THROWS_AS(SpecFromJson({{"kind", "nope"}, {"n", 3}}), InvalidArgument);
  CHECK_THROWS_AS(SpecFromJson({{"kind", "delta"}}), InvalidArgument);
}

TEST_CASE("iid frequencies follow the probabilities") {
  GeneratorSpec s = Spec(GeneratorKind::kIidRandom, 200000);
  s.probabilities = {0.4, 0.3, 0.2, 0.1};
  s.seed = 7;
  const auto v = Ints(GenerateSymbolic(s));
  std::vector<double> freq(4);
  for (auto x : v) freq[x] += 1.0 / v.size();
  for (int i = 0; i < 4; ++i) CHECK(freq[i] == doctest::Approx(s.probabilities[i]).epsilon(0.02));
}

TEST_CASE("orbits stay in the unit interval") {
  for (auto kind : {GeneratorKind::kRotationOrbit, GeneratorKind::kDoublingOrbit, GeneratorKind::kZigzagOrbit}) {
    const NumericSequence v = GenerateNumeric(Spec(kind, 20000));
    CHECK(v.is_real());
    for (const auto& z : v.values()) {
      CHECK(z.real() >= 0.0);
      CHECK(z.real() <= 1.0);
    }
  }
  const NumericSequence rot = GenerateNumeric(Spec(GeneratorKind::kRotationOrbit, 3));
  CHECK(rot[0].real() == kDefaultOrbitStart);
}

TEST_CASE("zigzag map") {
  CHECK(ZigzagMap(1.0) == 0.0);
  CHECK(ZigzagMap(0.0) == 0.0);
  CHECK(ZigzagMap(0.25) == 1.0);
  CHECK(ZigzagMap(0.5) == 0.0);
  // Endpoints of bands n = 1..4: x = 1 - 2^-n + i 2^-(n+1) 2^-(n^2).
  for (int n = 1; n <= 4; ++n) {
    const double width = std::ldexp(1.0, -(n + 1) - n * n);
    const double start = 1.0 - std::ldexp(1.0, -n);
    const int count = 1 << (n * n);
    for (int i = 0; i <= count; i += std::max(1, count / 64)) {
      CHECK(std::abs(ZigzagMap(start + i * width)) < 1e-12);
      if (i < count) {
        CHECK(ZigzagMap(start + (i + 0.5) * width) == doctest::Approx(std::exp2(-0.5 * n)));
      }
    }
  }
  for (int i = 0; i <= 1000; ++i) {
    const double x = 0x1.0p-4 * i / 1000.0;
    CHECK(std::abs(ZigzagMap(ZigzagMap(x)) - 16 * x) < 1e-12);
  }
  CHECK(std::abs(ZigzagMap(ZigzagMap(0x1.0p-4 * 0.3)) - 0.3) < 1e-12);
  for (int i = 0; i <= 100000; ++i) {
    const double x = i / 100000.0;
    const double y = ZigzagMap(x);
    CHECK((y >= 0.0 && y <= 1.0));
  }
  CHECK_THROWS_AS(ZigzagMap(1.5), InvalidArgument);
  CHECK_THROWS_AS(ZigzagMap(-0.1), InvalidArgument);
}
