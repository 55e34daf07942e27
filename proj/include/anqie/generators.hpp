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

// Deterministic generators for the sequence families used throughout the
// library. Irrational parameters are doubles; every claim downstream is about
// the generated prefix for that double, not about the ideal irrational.

#ifndef ANQIE_GENERATORS_HPP_
#define ANQIE_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

#include "anqie/io.hpp"
#include "anqie/seqcore.hpp"
#include "json.hpp"

namespace anqie {

enum class GeneratorKind {
  kPeriodic,
  kSturmian,
  kQuadraticPhase,
  kRotationOrbit,
  kDoublingOrbit,
  kZigzagOrbit,
  kChampernowne,
  kPrimeIndicator,
  kDelta,
  kIidRandom,
};

GeneratorKind ParseGeneratorKind(std::string_view name);
std::string_view GeneratorKindName(GeneratorKind kind);

enum class PhaseMode {
  kComplex,  // e^{2 pi i n^2 theta}
  kPhase,    // frac(n^2 theta) as a real in [0, 1)
  kBins,     // floor(bins * frac(n^2 theta)) as a symbol
};

inline constexpr double kDefaultOrbitStart = 0.2907;

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kPeriodic;
  std::size_t n = 0;
  std::vector<std::int64_t> pattern{0, 1};       // periodic
  double theta = std::numbers::sqrt2 - 1.0;      // sturmian, rotation, quadratic
  PhaseMode mode = PhaseMode::kComplex;          // quadratic_phase
  std::uint32_t bins = 8;                        // quadratic_phase in kBins mode
  double x0 = kDefaultOrbitStart;                // orbits
  std::uint32_t base = 2;                        // champernowne
  std::size_t support = 0;                       // delta
  std::vector<double> probabilities{0.5, 0.5};   // iid_random
  std::uint64_t seed = 1;                        // iid_random, doubling, zigzag
  double jitter = 1e-12;                         // zigzag_orbit
};

// Throws InvalidArgument naming the offending parameter.
void Validate(const GeneratorSpec& spec);

// Same spec => bit-identical output.
AnySequence Generate(const GeneratorSpec& spec);
SymbolicSequence GenerateSymbolic(const GeneratorSpec& spec);
NumericSequence GenerateNumeric(const GeneratorSpec& spec);

bool IsSymbolicKind(const GeneratorSpec& spec);

// Only the fields relevant to the kind are written.
nlohmann::json SpecToJson(const GeneratorSpec& spec);
GeneratorSpec SpecFromJson(const nlohmann::json& j);

// frac(N * theta) computed exactly for the double theta: theta mod 1 is a
// dyadic rational M / 2^K, so the residue N*M mod 2^K is an integer
// computation. N may be as large as 2^64 - 1.
class ExactRotation {
 public:
  explicit ExactRotation(double theta);

  double Frac(std::uint64_t n) const;
  // floor(bins * frac(N * theta)).
  std::uint32_t Bin(std::uint64_t n, std::uint32_t bins) const;
  // floor((N+1) theta) - floor(N theta) for theta in (0, 1).
  int Step(std::uint64_t n) const;

 private:
  unsigned __int128 Residue(std::uint64_t n) const;

  unsigned __int128 numerator_ = 0;  // M
  int shift_ = 0;                    // K
};

// Piecewise-linear zigzag map on [0, 1]. Band n = [1 - 2^-n, 1 - 2^-n-1) is
// cut into 2^{n^2} equal subintervals, each carrying a tent of height
// 2^{-n/2} that vanishes at the subinterval endpoints; F(1) = 0. On
// [0, 1/2] the map is 4x up to 1/4 and 2 - 4x after. For bands with
// n^2 + n + 1 >= 53 every double is a subinterval endpoint, so the map
// returns 0 there exactly.
double ZigzagMap(double x);

// is_prime[i] for i in [0, n) by the sieve of Eratosthenes.
std::vector<bool> PrimeSieve(std::size_t n);

}  // namespace anqie

#endif  // ANQIE_GENERATORS_HPP_
