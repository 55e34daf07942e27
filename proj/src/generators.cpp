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

#include "anqie/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

#include "anqie/error.hpp"

namespace anqie {

namespace {

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 10> kKindNames{{
    {GeneratorKind::kPeriodic, "periodic"},
    {GeneratorKind::kSturmian, "sturmian"},
    {GeneratorKind::kQuadraticPhase, "quadratic_phase"},
    {GeneratorKind::kRotationOrbit, "rotation_orbit"},
    {GeneratorKind::kDoublingOrbit, "doubling_orbit"},
    {GeneratorKind::kZigzagOrbit, "zigzag_orbit"},
    {GeneratorKind::kChampernowne, "champernowne"},
    {GeneratorKind::kPrimeIndicator, "prime_indicator"},
    {GeneratorKind::kDelta, "delta"},
    {GeneratorKind::kIidRandom, "iid_random"},
}};

constexpr std::size_t kMaxLength = std::size_t{1} << 32;

std::string_view ModeName(PhaseMode mode) {
  switch (mode) {
    case PhaseMode::kComplex: return "complex";
    case PhaseMode::kPhase: return "phase";
    case PhaseMode::kBins: return "bins";
  }
  return "complex";
}

PhaseMode ParseMode(std::string_view name) {
  if (name == "complex") return PhaseMode::kComplex;
  if (name == "phase") return PhaseMode::kPhase;
  if (name == "bins") return PhaseMode::kBins;
  throw InvalidArgument("unknown quadratic_phase mode '" + std::string(name) +
                        "' (complex, phase, bins)");
}

// Uniform double in [0, 1) with 53 random bits; identical on every platform
// for a given mt19937_64 state.
double UnitDraw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void Require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

SymbolicSequence Periodic(const GeneratorSpec& spec) {
  std::vector<std::int64_t> v(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) v[i] = spec.pattern[i % spec.pattern.size()];
  return SymbolicSequence::FromIntegers(v);
}

SymbolicSequence Sturmian(const GeneratorSpec& spec) {
  const ExactRotation rot(spec.theta);
  std::vector<std::int64_t> v(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) v[i] = rot.Step(i);
  return SymbolicSequence::FromIntegers(v);
}

SymbolicSequence QuadraticBins(const GeneratorSpec& spec) {
  const ExactRotation rot(spec.theta);
  std::vector<std::int64_t> v(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const std::uint64_t k = static_cast<std::uint64_t>(i) * i;
    v[i] = rot.Bin(k, spec.bins);
  }
  return SymbolicSequence::FromIntegers(v);
}

NumericSequence QuadraticNumeric(const GeneratorSpec& spec) {
  const ExactRotation rot(spec.theta);
  std::vector<Complex> v(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const double phase = rot.Frac(static_cast<std::uint64_t>(i) * i);
    if (spec.mode == PhaseMode::kPhase) {
      v[i] = Complex(phase, 0.0);
    } else {
      const double angle = 2.0 * std::numbers::pi * phase;
      v[i] = Complex(std::cos(angle), std::sin(angle));
    }
  }
  return NumericSequence(std::move(v));
}

NumericSequence RotationOrbit(const GeneratorSpec& spec) {
  const ExactRotation rot(spec.theta);
  std::vector<double> v(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    double y = spec.x0 + rot.Frac(i);
    if (y >= 1.0) y -= 1.0;
    v[i] = y;
  }
  return NumericSequence::FromReals(v);
}

// Orbit of the point whose first 60 binary digits are those of x0 and whose
// later digits come from the seeded stream. Each x_n is the 53-digit
// truncation of 2^n x mod 1, so no precision is lost along the orbit.
NumericSequence DoublingOrbit(const GeneratorSpec& spec) {
  const std::size_t total = spec.n + 53;
  std::vector<std::uint8_t> bits(total, 0);
  const auto head = static_cast<std::uint64_t>(std::ldexp(spec.x0, 60));
  for (std::size_t j = 0; j < 60 && j < total; ++j) bits[j] = (head >> (59 - j)) & 1U;
  std::mt19937_64 rng(spec.seed);
  for (std::size_t j = 60; j < total; j += 64) {
    const std::uint64_t word = rng();
    for (std::size_t b = 0; b < 64 && j + b < total; ++b) bits[j + b] = (word >> b) & 1U;
  }
  std::vector<double> v(spec.n);
  std::uint64_t window = 0;
  for (std::size_t j = 0; j < 53; ++j) window = (window << 1) | bits[j];
  const std::uint64_t mask = (std::uint64_t{1} << 53) - 1;
  for (std::size_t i = 0; i < spec.n; ++i) {
    v[i] = std::ldexp(static_cast<double>(window), -53);
    window = ((window << 1) | bits[i + 53]) & mask;
  }
  return NumericSequence::FromReals(v);
}

// Double-precision iteration of F collapses onto the fixed point 0 after a
// few dozen steps because every branch expands by at least 4. Each step
// therefore adds a seeded perturbation of size `jitter`, which makes the
// output a jitter-pseudo-orbit of F.
NumericSequence ZigzagOrbit(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<double> v(spec.n);
  double x = spec.x0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    v[i] = x;
    double y = ZigzagMap(x);
    if (spec.jitter > 0.0) y += spec.jitter * (2.0 * UnitDraw(rng) - 1.0);
    x = std::clamp(y, 0.0, 1.0);
  }
  return NumericSequence::FromReals(v);
}

SymbolicSequence Champernowne(const GeneratorSpec& spec) {
  std::vector<std::int64_t> v;
  v.reserve(spec.n);
  std::vector<std::int64_t> digits;
  for (std::uint64_t k = 1; v.size() < spec.n; ++k) {
    digits.clear();
    for (std::uint64_t x = k; x > 0; x /= spec.base) {
      digits.push_back(static_cast<std::int64_t>(x % spec.base));
    }
    for (auto it = digits.rbegin(); it != digits.rend() && v.size() < spec.n; ++it) {
      v.push_back(*it);
    }
  }
  return SymbolicSequence::FromIntegers(v);
}

SymbolicSequence PrimeIndicator(const GeneratorSpec& spec) {
  const auto sieve = PrimeSieve(spec.n);
  std::vector<std::int64_t> v(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) v[i] = sieve[i] ? 1 : 0;
  return SymbolicSequence::FromIntegers(v);
}

SymbolicSequence Delta(const GeneratorSpec& spec) {
  std::vector<std::int64_t> v(spec.n, 0);
  if (spec.support < spec.n) v[spec.support] = 1;
  return SymbolicSequence::FromIntegers(v);
}

SymbolicSequence IidRandom(const GeneratorSpec& spec) {
  std::vector<double> cumulative;
  double acc = 0.0;
  for (double p : spec.probabilities) cumulative.push_back(acc += p);
  std::mt19937_64 rng(spec.seed);
  std::vector<std::int64_t> v(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const double u = UnitDraw(rng) * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    v[i] = it - cumulative.begin();
  }
  return SymbolicSequence::FromIntegers(v);
}

}  // namespace

GeneratorKind ParseGeneratorKind(std::string_view name) {
  for (const auto& [kind, n] : kKindNames) {
    if (n == name) return kind;
  }
  throw InvalidArgument("unknown generator kind '" + std::string(name) + "'");
}

std::string_view GeneratorKindName(GeneratorKind kind) {
  for (const auto& [k, n] : kKindNames) {
    if (k == kind) return n;
  }
  return "periodic";
}

ExactRotation::ExactRotation(double theta) {
  Require(std::isfinite(theta) && std::fabs(theta) < 0x1.0p52,
          "theta must be finite with |theta| < 2^52");
  const double t = theta - std::floor(theta);
  if (t == 0.0) return;
  int e = 0;
  const double mant = std::frexp(t, &e);
  auto m = static_cast<std::uint64_t>(std::ldexp(mant, 53));
  int k = 53 - e;
  while ((m & 1U) == 0 && k > 0) {
    m >>= 1;
    --k;
  }
  Require(k <= 96, "fractional part of theta is too small (below ~2^-43)");
  numerator_ = m;
  shift_ = k;
}

unsigned __int128 ExactRotation::Residue(std::uint64_t n) const {
  const unsigned __int128 product = numerator_ * n;
  return product & ((static_cast<unsigned __int128>(1) << shift_) - 1);
}

double ExactRotation::Frac(std::uint64_t n) const {
  if (numerator_ == 0) return 0.0;
  const double v = std::ldexp(static_cast<double>(Residue(n)), -shift_);
  return v < 1.0 ? v : std::nextafter(1.0, 0.0);
}

std::uint32_t ExactRotation::Bin(std::uint64_t n, std::uint32_t bins) const {
  if (numerator_ == 0) return 0;
  return static_cast<std::uint32_t>((Residue(n) * bins) >> shift_);
}

int ExactRotation::Step(std::uint64_t n) const {
  if (numerator_ == 0) return 0;
  return static_cast<int>((Residue(n) + numerator_) >> shift_);
}

double ZigzagMap(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidArgument("zigzag map is defined on [0, 1]");
  }
  if (x == 1.0) return 0.0;
  int band = 0;
  double offset = x;
  if (x >= 0.5) {
    int e = 0;
    const double mant = std::frexp(1.0 - x, &e);
    band = mant == 0.5 ? 1 - e : -e;
    if (band * band + band + 1 >= 53) return 0.0;
    offset = x - (1.0 - std::ldexp(1.0, -band));
  }
  const double scaled = std::ldexp(offset, band * band + band + 1);
  const double u = scaled - std::floor(scaled);
  const double height = std::exp2(-0.5 * band);
  return height * (u < 0.5 ? 2.0 * u : 2.0 * (1.0 - u));
}

std::vector<bool> PrimeSieve(std::size_t n) {
  std::vector<bool> is_prime(n, true);
  for (std::size_t i = 0; i < std::min<std::size_t>(n, 2); ++i) is_prime[i] = false;
  for (std::size_t p = 2; p * p < n; ++p) {
    if (!is_prime[p]) continue;
    for (std::size_t q = p * p; q < n; q += p) is_prime[q] = false;
  }
  return is_prime;
}

void Validate(const GeneratorSpec& spec) {
  Require(spec.n >= 1, "n must be at least 1");
  Require(spec.n <= kMaxLength, "n must be at most 2^32");
  switch (spec.kind) {
    case GeneratorKind::kPeriodic:
      Require(!spec.pattern.empty(), "periodic: pattern must not be empty");
      break;
    case GeneratorKind::kSturmian:
    case GeneratorKind::kRotationOrbit:
      Require(spec.theta > 0.0 && spec.theta < 1.0, "theta must lie in (0, 1)");
      (void)ExactRotation(spec.theta);
      if (spec.kind == GeneratorKind::kRotationOrbit) {
        Require(spec.x0 >= 0.0 && spec.x0 < 1.0, "rotation_orbit: x0 must lie in [0, 1)");
      }
      break;
    case GeneratorKind::kQuadraticPhase:
      (void)ExactRotation(spec.theta);
      if (spec.mode == PhaseMode::kBins) {
        Require(spec.bins >= 1 && spec.bins < (1U << 31), "quadratic_phase: bins must be >= 1");
      }
      break;
    case GeneratorKind::kDoublingOrbit:
      Require(spec.x0 >= 0.0 && spec.x0 < 1.0, "doubling_orbit: x0 must lie in [0, 1)");
      break;
    case GeneratorKind::kZigzagOrbit:
      Require(spec.x0 >= 0.0 && spec.x0 <= 1.0, "zigzag_orbit: x0 must lie in [0, 1]");
      Require(spec.jitter >= 0.0 && spec.jitter <= 0.5,
              "zigzag_orbit: jitter must lie in [0, 0.5]");
      break;
    case GeneratorKind::kChampernowne:
      Require(spec.base >= 2 && spec.base <= 36, "champernowne: base must lie in 2..36");
      break;
    case GeneratorKind::kPrimeIndicator:
    case GeneratorKind::kDelta:
      break;
    case GeneratorKind::kIidRandom: {
      Require(!spec.probabilities.empty(), "iid_random: probabilities must not be empty");
      double sum = 0.0;
      for (double p : spec.probabilities) {
        Require(std::isfinite(p) && p >= 0.0, "iid_random: probabilities must be >= 0");
        sum += p;
      }
      Require(std::fabs(sum - 1.0) <= 1e-9, "iid_random: probabilities must sum to 1");
      break;
    }
  }
}

bool IsSymbolicKind(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::kRotationOrbit:
    case GeneratorKind::kDoublingOrbit:
    case GeneratorKind::kZigzagOrbit:
      return false;
    case GeneratorKind::kQuadraticPhase:
      return spec.mode == PhaseMode::kBins;
    default:
      return true;
  }
}

AnySequence Generate(const GeneratorSpec& spec) {
  Validate(spec);
  switch (spec.kind) {
    case GeneratorKind::kPeriodic: return Periodic(spec);
    case GeneratorKind::kSturmian: return Sturmian(spec);
    case GeneratorKind::kQuadraticPhase:
      if (spec.mode == PhaseMode::kBins) return QuadraticBins(spec);
      return QuadraticNumeric(spec);
    case GeneratorKind::kRotationOrbit: return RotationOrbit(spec);
    case GeneratorKind::kDoublingOrbit: return DoublingOrbit(spec);
    case GeneratorKind::kZigzagOrbit: return ZigzagOrbit(spec);
    case GeneratorKind::kChampernowne: return Champernowne(spec);
    case GeneratorKind::kPrimeIndicator: return PrimeIndicator(spec);
    case GeneratorKind::kDelta: return Delta(spec);
    case GeneratorKind::kIidRandom: return IidRandom(spec);
  }
  throw InvalidArgument("unknown generator kind");
}

SymbolicSequence GenerateSymbolic(const GeneratorSpec& spec) {
  auto out = Generate(spec);
  if (auto* s = std::get_if<SymbolicSequence>(&out)) return std::move(*s);
  throw InvalidArgument(std::string(GeneratorKindName(spec.kind)) +
                        " produces numeric values, not symbols");
}

NumericSequence GenerateNumeric(const GeneratorSpec& spec) {
  auto out = Generate(spec);
  if (auto* s = std::get_if<NumericSequence>(&out)) return std::move(*s);
  // Symbolic kinds with integer labels are read as reals.
  const auto& seq = std::get<SymbolicSequence>(out);
  std::vector<Complex> values;
  values.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto v = seq.label_at(i).numeric();
    if (!v) throw DataError("label " + seq.label_at(i).text() + " is not numeric");
    values.push_back(*v);
  }
  return NumericSequence(std::move(values));
}

nlohmann::json SpecToJson(const GeneratorSpec& spec) {
  nlohmann::json j = {{"kind", GeneratorKindName(spec.kind)}, {"n", spec.n}};
  switch (spec.kind) {
    case GeneratorKind::kPeriodic:
      j["pattern"] = spec.pattern;
      break;
    case GeneratorKind::kSturmian:
      j["theta"] = spec.theta;
      break;
    case GeneratorKind::kQuadraticPhase:
      j["theta"] = spec.theta;
      j["mode"] = ModeName(spec.mode);
      if (spec.mode == PhaseMode::kBins) j["bins"] = spec.bins;
      break;
    case GeneratorKind::kRotationOrbit:
      j["theta"] = spec.theta;
      j["x0"] = spec.x0;
      break;
    case GeneratorKind::kDoublingOrbit:
      j["x0"] = spec.x0;
      j["seed"] = spec.seed;
      break;
    case GeneratorKind::kZigzagOrbit:
      j["x0"] = spec.x0;
      j["seed"] = spec.seed;
      j["jitter"] = spec.jitter;
      break;
    case GeneratorKind::kChampernowne:
      j["base"] = spec.base;
      break;
    case GeneratorKind::kPrimeIndicator:
      break;
    case GeneratorKind::kDelta:
      j["support"] = spec.support;
      break;
    case GeneratorKind::kIidRandom:
      j["probabilities"] = spec.probabilities;
      j["seed"] = spec.seed;
      break;
  }
  return j;
}

GeneratorSpec SpecFromJson(const nlohmann::json& j) {
  GeneratorSpec spec;
  try {
    spec.kind = ParseGeneratorKind(j.at("kind").get<std::string>());
    spec.n = j.at("n").get<std::size_t>();
    if (j.contains("pattern")) spec.pattern = j.at("pattern").get<std::vector<std::int64_t>>();
    if (j.contains("theta")) spec.theta = j.at("theta").get<double>();
    if (j.contains("mode")) spec.mode = ParseMode(j.at("mode").get<std::string>());
    if (j.contains("bins")) {
      spec.bins = j.at("bins").get<std::uint32_t>();
      if (!j.contains("mode")) spec.mode = PhaseMode::kBins;
    }
    if (j.contains("x0")) spec.x0 = j.at("x0").get<double>();
    if (j.contains("base")) spec.base = j.at("base").get<std::uint32_t>();
    if (j.contains("support")) spec.support = j.at("support").get<std::size_t>();
    if (j.contains("probabilities")) {
      spec.probabilities = j.at("probabilities").get<std::vector<double>>();
    }
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("jitter")) spec.jitter = j.at("jitter").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("generator spec: ") + e.what());
  }
  Validate(spec);
  return spec;
}

}  // namespace anqie
