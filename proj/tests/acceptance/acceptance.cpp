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
// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "anqie/blockcount.hpp"
#include "anqie/entropy.hpp"
#include "anqie/generators.hpp"
#include "anqie/laws.hpp"
#include "anqie/quantize.hpp"

using namespace anqie;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

GeneratorSpec Spec(GeneratorKind kind, std::size_t n) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  return spec;
}

SymbolicSequence Periodic(std::size_t p, std::size_t n) {
  GeneratorSpec spec = Spec(GeneratorKind::kPeriodic, n);
  spec.pattern.resize(p);
  std::iota(spec.pattern.begin(), spec.pattern.end(), 0);
  return GenerateSymbolic(spec);
}

SymbolicSequence Mask(const NumericSequence& v, double a, double b) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = v[i].real();
    out[i] = x <= a ? 0 : (x >= b ? 1 : 2);
  }
  return SymbolicSequence::FromIntegers(out);
}

constexpr std::size_t kLongProfile = 1000;

void FullEntropy(Outcome& o) {
  GeneratorSpec iid = Spec(GeneratorKind::kIidRandom, 1000000);
  iid.seed = 1;
  for (const auto& [name, spec] : {std::pair{"iid", iid}, std::pair{"champernowne", Spec(GeneratorKind::kChampernowne, 1000000)}}) {
    const SymbolicSequence s = GenerateSymbolic(spec);
    const auto start = std::chrono::steady_clock::now();
    const BlockProfile p = Profile(s, 20);
    const double secs = Seconds(start);
    const EntropyReport r = Estimate(p);
    o.detail << " " << name << "=" << r.estimate << " (m*=" << r.m_star << ", profile " << secs << "s)";
    o.Require(r.estimate >= 0.64 && r.estimate <= 0.70, std::string(name) + " estimate");
    o.Require(secs < 10.0, std::string(name) + " runtime");
  }
}

void ZeroEntropy(Outcome& o) {
  double worst_periodic = 0;
  for (std::size_t p = 1; p <= 12; ++p) {
    worst_periodic = std::max(worst_periodic, EntropyOf(Periodic(p, 1000000), kLongProfile).estimate);
  }
  o.detail << " periodic max=" << worst_periodic;
  o.Require(worst_periodic < 0.05, "periodic");

  const SymbolicSequence st = GenerateSymbolic(Spec(GeneratorKind::kSturmian, 1000000));
  const EntropyReport sr = EntropyOf(st, kLongProfile);
  o.detail << " sturmian=" << sr.estimate;
  o.Require(sr.estimate < 0.05, "sturmian");
  const BlockProfile sp = Profile(st, 30);
  bool exact = true;
  for (std::size_t m = 1; m <= 30; ++m) exact = exact && sp.at(m).b == m + 1;
  o.Require(exact, "sturmian b(m) = m+1");

  GeneratorSpec q = Spec(GeneratorKind::kQuadraticPhase, 1000000);
  q.theta = std::numbers::sqrt2;
  q.mode = PhaseMode::kBins;
  q.bins = 8;
  const EntropyReport qr = EntropyOf(GenerateSymbolic(q), kLongProfile);
  o.detail << " quadratic=" << qr.estimate << " (m*=" << qr.m_star << ", b=" << qr.profile.at(qr.m_star).b << ")";
  o.Require(qr.estimate < 0.05, "quadratic phase");
}

void ExactLaws(Outcome& o, const std::vector<LawVerdict>& verdicts) {
  std::size_t checked = 0, failed = 0;
  for (const auto& v : verdicts) {
    if (v.law != "joint" && v.law != "pointwise" && v.law != "shift" && v.law != "levelset" && v.law != "recode") continue;
    if (!v.exact) continue;  // pointwise ops that do not apply to an input
    ++checked;
    for (const auto& row : v.rows) failed += row.lhs > row.rhs && v.relation == "<=";
    failed += !v.holds;
  }
  o.detail << " " << checked << " exact verdicts, " << failed << " failures; all laws: "
           << (AllExactHold(verdicts) ? "hold" : "VIOLATED");
  o.Require(checked > 0 && failed == 0 && AllExactHold(verdicts), "exact laws");
}

void Independence(Outcome& o) {
  std::size_t mismatches = 0;
  for (std::size_t p = 1; p <= 12; ++p) {
    for (std::size_t q = 1; q <= 12; ++q) {
      const bool independent = IndependenceCheck(Periodic(p, 10000), Periodic(q, 10000), 12).holds;
      mismatches += independent != (oracle::Gcd(p, q) == 1);
    }
  }
  o.detail << " 144 pairs, " << mismatches << " mismatches";
  o.Require(mismatches == 0, "gcd rule");
}

void ImplifyContract(Outcome& o) {
  GeneratorSpec sturmian = Spec(GeneratorKind::kRotationOrbit, 100000);
  sturmian.x0 = 0.0;
  const GeneratorSpec rotation = Spec(GeneratorKind::kRotationOrbit, 100000);
  for (const auto& [name, spec] : {std::pair{"sturmian", sturmian}, std::pair{"rotation", rotation}}) {
    const NumericSequence v = GenerateNumeric(spec);
    const ImplifyResult a = Implify(v, 0.26, 8);
    const ImplifyResult b = Implify(v, 0.26, 8);
    const double sup = SupDistance(v, a.sequence);
    const std::uint64_t out = CountRegular(a.sequence, 8);
    const std::uint64_t pointwise = CountRegular(Quantize(v, a.codebook), 8);
    o.detail << " " << name << ": sup=" << sup << " r8 " << out << "<=" << pointwise;
    o.Require(sup < 0.26, std::string(name) + " sup distance");
    o.Require(out <= pointwise, std::string(name) + " block count");
    o.Require(a.sequence == b.sequence && a.patterns.patterns == b.patterns.patterns, std::string(name) + " determinism");
  }
}

void SeparationContract(Outcome& o, const std::vector<LawVerdict>& verdicts) {
  std::size_t inputs = 0, violated = 0;
  for (const auto& v : verdicts) {
    if (v.law != "separation") continue;
    ++inputs;
    violated += v.extra.value("violations", std::uint64_t{1}) != 0;
  }
  o.detail << " sandwich on " << inputs << " inputs, " << violated << " violated;";
  o.Require(inputs > 0 && violated == 0, "sandwich");

  GeneratorSpec q = Spec(GeneratorKind::kQuadraticPhase, 100000);
  q.theta = std::numbers::sqrt2;
  q.mode = PhaseMode::kPhase;
  const NumericSequence v = GenerateNumeric(q);
  const double input = EntropyOf(Mask(v, 0.4, 0.6)).estimate;
  const double output = EntropyOf(Separate(v, 0.4, 0.6, 8).sequence).estimate;
  o.detail << " quadratic magnitude in=" << input << " out=" << output;
  o.Require(output <= input + 0.02, "estimate");
}

void Weyl(Outcome& o) {
  auto check = [&](const char* name, const std::vector<Point>& pts, const std::vector<LatticeVector>& lattice,
                   std::size_t n) {
    const WeylResult r = WeylSums(pts, lattice, n);
    double gap = 0;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      gap = std::max(gap, std::abs(r.moduli[i] - oracle::WeylModulus(pts, lattice[i], n)));
    }
    o.detail << " " << name << "=" << r.max_modulus << " (oracle gap " << gap << ")";
    o.Require(gap <= 1e-10, std::string(name) + " oracle");
    return r.max_modulus;
  };
  const double rational = check("rational", WeylPoints(WeylKind::kRational, 0.5, 1000), {{2}}, 1000);
  o.Require(rational == 1.0, "rational");
  std::vector<LatticeVector> small;
  for (std::int64_t l = -5; l <= 5; ++l) {
    if (l != 0) small.push_back({l});
  }
  const double golden = check("golden", WeylPoints(WeylKind::kLinear, (std::sqrt(5.0) - 1) / 2, 10000), small, 10000);
  o.Require(golden < 0.02, "golden");
  const double pair = check("quadratic_pair", WeylPoints(WeylKind::kQuadraticPair, std::numbers::sqrt2, 100000),
                            DefaultLattice(2, 3), 100000);
  o.Require(pair < 0.02, "quadratic pair");
}

void OracleEquivalence(Outcome& o) {
  std::mt19937_64 rng(424242);
  std::size_t discrepancies = 0, comparisons = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10000)(rng);
    const std::uint32_t k = std::uniform_int_distribution<std::uint32_t>(1, 8)(rng);
    const auto codes = oracle::RandomCodes(rng, n, k);
    const std::size_t m_max = std::min<std::size_t>(20, n);
    const auto fast = SlidingCounts(codes, m_max);
    for (std::size_t m = 1; m <= m_max; ++m) {
      ++comparisons;
      discrepancies += fast[m - 1] != oracle::SlidingWindows(codes, m);
    }
  }
  o.detail << " 200 sequences, " << comparisons << " counts, " << discrepancies << " discrepancies";
  o.Require(discrepancies == 0, "equivalence");
}

void Zigzag(Outcome& o) {
  const double bound = ZigzagLowerBound(1);
  const double exact = oracle::ZigzagBound(1);
  o.detail << " bound(1)=" << bound << " gap " << std::abs(bound - exact);
  o.Require(std::abs(bound - exact) < 1e-9, "big-integer value");
  o.Require(std::abs(bound - std::log(66067.0) / 2) < 1e-9, "ln(66067)/2");
  o.Require(bound > 16 * std::numbers::ln2 / 2, "lower bound");
  o.Require(ZigzagMap(1.0) == 0.0, "F(1)");
  double endpoint = 0;
  for (int n = 0; n <= 4; ++n) {
    const double width = std::ldexp(1.0, -(n + 1) - n * n);
    const double start = 1.0 - std::ldexp(1.0, -n);
    for (int i = 0; i <= (1 << (n * n)); ++i) endpoint = std::max(endpoint, std::abs(ZigzagMap(start + i * width)));
  }
  double stretch = 0;
  for (int i = 0; i <= 100000; ++i) {
    const double x = 0x1.0p-4 * i / 100000.0;
    stretch = std::max(stretch, std::abs(ZigzagMap(ZigzagMap(x)) - 16 * x));
  }
  o.detail << "; endpoint max " << endpoint << ", |F^2(x)-16x| max " << stretch;
  o.Require(endpoint <= 1e-12, "endpoint zeros");
  o.Require(stretch <= 1e-12, "F^2 = 16x");
}

}  // namespace

int main() {
  const std::vector<LawVerdict> suite = LawSuite(DefaultSuiteConfig());
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"full-entropy value", FullEntropy},
      {"zero-entropy families", ZeroEntropy},
      {"exact law suite", [&](Outcome& o) { ExactLaws(o, suite); }},
      {"independence criterion", Independence},
      {"implification contract", ImplifyContract},
      {"separation contract", [&](Outcome& o) { SeparationContract(o, suite); }},
      {"weyl sums", Weyl},
      {"oracle equivalence", OracleEquivalence},
      {"zigzag analytics", Zigzag},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failed += !o.pass;
    std::printf("%s %zu %s:%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
