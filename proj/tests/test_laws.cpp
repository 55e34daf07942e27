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
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "anqie/blockcount.hpp"
#include "anqie/error.hpp"
#include "anqie/generators.hpp"
#include "anqie/laws.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anqie;

namespace {

SymbolicSequence Periodic(std::size_t p, std::size_t n) {
  std::vector<std::int64_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(i % p);
  return SymbolicSequence::FromIntegers(v);
}

SymbolicSequence Gen(GeneratorKind kind, std::size_t n, std::uint64_t seed = 1) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.seed = seed;
  return GenerateSymbolic(spec);
}

void CheckRowsExact(const LawVerdict& v) {
  CHECK(v.exact);
  CHECK(v.holds);
  for (const auto& row : v.rows) CHECK(row.holds);
}

}  // namespace

TEST_CASE("joint domination") {
  const LawVerdict a = JointDomination(Periodic(2, 1200), Periodic(3, 1200), 1);
  REQUIRE(a.rows.size() == 1);
  CHECK(a.rows[0].lhs == 6);
  CHECK(a.rows[0].rhs == 6);
  CheckRowsExact(a);

  const SymbolicSequence f = Gen(GeneratorKind::kChampernowne, 5000);
  const LawVerdict same = JointDomination(f, f, 8);
  for (const auto& row : same.rows) {
    CHECK(row.lhs == CountSliding(f, row.m));
    CHECK(row.rhs == row.lhs * row.lhs);
  }

  const SymbolicSequence r = Gen(GeneratorKind::kIidRandom, 100000, 3);
  const SymbolicSequence s = Gen(GeneratorKind::kSturmian, 100000);
  const LawVerdict big = JointDomination(r, s, 10);
  CheckRowsExact(big);
  CHECK(big.rows[9].rhs == 1024 * 11);
  const JointSequence js = Joint({r, s});
  const auto joint = js.codes();
  CHECK(big.rows[9].lhs == oracle::SlidingWindows({joint.begin(), joint.end()}, 10));
  CHECK_THROWS(JointDomination(f, Periodic(2, 10), 3));
}

TEST_CASE("pointwise domination") {
  const SymbolicSequence f = Gen(GeneratorKind::kPrimeIndicator, 10000);
  const SymbolicSequence g = Periodic(5, 10000);
  for (auto op : {PointwiseOp::kSum, PointwiseOp::kDifference, PointwiseOp::kProduct, PointwiseOp::kMax,
                  PointwiseOp::kMin}) {
    CheckRowsExact(PointwiseDomination(f, g, op, 12));
  }
  const SymbolicSequence neg = Recode(g, [](const Label& l) -> std::optional<Label> { return Label(-l.as_integer()); });
  const SymbolicSequence zero = ApplyPointwise(g, neg, PointwiseOp::kSum);
  CHECK(zero.alphabet().size() == 1);
  CHECK(CountSliding(zero, 5) == 1);

  const LawVerdict prod = PointwiseDomination(Periodic(2, 10000), Periodic(3, 10000), PointwiseOp::kProduct, 6);
  const SymbolicSequence ps = ApplyPointwise(Periodic(2, 10000), Periodic(3, 10000), PointwiseOp::kProduct);
  const JointSequence js = Joint({Periodic(2, 10000), Periodic(3, 10000)});
  const auto p = ps.symbols();
  const auto j = js.codes();
  for (const auto& row : prod.rows) {
    CHECK(row.lhs == oracle::SlidingWindows({p.begin(), p.end()}, row.m));
    CHECK(row.rhs == oracle::SlidingWindows({j.begin(), j.end()}, row.m));
  }
  CheckRowsExact(prod);
  const SymbolicSequence text = SymbolicSequence::FromLabels(std::vector<Label>{Label("x"), Label("y")});
  CHECK_THROWS_AS(ApplyPointwise(text, text, PointwiseOp::kSum), DataError);
  CHECK(ParsePointwiseOp("product") == PointwiseOp::kProduct);
  CHECK(PointwiseOpName(PointwiseOp::kMax) == "max");
}

TEST_CASE("shift inclusion") {
  const LawVerdict p = ShiftInclusion(Periodic(2, 100), 1, 5);
  for (const auto& row : p.rows) CHECK(row.lhs == row.rhs);
  CheckRowsExact(p);

  const SymbolicSequence c = Gen(GeneratorKind::kChampernowne, 20000);
  const LawVerdict cv = ShiftInclusion(c, 3, 12);
  CheckRowsExact(cv);
  for (std::size_t m = 1; m <= 12; ++m) {
    const std::uint64_t a = CountSliding(c, m), b = CountSliding(Shift(c, 3), m);
    CHECK(b <= a);
    CHECK(a - b <= 3);
  }

  GeneratorSpec d;
  d.kind = GeneratorKind::kDelta;
  d.n = 50;
  d.support = 0;
  const SymbolicSequence delta = GenerateSymbolic(d);
  CHECK(CountSliding(Shift(delta, 1), 2) < CountSliding(delta, 2));
  CheckRowsExact(ShiftInclusion(delta, 1, 2));
}

TEST_CASE("level set domination") {
  const LawVerdict p3 = LevelSetDomination(Periodic(3, 300), Label(0), 6);
  for (const auto& row : p3.rows) {
    CHECK(row.lhs <= 3);
    CHECK(row.rhs <= 3);
  }
  CheckRowsExact(p3);
  GeneratorSpec s;
  s.kind = GeneratorKind::kIidRandom;
  s.n = 100000;
  s.probabilities = {0.25, 0.25, 0.25, 0.25};
  const SymbolicSequence r4 = GenerateSymbolic(s);
  for (std::int64_t label = 0; label < 4; ++label) CheckRowsExact(LevelSetDomination(r4, Label(label), 8));
  const LawVerdict c = LevelSetDomination(Periodic(1, 40), Label(0), 4);
  for (const auto& row : c.rows) {
    CHECK(row.lhs == 1);
    CHECK(row.rhs == 1);
  }
  const LawVerdict missing = LevelSetDomination(Periodic(1, 40), Label(9), 4);
  CheckRowsExact(missing);
  CHECK(LevelSet(Periodic(3, 6), Label(1)).label_at(4) == Label(1));
}

TEST_CASE("recode invariance") {
  const SymbolicSequence s = Gen(GeneratorKind::kChampernowne, 10000);
  const LawVerdict v = RecodeInvariance(s, ReciprocalShiftMap(), "reciprocal_shift", 12);
  CheckRowsExact(v);
  for (const auto& row : v.rows) CHECK(row.lhs == row.rhs);
  const LabelMap collapse = [](const Label&) -> std::optional<Label> { return Label(0); };
  CHECK_THROWS_AS(RecodeInvariance(s, collapse, "collapse", 4), InvalidArgument);
  CHECK(ReciprocalShiftMap()(Label(2)) == Label(0.25));
  CHECK(ReciprocalShiftMap()(Label("s")) == Label("1/(s+2)"));
}

TEST_CASE("concatenation bound") {
  for (const auto& s : {Gen(GeneratorKind::kChampernowne, 20000), Gen(GeneratorKind::kIidRandom, 20000),
                        Gen(GeneratorKind::kPrimeIndicator, 20000), Periodic(4, 20000)}) {
    const LawVerdict v = ConcatenationBound(s, 12);
    CheckRowsExact(v);
    CHECK(!v.rows.empty());
    for (const auto& row : v.rows) CHECK(row.k * row.m <= 12);
  }
}

TEST_CASE("independence of periodic pairs follows gcd") {
  for (std::size_t p = 1; p <= 12; ++p) {
    for (std::size_t q = 1; q <= 12; ++q) {
      const LawVerdict v = IndependenceCheck(Periodic(p, 5000), Periodic(q, 5000), 10);
      CHECK_FALSE(v.exact);
      CHECK(v.holds == (oracle::Gcd(p, q) == 1));
    }
  }
  const LawVerdict two_four = IndependenceCheck(Periodic(2, 100), Periodic(4, 100), 3);
  CHECK_FALSE(two_four.holds);
  CHECK(two_four.rows[0].lhs == 4);
  CHECK(two_four.rows[0].rhs == 8);
  CHECK(IndependenceCheck(Periodic(2, 100), Periodic(3, 100), 3).verdict == "consistent with independence");
  const SymbolicSequence f = Gen(GeneratorKind::kChampernowne, 1000);
  CHECK_FALSE(IndependenceCheck(f, f, 4).holds);
}

TEST_CASE("weyl sums") {
  const auto half = WeylPoints(WeylKind::kRational, 0.5, 1000);
  CHECK(WeylSums(half, {{2}}, 1000).max_modulus == 1.0);

  const double golden = (std::sqrt(5.0) - 1) / 2;
  const auto lin = WeylPoints(WeylKind::kLinear, golden, 10000);
  std::vector<LatticeVector> ls;
  for (std::int64_t l = -5; l <= 5; ++l) {
    if (l != 0) ls.push_back({l});
  }
  const WeylResult lr = WeylSums(lin, ls, 10000);
  CHECK(lr.max_modulus < 0.02);
  for (std::size_t i = 0; i < ls.size(); ++i) CHECK(std::abs(lr.moduli[i] - oracle::WeylModulus(lin, ls[i], 10000)) < 1e-10);

  const auto pair = WeylPoints(WeylKind::kQuadraticPair, std::numbers::sqrt2, 100000);
  const WeylResult pr = WeylSums(pair, {{1, -1}}, 100000);
  CHECK(pr.max_modulus < 0.02);
  CHECK(std::abs(pr.max_modulus - oracle::WeylModulus(pair, {1, -1}, 100000)) < 1e-10);

  const auto lattice = DefaultLattice(2, 3);
  CHECK(lattice.size() == 48);
  const WeylResult all = WeylSums(pair, lattice, 20000);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    CHECK(std::abs(all.moduli[i] - oracle::WeylModulus(pair, lattice[i], 20000)) < 1e-10);
  }
  CHECK(all.max_modulus == all.moduli[all.argmax]);
  CHECK(DefaultLattice(1, 3).size() == 6);
  CHECK_THROWS_AS(WeylSums(half, {{0}}, 10), InvalidArgument);
  CHECK_THROWS_AS(WeylSums(half, {{1}}, 2000), InvalidArgument);
  CHECK_THROWS_AS(WeylSums(half, {}, 10), InvalidArgument);
}

TEST_CASE("suite config round trip") {
  const SuiteConfig d = DefaultSuiteConfig();
  CHECK(d.inputs.size() == 17);
  CHECK(d.laws == AllLawNames());
  const nlohmann::json j = SuiteConfigToJson(d);
  CHECK(SuiteConfigToJson(SuiteConfigFromJson(j)) == j);
  nlohmann::json partial = {{"laws", {"joint"}}, {"n", 500}};
  const SuiteConfig p = SuiteConfigFromJson(partial);
  CHECK(p.inputs.size() == 17);
  CHECK(p.laws == std::vector<std::string>{"joint"});
  CHECK_THROWS(SuiteConfigFromJson({{"laws", {"bogus"}}}));
}

TEST_CASE("small suite holds and is ordered") {
  SuiteConfig c = DefaultSuiteConfig();
  c.n = 3000;
  for (auto& in : c.inputs) in.spec.n = 3000;
  const auto verdicts = LawSuite(c);
  CHECK(AllExactHold(verdicts));
  std::size_t last = 0;
  const auto names = AllLawNames();
  for (const auto& v : verdicts) {
    const std::size_t idx = std::find(names.begin(), names.end(), v.law) - names.begin();
    CHECK(idx >= last);
    last = idx;
    if (v.exact) CHECK(v.holds);
  }
  CHECK(VerdictTable(verdicts).find("joint") != std::string::npos);
  CHECK(VerdictToJson(verdicts[0]).contains("verdict"));
}
