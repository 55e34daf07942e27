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
#include <random>
#include <vector>

#include "anqie/blockcount.hpp"
#include "anqie/error.hpp"
#include "anqie/generators.hpp"
#include "anqie/seqcore.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anqie;

namespace {

SymbolicSequence Periodic(std::size_t p, std::size_t n) {
  std::vector<std::int64_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(i % p);
  return SymbolicSequence::FromIntegers(v);
}

SymbolicSequence Gen(GeneratorKind kind, std::size_t n) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  return GenerateSymbolic(spec);
}

std::vector<std::uint32_t> Codes(const SymbolicSequence& s) { return {s.symbols().begin(), s.symbols().end()}; }

}  // namespace

TEST_CASE("sliding counts of small sequences") {
  CHECK(CountSliding(Periodic(2, 10), 3) == 2);
  const SymbolicSequence constant = Periodic(1, 100);
  for (std::size_t m : {1, 7, 50, 100}) CHECK(CountSliding(constant, m) == 1);
  CHECK(CountSliding(Gen(GeneratorKind::kChampernowne, 10000), 3) == 8);
  CHECK(CountSliding(Gen(GeneratorKind::kSturmian, 100000), 10) == 11);
  CHECK_THROWS_AS(CountSliding(Periodic(2, 10), 11), InvalidArgument);
}

TEST_CASE("regular counts of small sequences") {
  CHECK(CountRegular(Periodic(3, 9), 3) == 1);
  CHECK(CountRegular(Periodic(2, 10), 3) == 2);
  const SymbolicSequence s = SymbolicSequence(Alphabet({Label(7), Label(8), Label(9)}), {0, 2, 0, 2});
  CHECK(CountRegular(s, 1) == 2);
  CHECK_THROWS_AS(CountRegular(s, 5), InvalidArgument);
}

TEST_CASE("profile") {
  const BlockProfile c = Profile(Periodic(1, 50), 5);
  for (const auto& row : c.rows) {
    CHECK(row.b == 1);
    CHECK(row.r == 1);
  }
  const BlockProfile p = Profile(Periodic(2, 10), 3);
  CHECK(p.at(1).b == 2);
  CHECK(p.at(2).b == 2);
  CHECK(p.at(3).b == 2);
  CHECK(p.at(1).r == 2);
  CHECK(p.at(2).r == 1);
  CHECK(p.at(3).r == 2);
  CHECK(p.at(3).pos_b == 8);
  CHECK(p.at(3).pos_r == 3);
  CHECK_THROWS_AS(Profile(Periodic(2, 10), 11), InvalidArgument);
  CHECK(Profile(Periodic(2, 10)).m_max() == 7);
  CHECK(DefaultMaxBlockLength(1) == 1);
  CHECK(DefaultMaxBlockLength(1 << 20) == 24);
}

TEST_CASE("random binary profile matches enumeration") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kIidRandom;
  spec.n = 100000;
  spec.seed = 11;
  const SymbolicSequence s = GenerateSymbolic(spec);
  const BlockProfile p = Profile(s, 17);
  const auto codes = Codes(s);
  for (std::size_t m = 1; m <= 17; ++m) {
    CHECK(p.at(m).b == oracle::SlidingWindows(codes, m));
    CHECK(p.at(m).r == oracle::AlignedWindows(codes, m));
  }
  for (std::size_t m = 1; m <= 10; ++m) CHECK(p.at(m).b == (1u << m));
  CHECK(p.at(17).b < (1u << 17));
  CHECK(p.at(17).b < p.at(17).pos_b);
}

TEST_CASE("fast counts equal naive window counts") {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3000)(rng);
    const std::uint32_t k = std::uniform_int_distribution<std::uint32_t>(1, 8)(rng);
    const auto codes = oracle::RandomCodes(rng, n, k);
    const std::size_t m_max = std::min<std::size_t>(20, n);
    const auto b = SlidingCounts(codes, m_max);
    const auto r = RegularCounts(codes, k, m_max);
    for (std::size_t m = 1; m <= m_max; ++m) {
      REQUIRE(b[m - 1] == oracle::SlidingWindows(codes, m));
      REQUIRE(r[m - 1] == oracle::AlignedWindows(codes, m));
      REQUIRE(CountSlidingNaive(codes, m) == b[m - 1]);
      REQUIRE(CountRegularNaive(codes, m) == r[m - 1]);
    }
  }
}

TEST_CASE("repetitive inputs stress the automaton") {
  std::vector<std::uint32_t> codes;
  for (int i = 0; i < 2000; ++i) codes.push_back(i % 7 == 0 || i % 11 == 0);
  const auto b = SlidingCounts(codes, 20);
  for (std::size_t m = 1; m <= 20; ++m) CHECK(b[m - 1] == oracle::SlidingWindows(codes, m));
}

TEST_CASE("submultiplicativity and regular domination") {
  std::mt19937_64 rng(5);
  std::vector<SymbolicSequence> inputs{Gen(GeneratorKind::kChampernowne, 5000),
                                       Gen(GeneratorKind::kSturmian, 5000),
                                       Gen(GeneratorKind::kPrimeIndicator, 5000), Periodic(5, 5000)};
  inputs.push_back(SymbolicSequence::FromIntegers(std::vector<std::int64_t>(5000, 3)));
  for (const auto& s : inputs) {
    const BlockProfile p = Profile(s, 16);
    for (std::size_t m = 1; m <= 16; ++m) {
      CHECK(p.at(m).r <= p.at(m).b);
      for (std::size_t k = 1; m + k <= 16; ++k) {
        CHECK(p.at(m + k).b <= SaturatingMul(p.at(m).b, p.at(k).b));
      }
    }
  }
}

TEST_CASE("concatenation bound on generated sequences") {
  for (auto kind : {GeneratorKind::kChampernowne, GeneratorKind::kSturmian, GeneratorKind::kIidRandom,
                    GeneratorKind::kPrimeIndicator}) {
    const SymbolicSequence s = Gen(kind, 30000);
    for (std::size_t m = 1; m <= 6; ++m) {
      for (std::size_t k = 1; k * m <= 12; ++k) {
        const std::size_t cut = (s.size() / m) * m;
        std::vector<Symbol> prefix(s.symbols().begin(), s.symbols().begin() + cut);
        const SymbolicSequence p(s.shared_alphabet(), prefix);
        const std::uint64_t rhs = SaturatingMul(m, SaturatingPow(CountRegular(p, m), k + 1));
        CHECK(CountSliding(p, k * m) <= rhs);
      }
    }
  }
}

TEST_CASE("shift and recode dominate") {
  const SymbolicSequence s = Gen(GeneratorKind::kChampernowne, 8000);
  for (std::size_t k : {1, 3, 17}) {
    const SymbolicSequence t = Shift(s, k);
    for (std::size_t m = 1; m <= 12; ++m) CHECK(CountSliding(t, m) <= CountSliding(s, m));
  }
  const SymbolicSequence wide = Gen(GeneratorKind::kIidRandom, 8000);
  const SymbolicSequence merged = Recode(Joint({s, wide}).AsSymbolic(), [](const Label& l) -> std::optional<Label> {
    return Label(l.as_string().substr(0, 2));
  });
  const SymbolicSequence joint = Joint({s, wide}).AsSymbolic();
  for (std::size_t m = 1; m <= 12; ++m) CHECK(CountSliding(merged, m) <= CountSliding(joint, m));
}

TEST_CASE("saturating arithmetic") {
  CHECK(SaturatingPow(2, 10) == 1024);
  CHECK(SaturatingPow(8, 100) == UINT64_MAX);
  CHECK(SaturatingMul(UINT64_MAX / 2, 3) == UINT64_MAX);
  CHECK(SaturatingPow(0, 0) == 1);
}

TEST_CASE("profile serialization") {
  const BlockProfile p = Profile(Periodic(3, 40), 5);
  CHECK(ProfileFromJson(ProfileToJson(p)) == p);
  const std::string csv = ProfileToCsv(p);
  CHECK(csv.rfind("m,b,r,pos_b,pos_r\n", 0) == 0);
  CHECK(csv.find("\n3,3,1,38,13\n") != std::string::npos);
}
