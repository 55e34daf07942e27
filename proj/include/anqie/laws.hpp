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

// Entropy laws checked as block-count statements on finite prefixes.
//
// Each law below is a theorem of finite combinatorics once stated with
// counts instead of entropies, so a failing exact verdict is a bug in the
// library, never noise. Equality-type checks (independence) are reported
// but do not count as failures.

#ifndef ANQIE_LAWS_HPP_
#define ANQIE_LAWS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "anqie/generators.hpp"
#include "anqie/seqcore.hpp"
#include "json.hpp"

namespace anqie {

struct LawRow {
  std::size_t m = 0;
  std::size_t k = 0;  // concatenation factor; 0 when the law has none
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds = false;
};

struct LawVerdict {
  std::string law;
  std::string subject;
  bool exact = true;  // false for equality surrogates that are only reported
  bool holds = true;
  // First failing row, otherwise the row with the largest m.
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  std::string relation;  // "<=", "==", "subset"
  std::string verdict;
  std::vector<LawRow> rows;
  nlohmann::json extra = nlohmann::json::object();
};

// b_joint(m) <= b_f(m) * b_g(m).
LawVerdict JointDomination(const SymbolicSequence& f, const SymbolicSequence& g,
                           std::size_t m_max);

enum class PointwiseOp { kSum, kDifference, kProduct, kMax, kMin };
PointwiseOp ParsePointwiseOp(std::string_view name);
std::string_view PointwiseOpName(PointwiseOp op);

// Symbolwise op(f(n), g(n)). Integer pairs give integers, other numeric
// pairs give complex values; max/min need real values.
SymbolicSequence ApplyPointwise(const SymbolicSequence& f, const SymbolicSequence& g,
                                PointwiseOp op);

// b_{op(f,g)}(m) <= b_joint(m).
LawVerdict PointwiseDomination(const SymbolicSequence& f, const SymbolicSequence& g,
                               PointwiseOp op, std::size_t m_max);

// Every m-block of the k-shift occurs in f, and b_f(m) - b_shift(m) <= k.
LawVerdict ShiftInclusion(const SymbolicSequence& f, std::size_t k, std::size_t m_max);

// Indicator of {f == label}.
SymbolicSequence LevelSet(const SymbolicSequence& f, const Label& label);

// b_{1[f == label]}(m) <= b_f(m).
LawVerdict LevelSetDomination(const SymbolicSequence& f, const Label& label,
                              std::size_t m_max);

// For an injective map: identical counts for every m and an identical
// entropy report. Throws InvalidArgument if the map is not injective on the
// alphabet.
LawVerdict RecodeInvariance(const SymbolicSequence& f, const LabelMap& map,
                            std::string_view map_name, std::size_t m_max);

// z -> 1 / (z + 2) on numeric labels; injective wherever defined.
LabelMap ReciprocalShiftMap();

// b(k*m) <= m * r(m)^(k+1) on the prefix cut to a multiple of m, for all
// k*m <= m_max.
LawVerdict ConcatenationBound(const SymbolicSequence& f, std::size_t m_max);

// Per-m equality b_joint(m) == b_f(m) * b_g(m). Not an exact law: the verdict
// is "consistent with independence" or "not independent".
LawVerdict IndependenceCheck(const SymbolicSequence& f, const SymbolicSequence& g,
                             std::size_t m_max);

// Weyl sums. points[n] is a vector in R^k.
using Point = std::vector<double>;
using LatticeVector = std::vector<std::int64_t>;

struct WeylResult {
  double max_modulus = 0.0;
  std::size_t argmax = 0;
  std::vector<double> moduli;  // per lattice vector
};

// max over l of |N^-1 sum_{n<N} e^{2 pi i <l, x_n>}|. Phases are reduced mod
// 1 before evaluation and the sum is compensated.
WeylResult WeylSums(const std::vector<Point>& points, const std::vector<LatticeVector>& lattice,
                    std::size_t count);

// All nonzero integer vectors of dimension `dim` with sup norm <= bound, in
// lexicographic order.
std::vector<LatticeVector> DefaultLattice(std::size_t dim, std::int64_t bound = 3);

enum class WeylKind { kRational, kLinear, kQuadratic, kQuadraticPair };
WeylKind ParseWeylKind(std::string_view name);
std::string_view WeylKindName(WeylKind kind);

// rational / linear: frac(n theta); quadratic: frac(n^2 theta);
// quadratic_pair: (frac(n^2 theta), frac((n+1)^2 theta)). Exact fractions of
// the double theta.
std::vector<Point> WeylPoints(WeylKind kind, double theta, std::size_t count);

// Battery configuration for the suite.
struct SuiteInput {
  std::string name;
  GeneratorSpec spec;
};

struct SuiteConfig {
  std::vector<SuiteInput> inputs;
  std::vector<std::string> laws;
  std::size_t n = 20000;  // for inputs whose spec omits n
  std::size_t m_max = 10;
  double epsilon = 0.1;              // quantization of numeric inputs
  std::vector<std::size_t> shifts{1, 3};
  std::vector<PointwiseOp> ops{PointwiseOp::kSum, PointwiseOp::kProduct, PointwiseOp::kMax};
  double separation_a = 0.4;
  double separation_b = 0.6;
  std::size_t separation_t = 8;
  double implify_epsilon = 0.26;
  std::size_t implify_t = 8;
};

// All known law names in their default order.
std::vector<std::string> AllLawNames();

SuiteConfig DefaultSuiteConfig();
SuiteConfig SuiteConfigFromJson(const nlohmann::json& j);
nlohmann::json SuiteConfigToJson(const SuiteConfig& config);

// Runs every selected law on every input (or pair of inputs); output order
// follows the configured law order, then input order.
std::vector<LawVerdict> LawSuite(const SuiteConfig& config);

// True iff no exact verdict failed.
bool AllExactHold(const std::vector<LawVerdict>& verdicts);

nlohmann::json VerdictToJson(const LawVerdict& verdict);
std::string VerdictTable(const std::vector<LawVerdict>& verdicts);

}  // namespace anqie

#endif  // ANQIE_LAWS_HPP_
