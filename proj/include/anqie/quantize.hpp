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

// Finite-range approximation of bounded numeric sequences.
//
// A value v is covered by center c when |v - c| < epsilon (open balls).
// Whenever several centers or patterns qualify, the lowest index wins, and
// indices follow first-occurrence order of the training data. All routines
// are deterministic.
//
// Implification replaces the pointwise quantization by a block recoding:
// the prefix is cut into aligned blocks of length t, every observed block of
// codes is a candidate pattern, a greedy set cover picks few patterns that
// still cover every raw block coordinatewise, and each block is rewritten to
// its lowest-index chosen pattern. The output stays within epsilon of the
// input and never has more distinct aligned t-blocks than the pointwise
// quantization.

#ifndef ANQIE_QUANTIZE_HPP_
#define ANQIE_QUANTIZE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "anqie/seqcore.hpp"
#include "json.hpp"

namespace anqie {

struct Codebook {
  std::vector<Complex> centers;
  double epsilon = 0.0;
};

// Patterns are tuples of length t over codebook indices (or over {0, 1} for
// separation output). Ordered by candidate index.
struct PatternSet {
  std::size_t t = 0;
  std::vector<std::vector<Symbol>> patterns;
};

// First-fit scan: a value with a center strictly within epsilon joins the
// lowest such center, otherwise it becomes a new center. Centers end up
// pairwise at distance >= epsilon.
Codebook BuildCodebook(const NumericSequence& values, double epsilon);

// Lowest-index covering center per value. Throws DataError naming the first
// uncovered index.
std::vector<Symbol> QuantizeCodes(const NumericSequence& values, const Codebook& codebook);

// Same, as a sequence over the codebook centers (all of them, in order).
SymbolicSequence Quantize(const NumericSequence& values, const Codebook& codebook);

// Largest delta such that any sequence within sup distance < delta of
// `values` quantizes to the identical code array under `codebook`:
//   min over n of min(eps - |v_n - c_a|, min_{j < a} |v_n - c_j| - eps)
// with a the assigned center.
double QuantizationMargin(const NumericSequence& values, const Codebook& codebook);

// max_n |values[n] - label(approx[n])|; approx labels must be numeric.
double SupDistance(const NumericSequence& values, const SymbolicSequence& approx);

struct ImplifyResult {
  SymbolicSequence sequence;
  Codebook codebook;
  PatternSet patterns;
  std::size_t candidates = 0;  // distinct observed aligned code blocks
};

ImplifyResult Implify(const NumericSequence& values, double epsilon, std::size_t t);

// Orbit approximation: implification applied to a generated orbit.
inline ImplifyResult ApproximateOrbit(const NumericSequence& orbit, double epsilon,
                                      std::size_t t) {
  return Implify(orbit, epsilon, t);
}

struct ImplifyStage {
  std::size_t t = 0;
  SymbolicSequence sequence;
  PatternSet patterns;
  std::size_t candidates = 0;
};

struct StagedResult {
  Codebook codebook;
  std::vector<ImplifyStage> stages;  // stages.back() is the final output
};

// Stage 1 is Implify with t = schedule[0]. Stage l+1 uses block length
// t_{l+1} = t_l * schedule[l]; its candidates are the observed aligned
// t_{l+1}-blocks of stage l's output, i.e. concatenations of stage-l
// patterns. `stages` == 0 runs the whole schedule.
StagedResult ImplifyStaged(const NumericSequence& values, double epsilon,
                           std::span<const std::size_t> schedule, std::size_t stages = 0);

struct SeparationResult {
  SymbolicSequence sequence;  // over the alphabet [0, 1]
  PatternSet patterns;
  std::size_t mask_blocks = 0;  // distinct aligned t-blocks of the forced mask
};

// Indicator of a set C with {v >= b} within C within {v > a}. Values in
// (a, b) are free; they are filled blockwise so that few distinct aligned
// t-blocks appear. Requires real values and a < b.
SeparationResult Separate(const NumericSequence& values, double a, double b, std::size_t t);

nlohmann::json CodebookToJson(const Codebook& codebook);
Codebook CodebookFromJson(const nlohmann::json& j);
nlohmann::json PatternSetToJson(const PatternSet& patterns);
PatternSet PatternSetFromJson(const nlohmann::json& j);

}  // namespace anqie

#endif  // ANQIE_QUANTIZE_HPP_
