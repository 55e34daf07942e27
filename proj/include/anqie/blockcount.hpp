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

// Distinct block counting on finite prefixes.
//
//   sliding m-blocks  B_m: windows (f(i), ..., f(i+m-1)), 0 <= i <= n-m
//   regular m-blocks  R_m: windows starting at 0, m, 2m, ... that fit fully
//                     inside the prefix (floor(n/m) of them)
//
// Blocks are compared as symbol-index tuples. All counts are exact.

#ifndef ANQIE_BLOCKCOUNT_HPP_
#define ANQIE_BLOCKCOUNT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "anqie/seqcore.hpp"
#include "json.hpp"

namespace anqie {

struct BlockRow {
  std::size_t m = 0;
  std::uint64_t b = 0;      // |B_m| over the prefix
  std::uint64_t r = 0;      // |R_m| over the prefix
  std::uint64_t pos_b = 0;  // n - m + 1
  std::uint64_t pos_r = 0;  // floor(n / m)

  friend bool operator==(const BlockRow&, const BlockRow&) = default;
};

struct BlockProfile {
  std::size_t n = 0;
  std::size_t alphabet_size = 0;
  std::vector<BlockRow> rows;  // rows[i].m == i + 1

  const BlockRow& at(std::size_t m) const { return rows.at(m - 1); }
  std::size_t m_max() const { return rows.size(); }

  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
};

// floor(log2 n) + 4, capped at n.
std::size_t DefaultMaxBlockLength(std::size_t n);

// base^exp, saturating at UINT64_MAX.
std::uint64_t SaturatingPow(std::uint64_t base, std::size_t exp);
std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b);

// Reference counters: hash every window. O(n*m) per call. Kept as the oracle
// for the automaton-based counts.
std::uint64_t CountSlidingNaive(std::span<const Symbol> codes, std::size_t m);
std::uint64_t CountRegularNaive(std::span<const Symbol> codes, std::size_t m);

// Sliding counts for m = 1..m_max from one suffix automaton.
std::vector<std::uint64_t> SlidingCounts(std::span<const Symbol> codes,
                                         std::size_t m_max);

// Regular counts for m = 1..m_max. Blocks are identified through
// power-of-two block ranks (two overlapping power-of-two halves pin a block
// exactly), so each m costs O(n/m log) after O(n log m_max) setup.
std::vector<std::uint64_t> RegularCounts(std::span<const Symbol> codes,
                                         std::size_t alphabet_size,
                                         std::size_t m_max);

std::uint64_t CountSliding(const SymbolicSequence& seq, std::size_t m);
std::uint64_t CountRegular(const SymbolicSequence& seq, std::size_t m);

// m_max == 0 selects DefaultMaxBlockLength(n).
BlockProfile Profile(const SymbolicSequence& seq, std::size_t m_max = 0);
BlockProfile Profile(std::span<const Symbol> codes, std::size_t alphabet_size,
                     std::size_t m_max = 0);

nlohmann::json ProfileToJson(const BlockProfile& profile);
BlockProfile ProfileFromJson(const nlohmann::json& j);
std::string ProfileToCsv(const BlockProfile& profile);

}  // namespace anqie

#endif  // ANQIE_BLOCKCOUNT_HPP_
