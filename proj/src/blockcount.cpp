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

#include "anqie/blockcount.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>

#include "anqie/error.hpp"
#include "anqie/parallel.hpp"
#include "anqie/suffix_automaton.hpp"

namespace anqie {

namespace {

void CheckBlockLength(std::size_t n, std::size_t m, const char* what) {
  if (m == 0) throw InvalidArgument(std::string(what) + " must be positive");
  if (m > n) {
    throw InvalidArgument(std::string(what) + " " + std::to_string(m) +
                          " exceeds sequence length " + std::to_string(n));
  }
}

std::u32string Widen(std::span<const Symbol> codes) {
  std::u32string s(codes.size(), U'\0');
  for (std::size_t i = 0; i < codes.size(); ++i) s[i] = static_cast<char32_t>(codes[i]);
  return s;
}

// ranks[k][i] identifies the block of length 2^k starting at i; equal ids
// mean equal blocks. Level k has n - 2^k + 1 entries.
class BlockRanks {
 public:
  BlockRanks(std::span<const Symbol> codes, std::size_t alphabet_size,
             std::size_t max_level) {
    levels_.emplace_back(codes.begin(), codes.end());
    classes_.push_back(alphabet_size);
    for (std::size_t k = 0; k < max_level; ++k) AddLevel();
  }

  std::uint64_t Key(std::size_t i, std::size_t m) const {
    const auto k = static_cast<std::size_t>(std::bit_width(m) - 1);
    const std::size_t half = std::size_t{1} << k;
    const auto& level = levels_[k];
    if (half == m) return level[i];
    return (static_cast<std::uint64_t>(level[i]) << 32) | level[i + m - half];
  }

 private:
  void AddLevel() {
    const std::size_t k = levels_.size() - 1;
    const std::size_t half = std::size_t{1} << k;
    const auto& prev = levels_[k];
    if (prev.size() <= half) {
      levels_.emplace_back();
      classes_.push_back(0);
      return;
    }
    const std::size_t count = prev.size() - half;
    const std::size_t classes = classes_[k];
    // Two-pass counting sort of (prev[i], prev[i+half]) pairs.
    std::vector<std::uint32_t> by_second(count), order(count);
    std::vector<std::size_t> bucket(classes + 1, 0);
    for (std::size_t i = 0; i < count; ++i) ++bucket[prev[i + half] + 1];
    for (std::size_t c = 1; c <= classes; ++c) bucket[c] += bucket[c - 1];
    for (std::size_t i = 0; i < count; ++i) {
      by_second[bucket[prev[i + half]]++] = static_cast<std::uint32_t>(i);
    }
    std::fill(bucket.begin(), bucket.end(), 0);
    for (std::size_t i = 0; i < count; ++i) ++bucket[prev[i] + 1];
    for (std::size_t c = 1; c <= classes; ++c) bucket[c] += bucket[c - 1];
    for (std::uint32_t i : by_second) order[bucket[prev[i]]++] = i;

    std::vector<std::uint32_t> next(count);
    std::uint32_t id = 0;
    for (std::size_t j = 0; j < count; ++j) {
      const std::uint32_t i = order[j];
      if (j > 0) {
        const std::uint32_t p = order[j - 1];
        if (prev[p] != prev[i] || prev[p + half] != prev[i + half]) ++id;
      }
      next[i] = id;
    }
    levels_.push_back(std::move(next));
    classes_.push_back(static_cast<std::size_t>(id) + 1);
  }

  std::vector<std::vector<std::uint32_t>> levels_;
  std::vector<std::size_t> classes_;
};

}  // namespace

std::size_t DefaultMaxBlockLength(std::size_t n) {
  if (n == 0) return 0;
  const auto log2n = static_cast<std::size_t>(std::bit_width(n) - 1);
  return std::min(n, log2n + 4);
}

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t SaturatingPow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    out = SaturatingMul(out, base);
    if (out == std::numeric_limits<std::uint64_t>::max() || out == 0) break;
  }
  return out;
}

std::uint64_t CountSlidingNaive(std::span<const Symbol> codes, std::size_t m) {
  CheckBlockLength(codes.size(), m, "block length");
  const std::u32string text = Widen(codes);
  const std::u32string_view view(text);
  std::unordered_set<std::u32string_view> seen;
  seen.reserve(codes.size() - m + 1);
  for (std::size_t i = 0; i + m <= text.size(); ++i) seen.insert(view.substr(i, m));
  return seen.size();
}

std::uint64_t CountRegularNaive(std::span<const Symbol> codes, std::size_t m) {
  CheckBlockLength(codes.size(), m, "block length");
  const std::u32string text = Widen(codes);
  const std::u32string_view view(text);
  std::unordered_set<std::u32string_view> seen;
  for (std::size_t i = 0; i + m <= text.size(); i += m) seen.insert(view.substr(i, m));
  return seen.size();
}

std::vector<std::uint64_t> SlidingCounts(std::span<const Symbol> codes,
                                         std::size_t m_max) {
  CheckBlockLength(codes.size(), m_max, "m_max");
  return SuffixAutomaton(codes).DistinctFactorCounts(m_max);
}

std::vector<std::uint64_t> RegularCounts(std::span<const Symbol> codes,
                                         std::size_t alphabet_size,
                                         std::size_t m_max) {
  CheckBlockLength(codes.size(), m_max, "m_max");
  const auto max_level = static_cast<std::size_t>(std::bit_width(m_max) - 1);
  const BlockRanks ranks(codes, alphabet_size, max_level);
  std::vector<std::uint64_t> out(m_max, 0);
  ParallelFor(m_max, [&](std::size_t idx) {
    const std::size_t m = idx + 1;
    std::vector<std::uint64_t> keys;
    keys.reserve(codes.size() / m);
    for (std::size_t i = 0; i + m <= codes.size(); i += m) keys.push_back(ranks.Key(i, m));
    std::sort(keys.begin(), keys.end());
    out[idx] = static_cast<std::uint64_t>(
        std::unique(keys.begin(), keys.end()) - keys.begin());
  });
  return out;
}

std::uint64_t CountSliding(const SymbolicSequence& seq, std::size_t m) {
  CheckBlockLength(seq.size(), m, "block length");
  return SlidingCounts(seq.symbols(), m).back();
}

std::uint64_t CountRegular(const SymbolicSequence& seq, std::size_t m) {
  CheckBlockLength(seq.size(), m, "block length");
  return CountRegularNaive(seq.symbols(), m);
}

BlockProfile Profile(std::span<const Symbol> codes, std::size_t alphabet_size,
                     std::size_t m_max) {
  const std::size_t n = codes.size();
  if (m_max == 0) m_max = DefaultMaxBlockLength(n);
  CheckBlockLength(n, m_max, "m_max");
  const auto sliding = SlidingCounts(codes, m_max);
  const auto regular = RegularCounts(codes, alphabet_size, m_max);
  BlockProfile profile;
  profile.n = n;
  profile.alphabet_size = alphabet_size;
  profile.rows.reserve(m_max);
  for (std::size_t m = 1; m <= m_max; ++m) {
    profile.rows.push_back(BlockRow{m, sliding[m - 1], regular[m - 1], n - m + 1, n / m});
  }
  return profile;
}

BlockProfile Profile(const SymbolicSequence& seq, std::size_t m_max) {
  return Profile(seq.symbols(), seq.alphabet().size(), m_max);
}

nlohmann::json ProfileToJson(const BlockProfile& profile) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : profile.rows) {
    rows.push_back({{"m", r.m}, {"b", r.b}, {"r", r.r}, {"pos_b", r.pos_b}, {"pos_r", r.pos_r}});
  }
  return {{"n", profile.n}, {"alphabet_size", profile.alphabet_size}, {"rows", rows}};
}

BlockProfile ProfileFromJson(const nlohmann::json& j) {
  BlockProfile p;
  p.n = j.at("n").get<std::size_t>();
  p.alphabet_size = j.value("alphabet_size", std::size_t{0});
  for (const auto& r : j.at("rows")) {
    p.rows.push_back(BlockRow{r.at("m").get<std::size_t>(), r.at("b").get<std::uint64_t>(),
                              r.at("r").get<std::uint64_t>(),
                              r.at("pos_b").get<std::uint64_t>(),
                              r.at("pos_r").get<std::uint64_t>()});
  }
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (p.rows[i].m != i + 1) throw ParseError("profile rows must list m = 1, 2, ...", 0);
  }
  return p;
}

std::string ProfileToCsv(const BlockProfile& profile) {
  std::ostringstream out;
  out << "m,b,r,pos_b,pos_r\n";
  for (const auto& r : profile.rows) {
    out << r.m << ',' << r.b << ',' << r.r << ',' << r.pos_b << ',' << r.pos_r << '\n';
  }
  return out.str();
}

}  // namespace anqie
