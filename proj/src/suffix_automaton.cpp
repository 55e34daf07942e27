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

#include "anqie/suffix_automaton.hpp"

#include <algorithm>
#include <limits>

#include "anqie/error.hpp"

namespace anqie {

SuffixAutomaton::SuffixAutomaton(std::span<const Symbol> text)
    : text_size_(text.size()) {
  if (text.size() >= std::numeric_limits<std::uint32_t>::max() / 2) {
    throw InvalidArgument("sequence too long for the suffix automaton");
  }
  states_.reserve(2 * text.size() + 1);
  states_.emplace_back();
  for (Symbol s : text) Extend(s);
}

std::int64_t SuffixAutomaton::Next(std::uint32_t state, Symbol s) const {
  const auto& next = states_[state].next;
  auto it = std::lower_bound(next.begin(), next.end(), s,
                             [](const Edge& e, Symbol v) { return e.first < v; });
  if (it == next.end() || it->first != s) return -1;
  return it->second;
}

void SuffixAutomaton::SetNext(std::uint32_t state, Symbol s, std::uint32_t target) {
  auto& next = states_[state].next;
  auto it = std::lower_bound(next.begin(), next.end(), s,
                             [](const Edge& e, Symbol v) { return e.first < v; });
  if (it != next.end() && it->first == s) {
    it->second = target;
  } else {
    next.insert(it, Edge{s, target});
  }
}

void SuffixAutomaton::Extend(Symbol s) {
  const auto cur = static_cast<std::uint32_t>(states_.size());
  states_.push_back(State{states_[last_].len + 1, -1, {}});
  std::int64_t p = last_;
  while (p != -1 && Next(static_cast<std::uint32_t>(p), s) == -1) {
    SetNext(static_cast<std::uint32_t>(p), s, cur);
    p = states_[p].link;
  }
  if (p == -1) {
    states_[cur].link = 0;
  } else {
    const auto q = static_cast<std::uint32_t>(Next(static_cast<std::uint32_t>(p), s));
    if (states_[p].len + 1 == states_[q].len) {
      states_[cur].link = static_cast<std::int32_t>(q);
    } else {
      const auto clone = static_cast<std::uint32_t>(states_.size());
      State copy = states_[q];
      copy.len = states_[p].len + 1;
      states_.push_back(std::move(copy));
      while (p != -1 && Next(static_cast<std::uint32_t>(p), s) == q) {
        SetNext(static_cast<std::uint32_t>(p), s, clone);
        p = states_[p].link;
      }
      states_[q].link = static_cast<std::int32_t>(clone);
      states_[cur].link = static_cast<std::int32_t>(clone);
    }
  }
  last_ = cur;
}

std::vector<std::uint64_t> SuffixAutomaton::DistinctFactorCounts(
    std::size_t max_len) const {
  std::vector<std::int64_t> diff(max_len + 2, 0);
  for (std::size_t v = 1; v < states_.size(); ++v) {
    const std::size_t lo = states_[states_[v].link].len + 1;
    const std::size_t hi = std::min<std::size_t>(states_[v].len, max_len);
    if (lo > hi) continue;
    diff[lo] += 1;
    diff[hi + 1] -= 1;
  }
  std::vector<std::uint64_t> counts(max_len, 0);
  std::int64_t running = 0;
  for (std::size_t m = 1; m <= max_len; ++m) {
    running += diff[m];
    counts[m - 1] = static_cast<std::uint64_t>(running);
  }
  return counts;
}

bool SuffixAutomaton::Contains(std::span<const Symbol> pattern) const {
  std::uint32_t state = 0;
  for (Symbol s : pattern) {
    const std::int64_t next = Next(state, s);
    if (next < 0) return false;
    state = static_cast<std::uint32_t>(next);
  }
  return true;
}

}  // namespace anqie
