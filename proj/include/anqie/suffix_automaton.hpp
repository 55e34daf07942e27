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

#ifndef ANQIE_SUFFIX_AUTOMATON_HPP_
#define ANQIE_SUFFIX_AUTOMATON_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "anqie/seqcore.hpp"

namespace anqie {

// Suffix automaton over an integer alphabet. Built once in O(n log sigma),
// read-only afterwards.
//
// Every non-initial state v stands for the factors whose lengths lie in
// (len(link(v)), len(v)], each of which is a distinct factor of the text.
// The number of distinct factors of length m is therefore the number of
// states whose length interval contains m, which a difference array
// produces for every m in one pass over the states.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(std::span<const Symbol> text);

  std::size_t text_size() const { return text_size_; }
  std::size_t num_states() const { return states_.size(); }

  // counts[m-1] = number of distinct factors of length m, m = 1..max_len.
  std::vector<std::uint64_t> DistinctFactorCounts(std::size_t max_len) const;

  // True iff `pattern` occurs as a contiguous factor of the text.
  bool Contains(std::span<const Symbol> pattern) const;

 private:
  using Edge = std::pair<Symbol, std::uint32_t>;
  struct State {
    std::uint32_t len = 0;
    std::int32_t link = -1;
    std::vector<Edge> next;  // sorted by symbol
  };

  std::int64_t Next(std::uint32_t state, Symbol s) const;
  void SetNext(std::uint32_t state, Symbol s, std::uint32_t target);
  void Extend(Symbol s);

  std::vector<State> states_;
  std::uint32_t last_ = 0;
  std::size_t text_size_ = 0;
};

}  // namespace anqie

#endif  // ANQIE_SUFFIX_AUTOMATON_HPP_
