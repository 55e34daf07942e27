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

#include "anqie/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>

#include "anqie/error.hpp"
#include "anqie/parallel.hpp"

namespace anqie {
namespace {

constexpr Symbol kNone = std::numeric_limits<Symbol>::max();

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidArgument("epsilon must be a positive finite number");
  }
}

// Uniform grid with cell side epsilon. A point within distance < k*epsilon
// of a query lies in a cell at most k steps away along each axis.
class Grid {
 public:
  explicit Grid(double cell) : cell_(cell) {}

  using Key = std::pair<std::int64_t, std::int64_t>;

  Key KeyOf(Complex z) const { return {Coord(z.real()), Coord(z.imag())}; }

  void Insert(Complex z, Symbol id) { cells_[KeyOf(z)].push_back(id); }

  // Calls visit(id) for every stored id in cells within `reach` steps.
  template <typename Visit>
  void Near(Complex z, int reach, Visit&& visit) const {
    const Key k = KeyOf(z);
    for (int dx = -reach; dx <= reach; ++dx) {
      for (int dy = -reach; dy <= reach; ++dy) {
        auto it = cells_.find({k.first + dx, k.second + dy});
        if (it == cells_.end()) continue;
        for (Symbol id : it->second) visit(id);
      }
    }
  }

 private:
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      const auto a = static_cast<std::uint64_t>(k.first);
      const auto b = static_cast<std::uint64_t>(k.second);
      return static_cast<std::size_t>(a * 0x9E3779B97F4A7C15ULL ^ (b + 0x632BE59BD9B4E019ULL));
    }
  };

  std::int64_t Coord(double v) const {
    const double c = std::floor(v / cell_);
    if (!(std::fabs(c) < 0x1.0p62)) throw InvalidArgument("epsilon too small for the value range");
    return static_cast<std::int64_t>(c);
  }

  double cell_;
  std::unordered_map<Key, std::vector<Symbol>, KeyHash> cells_;
};

Grid CenterGrid(const Codebook& codebook) {
  Grid grid(codebook.epsilon);
  for (std::size_t i = 0; i < codebook.centers.size(); ++i) {
    grid.Insert(codebook.centers[i], static_cast<Symbol>(i));
  }
  return grid;
}

// Covering centers of every value, ascending, in CSR form.
struct Covers {
  std::vector<std::size_t> offsets;  // size n + 1
  std::vector<Symbol> ids;

  std::span<const Symbol> at(std::size_t i) const {
    return {ids.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
};

Covers CoveringCenters(const NumericSequence& values, const Codebook& codebook) {
  const Grid grid = CenterGrid(codebook);
  const std::size_t n = values.size();
  std::vector<std::vector<Symbol>> per(n);
  ParallelFor(n, [&](std::size_t i) {
    const Complex v = values[i];
    grid.Near(v, 1, [&](Symbol id) {
      if (std::abs(v - codebook.centers[id]) < codebook.epsilon) per[i].push_back(id);
    });
    std::sort(per[i].begin(), per[i].end());
  });
  Covers c;
  c.offsets.resize(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) c.offsets[i + 1] = c.offsets[i] + per[i].size();
  c.ids.reserve(c.offsets[n]);
  for (auto& p : per) c.ids.insert(c.ids.end(), p.begin(), p.end());
  return c;
}

SymbolicSequence OverCenters(const Codebook& codebook, std::vector<Symbol> codes) {
  std::vector<Label> labels;
  labels.reserve(codebook.centers.size());
  for (const Complex& c : codebook.centers) labels.emplace_back(c);
  return SymbolicSequence(Alphabet(std::move(labels)), std::move(codes));
}

struct BlockKeyHash {
  std::size_t operator()(std::span<const Symbol> s) const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (Symbol x : s) h = (h ^ x) * 0x100000001B3ULL;
    return static_cast<std::size_t>(h);
  }
};

struct BlockKeyEq {
  bool operator()(std::span<const Symbol> a, std::span<const Symbol> b) const {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Distinct aligned t-blocks of `codes` in first-occurrence order, and the
// candidate id of each block.
struct DistinctBlocks {
  std::vector<std::vector<Symbol>> blocks;
  std::vector<std::uint32_t> block_of;
};

DistinctBlocks Distinct(std::span<const Symbol> codes, std::size_t t) {
  DistinctBlocks d;
  const std::size_t count = codes.size() / t;
  std::unordered_map<std::span<const Symbol>, std::uint32_t, BlockKeyHash, BlockKeyEq> seen;
  d.block_of.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto block = codes.subspan(k * t, t);
    auto [it, fresh] = seen.try_emplace(block, static_cast<std::uint32_t>(d.blocks.size()));
    if (fresh) d.blocks.emplace_back(block.begin(), block.end());
    d.block_of[k] = it->second;
  }
  return d;
}

// Trie over equal-length candidate tuples; leaves carry the candidate id.
class Trie {
 public:
  explicit Trie(const std::vector<std::vector<Symbol>>& tuples) {
    nodes_.emplace_back();
    for (std::size_t id = 0; id < tuples.size(); ++id) {
      std::uint32_t node = 0;
      for (Symbol s : tuples[id]) {
        auto& kids = nodes_[node].children;
        auto it = std::lower_bound(kids.begin(), kids.end(), std::make_pair(s, 0U),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it != kids.end() && it->first == s) {
          node = it->second;
        } else {
          const auto next = static_cast<std::uint32_t>(nodes_.size());
          kids.insert(it, {s, next});
          nodes_.emplace_back();
          node = next;
        }
      }
      nodes_[node].leaf = static_cast<std::uint32_t>(id);
    }
  }

  // Ids of every tuple whose k-th entry lies in allowed(k) for all k. Sorted.
  template <typename Allowed>
  std::vector<std::uint32_t> Matches(std::size_t depth, Allowed&& allowed) const {
    std::vector<std::uint32_t> out;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0U, 0}};
    while (!stack.empty()) {
      auto [node, k] = stack.back();
      stack.pop_back();
      if (k == depth) {
        out.push_back(nodes_[node].leaf);
        continue;
      }
      const auto& kids = nodes_[node].children;
      for (Symbol s : allowed(k)) {
        auto it = std::lower_bound(kids.begin(), kids.end(), std::make_pair(s, 0U),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it != kids.end() && it->first == s) stack.emplace_back(it->second, k + 1);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Node {
    std::vector<std::pair<Symbol, std::uint32_t>> children;
    std::uint32_t leaf = 0;
  };
  std::vector<Node> nodes_;
};

// Greedy set cover. covered_by[e] lists (ascending) the candidates covering
// element e; every element must have at least one. Returns the chosen
// candidates in ascending order.
std::vector<std::uint32_t> GreedyCover(const std::vector<std::vector<std::uint32_t>>& covered_by,
                                       std::size_t candidate_count) {
  std::vector<std::vector<std::uint32_t>> covers(candidate_count);
  for (std::size_t e = 0; e < covered_by.size(); ++e) {
    for (std::uint32_t c : covered_by[e]) covers[c].push_back(static_cast<std::uint32_t>(e));
  }
  // Max count first, then lowest candidate index.
  using Entry = std::pair<std::size_t, std::uint32_t>;
  auto worse = [](const Entry& a, const Entry& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (std::size_t c = 0; c < candidate_count; ++c) {
    if (!covers[c].empty()) heap.emplace(covers[c].size(), static_cast<std::uint32_t>(c));
  }
  std::vector<bool> done(covered_by.size(), false);
  std::size_t remaining = covered_by.size();
  std::vector<std::uint32_t> chosen;
  while (remaining > 0) {
    if (heap.empty()) throw Error("greedy cover ran out of candidates");
    auto [stored, c] = heap.top();
    heap.pop();
    std::size_t live = 0;
    for (std::uint32_t e : covers[c]) live += done[e] ? 0 : 1;
    if (live == 0) continue;
    if (live < stored) {
      heap.emplace(live, c);
      continue;
    }
    chosen.push_back(c);
    for (std::uint32_t e : covers[c]) {
      if (!done[e]) {
        done[e] = true;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

struct Refined {
  std::vector<Symbol> codes;
  PatternSet patterns;
  std::size_t candidates = 0;
};

// One implification stage: candidates are the distinct aligned t-blocks of
// `source`; they are matched against the raw blocks through `covers`.
// Positions past the last full block keep their source codes.
Refined RefineBlocks(std::span<const Symbol> source, const Covers& covers, std::size_t t) {
  const DistinctBlocks distinct = Distinct(source, t);
  const Trie trie(distinct.blocks);
  const std::size_t count = source.size() / t;

  std::vector<std::vector<std::uint32_t>> covered_by(count);
  ParallelFor(count, [&](std::size_t k) {
    covered_by[k] = trie.Matches(t, [&](std::size_t j) { return covers.at(k * t + j); });
  });

  const auto chosen = GreedyCover(covered_by, distinct.blocks.size());
  std::vector<bool> is_chosen(distinct.blocks.size(), false);
  for (auto c : chosen) is_chosen[c] = true;

  Refined out;
  out.candidates = distinct.blocks.size();
  out.patterns.t = t;
  for (auto c : chosen) out.patterns.patterns.push_back(distinct.blocks[c]);
  out.codes.assign(source.begin(), source.end());
  for (std::size_t k = 0; k < count; ++k) {
    const auto& list = covered_by[k];
    auto it = std::find_if(list.begin(), list.end(), [&](std::uint32_t c) { return is_chosen[c]; });
    const auto& pattern = distinct.blocks[*it];
    std::copy(pattern.begin(), pattern.end(), out.codes.begin() + static_cast<std::ptrdiff_t>(k * t));
  }
  return out;
}

void CheckBlockLength(std::size_t t, std::size_t n) {
  if (t == 0) throw InvalidArgument("block length t must be positive");
  if (t > n) {
    throw InvalidArgument("block length " + std::to_string(t) + " exceeds sequence length " +
                          std::to_string(n));
  }
}

}  // namespace

Codebook BuildCodebook(const NumericSequence& values, double epsilon) {
  CheckEpsilon(epsilon);
  Codebook book;
  book.epsilon = epsilon;
  Grid grid(epsilon);
  for (const Complex& v : values.values()) {
    Symbol best = kNone;
    grid.Near(v, 1, [&](Symbol id) {
      if (id < best && std::abs(v - book.centers[id]) < epsilon) best = id;
    });
    if (best == kNone) {
      grid.Insert(v, static_cast<Symbol>(book.centers.size()));
      book.centers.push_back(v);
    }
  }
  return book;
}

std::vector<Symbol> QuantizeCodes(const NumericSequence& values, const Codebook& codebook) {
  CheckEpsilon(codebook.epsilon);
  const Grid grid = CenterGrid(codebook);
  std::vector<Symbol> codes(values.size(), kNone);
  ParallelFor(values.size(), [&](std::size_t i) {
    const Complex v = values[i];
    Symbol best = kNone;
    grid.Near(v, 1, [&](Symbol id) {
      if (id < best && std::abs(v - codebook.centers[id]) < codebook.epsilon) best = id;
    });
    codes[i] = best;
  });
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (codes[i] == kNone) throw DataError("value " + std::to_string(i) + " uncovered");
  }
  return codes;
}

SymbolicSequence Quantize(const NumericSequence& values, const Codebook& codebook) {
  return OverCenters(codebook, QuantizeCodes(values, codebook));
}

double QuantizationMargin(const NumericSequence& values, const Codebook& codebook) {
  const auto codes = QuantizeCodes(values, codebook);
  const Grid grid = CenterGrid(codebook);
  const double eps = codebook.epsilon;
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Complex v = values[i];
    const Symbol a = codes[i];
    margin = std::min(margin, eps - std::abs(v - codebook.centers[a]));
    // Lower-index centers at distance >= 2 eps cannot beat the first term.
    grid.Near(v, 2, [&](Symbol id) {
      if (id < a) margin = std::min(margin, std::abs(v - codebook.centers[id]) - eps);
    });
  }
  return margin;
}

double SupDistance(const NumericSequence& values, const SymbolicSequence& approx) {
  if (values.size() != approx.size()) throw InvalidArgument("length mismatch");
  std::vector<Complex> table;
  for (const Label& l : approx.alphabet().labels()) {
    const auto z = l.numeric();
    if (!z) throw InvalidArgument("approximation has a non-numeric label '" + l.text() + "'");
    table.push_back(*z);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    worst = std::max(worst, std::abs(values[i] - table[approx[i]]));
  }
  return worst;
}

ImplifyResult Implify(const NumericSequence& values, double epsilon, std::size_t t) {
  CheckEpsilon(epsilon);
  CheckBlockLength(t, values.size());
  Codebook book = BuildCodebook(values, epsilon);
  const auto codes = QuantizeCodes(values, book);
  const Covers covers = CoveringCenters(values, book);
  Refined r = RefineBlocks(codes, covers, t);
  SymbolicSequence seq = OverCenters(book, std::move(r.codes));
  return ImplifyResult{std::move(seq), std::move(book), std::move(r.patterns), r.candidates};
}

StagedResult ImplifyStaged(const NumericSequence& values, double epsilon,
                           std::span<const std::size_t> schedule, std::size_t stages) {
  CheckEpsilon(epsilon);
  if (schedule.empty()) throw InvalidArgument("schedule must not be empty");
  if (stages == 0) stages = schedule.size();
  if (stages > schedule.size()) {
    throw InvalidArgument("stages (" + std::to_string(stages) + ") exceed schedule length (" +
                          std::to_string(schedule.size()) + ")");
  }
  std::size_t t = 1;
  for (std::size_t l = 0; l < stages; ++l) {
    if (schedule[l] < 2) throw InvalidArgument("schedule entries must be >= 2");
    if (t > values.size() / schedule[l]) {
      throw InvalidArgument("schedule product exceeds sequence length " +
                            std::to_string(values.size()));
    }
    t *= schedule[l];
  }

  StagedResult out;
  out.codebook = BuildCodebook(values, epsilon);
  std::vector<Symbol> codes = QuantizeCodes(values, out.codebook);
  const Covers covers = CoveringCenters(values, out.codebook);
  t = 1;
  for (std::size_t l = 0; l < stages; ++l) {
    t *= schedule[l];
    Refined r = RefineBlocks(codes, covers, t);
    codes = r.codes;
    out.stages.push_back(
        ImplifyStage{t, OverCenters(out.codebook, std::move(r.codes)), std::move(r.patterns),
                     r.candidates});
  }
  return out;
}

SeparationResult Separate(const NumericSequence& values, double a, double b, std::size_t t) {
  if (!(a < b)) throw InvalidArgument("separation needs a < b");
  if (!values.is_real()) throw InvalidArgument("separation needs real values");
  CheckBlockLength(t, values.size());
  const std::size_t n = values.size();
  if (t > 63) throw InvalidArgument("separation block length must be <= 63");

  // 0 forced low, 1 forced high, 2 free.
  std::vector<Symbol> mask(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = values[i].real();
    mask[i] = v <= a ? 0 : (v >= b ? 1 : 2);
  }
  const DistinctBlocks distinct = Distinct(mask, t);

  // Candidates are 0/1 words, keyed by their bits (t <= 63).
  std::vector<std::vector<Symbol>> candidates;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  auto word = [](std::span<const Symbol> c) {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < c.size(); ++j) w |= std::uint64_t{c[j]} << j;
    return w;
  };
  for (Symbol fill : {Symbol{0}, Symbol{1}}) {
    for (const auto& block : distinct.blocks) {
      std::vector<Symbol> c(block);
      for (auto& s : c) s = s == 2 ? fill : s;
      if (index.try_emplace(word(c), static_cast<std::uint32_t>(candidates.size())).second) {
        candidates.push_back(std::move(c));
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> covered_by(distinct.blocks.size());
  ParallelFor(distinct.blocks.size(), [&](std::size_t k) {
    const auto& block = distinct.blocks[k];
    std::vector<std::size_t> free;
    std::uint64_t forced = 0;
    for (std::size_t j = 0; j < t; ++j) {
      if (block[j] == 2) free.push_back(j);
      if (block[j] == 1) forced |= std::uint64_t{1} << j;
    }
    auto& out = covered_by[k];
    if ((std::uint64_t{1} << free.size()) <= candidates.size()) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
        std::uint64_t w = forced;
        for (std::size_t f = 0; f < free.size(); ++f) w |= ((bits >> f) & 1U) << free[f];
        auto it = index.find(w);
        if (it != index.end()) out.push_back(it->second);
      }
      std::sort(out.begin(), out.end());
    } else {
      for (std::size_t id = 0; id < candidates.size(); ++id) {
        bool ok = true;
        for (std::size_t j = 0; j < t && ok; ++j) ok = block[j] == 2 || block[j] == candidates[id][j];
        if (ok) out.push_back(static_cast<std::uint32_t>(id));
      }
    }
  });

  const auto chosen = GreedyCover(covered_by, candidates.size());
  std::vector<bool> is_chosen(candidates.size(), false);
  for (auto c : chosen) is_chosen[c] = true;

  std::vector<Symbol> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = mask[i] == 1 ? 1 : 0;
  for (std::size_t k = 0; k < distinct.block_of.size(); ++k) {
    const auto& list = covered_by[distinct.block_of[k]];
    auto it = std::find_if(list.begin(), list.end(), [&](std::uint32_t c) { return is_chosen[c]; });
    const auto& pattern = candidates[*it];
    std::copy(pattern.begin(), pattern.end(), bits.begin() + static_cast<std::ptrdiff_t>(k * t));
  }

  PatternSet patterns{t, {}};
  for (auto c : chosen) patterns.patterns.push_back(candidates[c]);
  return SeparationResult{SymbolicSequence(Alphabet({Label(0), Label(1)}), std::move(bits)),
                          std::move(patterns), distinct.blocks.size()};
}

nlohmann::json CodebookToJson(const Codebook& codebook) {
  nlohmann::json centers = nlohmann::json::array();
  for (const Complex& c : codebook.centers) centers.push_back({{"re", c.real()}, {"im", c.imag()}});
  return {{"epsilon", codebook.epsilon}, {"centers", centers}};
}

Codebook CodebookFromJson(const nlohmann::json& j) {
  try {
    Codebook book;
    book.epsilon = j.at("epsilon").get<double>();
    CheckEpsilon(book.epsilon);
    for (const auto& c : j.at("centers")) {
      book.centers.emplace_back(c.at("re").get<double>(), c.value("im", 0.0));
    }
    return book;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("codebook: ") + e.what());
  }
}

nlohmann::json PatternSetToJson(const PatternSet& patterns) {
  return {{"t", patterns.t}, {"patterns", patterns.patterns}};
}

PatternSet PatternSetFromJson(const nlohmann::json& j) {
  try {
    PatternSet p;
    p.t = j.at("t").get<std::size_t>();
    p.patterns = j.at("patterns").get<std::vector<std::vector<Symbol>>>();
    for (const auto& row : p.patterns) {
      if (row.size() != p.t) throw ParseError("pattern length differs from t");
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("pattern set: ") + e.what());
  }
}

}  // namespace anqie
