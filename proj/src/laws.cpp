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

#include "anqie/laws.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>

#include "anqie/blockcount.hpp"
#include "anqie/entropy.hpp"
#include "anqie/error.hpp"
#include "anqie/parallel.hpp"
#include "anqie/quantize.hpp"
#include "anqie/suffix_automaton.hpp"

namespace anqie {
namespace {

std::size_t Clamp(std::size_t m_max, std::size_t n) { return std::min(m_max, n); }

std::vector<std::uint64_t> Sliding(const SymbolicSequence& s, std::size_t m_max) {
  return SlidingCounts(s.symbols(), Clamp(m_max, s.size()));
}

void CheckMMax(std::size_t m_max) {
  if (m_max == 0) throw InvalidArgument("m_max must be positive");
}

// Fills lhs/rhs/holds from the rows: first failure wins, else last row.
void Summarize(LawVerdict& v) {
  v.holds = true;
  const LawRow* pick = v.rows.empty() ? nullptr : &v.rows.back();
  for (const LawRow& r : v.rows) {
    if (!r.holds) {
      v.holds = false;
      pick = &r;
      break;
    }
  }
  if (pick) {
    v.lhs = pick->lhs;
    v.rhs = pick->rhs;
  }
}

void Finish(LawVerdict& v) {
  Summarize(v);
  if (v.verdict.empty()) v.verdict = v.holds ? "holds" : "VIOLATED";
}

std::u32string Widen(std::span<const Symbol> codes) {
  return std::u32string(codes.begin(), codes.end());
}

Label Combine(const Label& a, const Label& b, PointwiseOp op) {
  if (a.is_integer() && b.is_integer()) {
    const std::int64_t x = a.as_integer();
    const std::int64_t y = b.as_integer();
    std::int64_t r = 0;
    bool overflow = false;
    switch (op) {
      case PointwiseOp::kSum: overflow = __builtin_add_overflow(x, y, &r); break;
      case PointwiseOp::kDifference: overflow = __builtin_sub_overflow(x, y, &r); break;
      case PointwiseOp::kProduct: overflow = __builtin_mul_overflow(x, y, &r); break;
      case PointwiseOp::kMax: r = std::max(x, y); break;
      case PointwiseOp::kMin: r = std::min(x, y); break;
    }
    if (overflow) throw DataError("integer overflow in pointwise " + std::string(PointwiseOpName(op)));
    return Label(r);
  }
  const auto x = a.numeric();
  const auto y = b.numeric();
  if (!x || !y) {
    throw DataError("pointwise " + std::string(PointwiseOpName(op)) + " needs numeric labels");
  }
  switch (op) {
    case PointwiseOp::kSum: return Label(*x + *y);
    case PointwiseOp::kDifference: return Label(*x - *y);
    case PointwiseOp::kProduct: return Label(*x * *y);
    case PointwiseOp::kMax:
    case PointwiseOp::kMin:
      if (x->imag() != 0.0 || y->imag() != 0.0) {
        throw DataError("pointwise " + std::string(PointwiseOpName(op)) + " needs real labels");
      }
      return Label(op == PointwiseOp::kMax ? std::max(x->real(), y->real())
                                           : std::min(x->real(), y->real()));
  }
  throw Error("unreachable");
}

SymbolicSequence Truncate(const SymbolicSequence& s, std::size_t n) {
  if (n == s.size()) return s;
  auto sym = s.symbols();
  return SymbolicSequence(s.shared_alphabet(), std::vector<Symbol>(sym.begin(), sym.begin() + static_cast<std::ptrdiff_t>(n)));
}

}  // namespace

LawVerdict JointDomination(const SymbolicSequence& f, const SymbolicSequence& g,
                           std::size_t m_max) {
  CheckMMax(m_max);
  const JointSequence joint = Joint({f, g});
  const std::size_t m = Clamp(m_max, f.size());
  const auto bj = SlidingCounts(joint.codes(), m);
  const auto bf = Sliding(f, m);
  const auto bg = Sliding(g, m);
  LawVerdict v;
  v.law = "joint";
  v.relation = "<=";
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t rhs = SaturatingMul(bf[i], bg[i]);
    v.rows.push_back({i + 1, 0, bj[i], rhs, bj[i] <= rhs});
  }
  Finish(v);
  return v;
}

PointwiseOp ParsePointwiseOp(std::string_view name) {
  if (name == "sum") return PointwiseOp::kSum;
  if (name == "difference") return PointwiseOp::kDifference;
  if (name == "product") return PointwiseOp::kProduct;
  if (name == "max") return PointwiseOp::kMax;
  if (name == "min") return PointwiseOp::kMin;
  throw InvalidArgument("unknown op '" + std::string(name) +
                        "' (sum, difference, product, max, min)");
}

std::string_view PointwiseOpName(PointwiseOp op) {
  switch (op) {
    case PointwiseOp::kSum: return "sum";
    case PointwiseOp::kDifference: return "difference";
    case PointwiseOp::kProduct: return "product";
    case PointwiseOp::kMax: return "max";
    case PointwiseOp::kMin: return "min";
  }
  return "?";
}

SymbolicSequence ApplyPointwise(const SymbolicSequence& f, const SymbolicSequence& g,
                                PointwiseOp op) {
  const JointSequence joint = Joint({f, g});
  // Tuples are in first-occurrence order, so numbering their distinct
  // images in tuple order gives the images in first-occurrence order too.
  std::vector<Label> labels;
  std::unordered_map<Label, Symbol, LabelHash> index;
  std::vector<Symbol> translate;
  for (const auto& t : joint.tuples()) {
    Label image = Combine(f.alphabet()[t[0]], g.alphabet()[t[1]], op);
    auto [it, fresh] = index.emplace(image, static_cast<Symbol>(labels.size()));
    if (fresh) labels.push_back(image);
    translate.push_back(it->second);
  }
  std::vector<Symbol> codes;
  codes.reserve(joint.size());
  for (Symbol c : joint.codes()) codes.push_back(translate[c]);
  return SymbolicSequence(Alphabet(std::move(labels)), std::move(codes));
}

LawVerdict PointwiseDomination(const SymbolicSequence& f, const SymbolicSequence& g,
                               PointwiseOp op, std::size_t m_max) {
  CheckMMax(m_max);
  const SymbolicSequence h = ApplyPointwise(f, g, op);
  const JointSequence joint = Joint({f, g});
  const std::size_t m = Clamp(m_max, f.size());
  const auto bh = Sliding(h, m);
  const auto bj = SlidingCounts(joint.codes(), m);
  LawVerdict v;
  v.law = "pointwise";
  v.relation = "<=";
  v.extra["op"] = PointwiseOpName(op);
  for (std::size_t i = 0; i < m; ++i) v.rows.push_back({i + 1, 0, bh[i], bj[i], bh[i] <= bj[i]});
  Finish(v);
  return v;
}

LawVerdict ShiftInclusion(const SymbolicSequence& f, std::size_t k, std::size_t m_max) {
  CheckMMax(m_max);
  const SymbolicSequence s = Shift(f, k);
  const std::size_t m = Clamp(m_max, s.size());
  const SuffixAutomaton automaton(f.symbols());
  const auto bf = automaton.DistinctFactorCounts(m);
  const auto bs = Sliding(s, m);
  const std::u32string text = Widen(s.symbols());
  const std::u32string_view view(text);

  LawVerdict v;
  v.law = "shift";
  v.relation = "subset";
  v.extra["k"] = k;
  std::vector<std::size_t> strict;
  std::uint64_t missing_total = 0;
  for (std::size_t len = 1; len <= m; ++len) {
    std::unordered_set<std::u32string_view> seen;
    std::uint64_t missing = 0;
    for (std::size_t i = 0; i + len <= view.size(); ++i) {
      const auto w = view.substr(i, len);
      if (!seen.insert(w).second) continue;
      const std::span<const Symbol> pattern(reinterpret_cast<const Symbol*>(w.data()), w.size());
      if (!automaton.Contains(pattern)) ++missing;
    }
    missing_total += missing;
    const std::size_t i = len - 1;
    const bool ok = missing == 0 && bs[i] <= bf[i] && bf[i] - bs[i] <= k;
    if (bs[i] < bf[i]) strict.push_back(len);
    v.rows.push_back({len, 0, bs[i], bf[i], ok});
  }
  v.extra["missing_blocks"] = missing_total;
  v.extra["strict_at"] = strict;
  Finish(v);
  return v;
}

SymbolicSequence LevelSet(const SymbolicSequence& f, const Label& label) {
  const auto target = f.alphabet().Find(label);
  std::vector<std::int64_t> bits(f.size(), 0);
  if (target) {
    for (std::size_t i = 0; i < f.size(); ++i) bits[i] = f[i] == *target ? 1 : 0;
  }
  return SymbolicSequence::FromIntegers(bits);
}

LawVerdict LevelSetDomination(const SymbolicSequence& f, const Label& label,
                              std::size_t m_max) {
  CheckMMax(m_max);
  const SymbolicSequence chi = LevelSet(f, label);
  const std::size_t m = Clamp(m_max, f.size());
  const auto bc = Sliding(chi, m);
  const auto bf = Sliding(f, m);
  LawVerdict v;
  v.law = "levelset";
  v.relation = "<=";
  v.extra["label"] = label.text();
  for (std::size_t i = 0; i < m; ++i) v.rows.push_back({i + 1, 0, bc[i], bf[i], bc[i] <= bf[i]});
  Finish(v);
  return v;
}

LabelMap ReciprocalShiftMap() {
  return [](const Label& l) -> std::optional<Label> {
    if (l.is_string()) return Label("1/(" + l.as_string() + "+2)");
    const Complex z = *l.numeric() + 2.0;
    if (z == Complex(0.0, 0.0)) return std::nullopt;
    return Label(1.0 / z);
  };
}

LawVerdict RecodeInvariance(const SymbolicSequence& f, const LabelMap& map,
                            std::string_view map_name, std::size_t m_max) {
  CheckMMax(m_max);
  const SymbolicSequence g = Recode(f, map);
  if (g.alphabet().size() != f.alphabet().size()) {
    throw InvalidArgument("recode map '" + std::string(map_name) + "' is not injective on the alphabet");
  }
  const std::size_t m = Clamp(m_max, f.size());
  const BlockProfile pf = Profile(f, m);
  const BlockProfile pg = Profile(g, m);
  LawVerdict v;
  v.law = "recode";
  v.relation = "==";
  v.extra["map"] = map_name;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = pg.rows[i];
    const auto& b = pf.rows[i];
    v.rows.push_back({i + 1, 0, a.b, b.b, a.b == b.b && a.r == b.r});
  }
  const EntropyReport rf = Estimate(pf);
  const EntropyReport rg = Estimate(pg);
  const bool same_report = rf.estimate == rg.estimate && rf.m_star == rg.m_star &&
                           rf.saturated == rg.saturated && rf.h == rg.h &&
                           rf.h_regular == rg.h_regular;
  const bool same_indices = std::ranges::equal(f.symbols(), g.symbols());
  v.extra["report_identical"] = same_report;
  v.extra["indices_identical"] = same_indices;
  Finish(v);
  if (!same_report || !same_indices) {
    v.holds = false;
    v.verdict = "VIOLATED";
  }
  return v;
}

LawVerdict ConcatenationBound(const SymbolicSequence& f, std::size_t m_max) {
  CheckMMax(m_max);
  const std::size_t n = f.size();
  const std::size_t top = Clamp(m_max, n);
  const auto r = RegularCounts(f.symbols(), f.alphabet().size(), top);
  LawVerdict v;
  v.law = "concatenation";
  v.relation = "<=";
  for (std::size_t m = 1; m <= top; ++m) {
    const std::size_t cut = n / m * m;
    const std::size_t k_max = std::min(top, cut) / m;
    if (k_max == 0) continue;
    const auto b = SlidingCounts(f.symbols().first(cut), k_max * m);
    for (std::size_t k = 1; k <= k_max; ++k) {
      const std::uint64_t rhs = SaturatingMul(m, SaturatingPow(r[m - 1], k + 1));
      const std::uint64_t lhs = b[k * m - 1];
      v.rows.push_back({m, k, lhs, rhs, lhs <= rhs});
    }
  }
  Finish(v);
  return v;
}

LawVerdict IndependenceCheck(const SymbolicSequence& f, const SymbolicSequence& g,
                             std::size_t m_max) {
  LawVerdict v = JointDomination(f, g, m_max);
  v.law = "independence";
  v.exact = false;
  v.relation = "==";
  for (auto& row : v.rows) row.holds = row.lhs == row.rhs;
  Summarize(v);
  v.verdict = v.holds ? "consistent with independence" : "not consistent with independence";
  return v;
}

WeylResult WeylSums(const std::vector<Point>& points, const std::vector<LatticeVector>& lattice,
                    std::size_t count) {
  if (count == 0) throw InvalidArgument("N must be positive");
  if (count > points.size()) {
    throw InvalidArgument("N = " + std::to_string(count) + " exceeds the " +
                          std::to_string(points.size()) + " available points");
  }
  if (lattice.empty()) throw InvalidArgument("lattice must not be empty");
  const std::size_t dim = points.front().size();
  for (const auto& l : lattice) {
    if (l.size() != dim) throw InvalidArgument("lattice vector dimension differs from points");
    if (std::ranges::all_of(l, [](std::int64_t c) { return c == 0; })) {
      throw InvalidArgument("lattice contains the zero vector");
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (points[i].size() != dim) throw InvalidArgument("points have mixed dimensions");
  }

  WeylResult out;
  out.moduli.resize(lattice.size());
  ParallelFor(lattice.size(), [&](std::size_t li) {
    const auto& l = lattice[li];
    double re = 0, im = 0, ce = 0, ci = 0;  // Kahan compensation
    for (std::size_t n = 0; n < count; ++n) {
      double phase = 0;
      for (std::size_t d = 0; d < dim; ++d) {
        double term = static_cast<double>(l[d]) * points[n][d];
        phase += term - std::floor(term);
      }
      phase -= std::floor(phase);
      const double angle = 2.0 * std::numbers::pi * phase;
      const double yr = std::cos(angle) - ce;
      const double tr = re + yr;
      ce = (tr - re) - yr;
      re = tr;
      const double yi = std::sin(angle) - ci;
      const double ti = im + yi;
      ci = (ti - im) - yi;
      im = ti;
    }
    out.moduli[li] = std::hypot(re, im) / static_cast<double>(count);
  });
  for (std::size_t i = 0; i < out.moduli.size(); ++i) {
    if (out.moduli[i] > out.max_modulus) {
      out.max_modulus = out.moduli[i];
      out.argmax = i;
    }
  }
  return out;
}

std::vector<LatticeVector> DefaultLattice(std::size_t dim, std::int64_t bound) {
  if (dim == 0) throw InvalidArgument("lattice dimension must be positive");
  if (bound < 1) throw InvalidArgument("lattice bound must be >= 1");
  std::vector<LatticeVector> out;
  LatticeVector v(dim, -bound);
  while (true) {
    if (std::ranges::any_of(v, [](std::int64_t c) { return c != 0; })) out.push_back(v);
    std::size_t d = dim;
    while (d > 0 && v[d - 1] == bound) {
      v[d - 1] = -bound;
      --d;
    }
    if (d == 0) break;
    ++v[d - 1];
  }
  return out;
}

WeylKind ParseWeylKind(std::string_view name) {
  if (name == "rational") return WeylKind::kRational;
  if (name == "linear") return WeylKind::kLinear;
  if (name == "quadratic") return WeylKind::kQuadratic;
  if (name == "quadratic_pair") return WeylKind::kQuadraticPair;
  throw InvalidArgument("unknown weyl kind '" + std::string(name) +
                        "' (rational, linear, quadratic, quadratic_pair)");
}

std::string_view WeylKindName(WeylKind kind) {
  switch (kind) {
    case WeylKind::kRational: return "rational";
    case WeylKind::kLinear: return "linear";
    case WeylKind::kQuadratic: return "quadratic";
    case WeylKind::kQuadraticPair: return "quadratic_pair";
  }
  return "?";
}

std::vector<Point> WeylPoints(WeylKind kind, double theta, std::size_t count) {
  if (count > (std::size_t{1} << 32) - 1) throw InvalidArgument("N too large");
  const ExactRotation rot(theta);
  std::vector<Point> pts(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t n = i;
    switch (kind) {
      case WeylKind::kRational:
      case WeylKind::kLinear: pts[i] = {rot.Frac(n)}; break;
      case WeylKind::kQuadratic: pts[i] = {rot.Frac(n * n)}; break;
      case WeylKind::kQuadraticPair: pts[i] = {rot.Frac(n * n), rot.Frac((n + 1) * (n + 1))}; break;
    }
  }
  return pts;
}

// ---------------------------------------------------------------------------
// Suite

std::vector<std::string> AllLawNames() {
  return {"joint",         "pointwise",  "shift",   "levelset",    "recode",
          "concatenation", "separation", "implify", "independence"};
}

SuiteConfig DefaultSuiteConfig() {
  SuiteConfig c;
  c.laws = AllLawNames();
  auto add = [&](std::string name, GeneratorSpec spec) {
    spec.n = c.n;
    Validate(spec);
    c.inputs.push_back({std::move(name), spec});
  };
  GeneratorSpec s;
  s.kind = GeneratorKind::kPeriodic;
  for (std::int64_t p : {2, 3, 4, 6}) {
    s.pattern.clear();
    for (std::int64_t i = 0; i < p; ++i) s.pattern.push_back(i);
    add("periodic" + std::to_string(p), s);
  }
  s = {};
  s.kind = GeneratorKind::kSturmian;
  add("sturmian", s);
  s = {};
  s.kind = GeneratorKind::kQuadraticPhase;
  s.theta = std::numbers::sqrt2;
  s.mode = PhaseMode::kBins;
  add("quadratic_bins8", s);
  s.mode = PhaseMode::kComplex;
  add("quadratic_phase", s);
  s.mode = PhaseMode::kPhase;
  add("quadratic_real", s);
  s = {};
  s.kind = GeneratorKind::kRotationOrbit;
  add("rotation", s);
  s = {};
  s.kind = GeneratorKind::kDoublingOrbit;
  add("doubling", s);
  s = {};
  s.kind = GeneratorKind::kZigzagOrbit;
  add("zigzag", s);
  s = {};
  s.kind = GeneratorKind::kChampernowne;
  add("champernowne2", s);
  s.base = 3;
  add("champernowne3", s);
  s = {};
  s.kind = GeneratorKind::kPrimeIndicator;
  add("primes", s);
  s = {};
  s.kind = GeneratorKind::kDelta;
  s.support = 5;
  add("delta5", s);
  s = {};
  s.kind = GeneratorKind::kIidRandom;
  add("iid2", s);
  s.probabilities = {0.4, 0.3, 0.2, 0.1};
  s.seed = 7;
  add("iid4", s);
  return c;
}

SuiteConfig SuiteConfigFromJson(const nlohmann::json& j) {
  SuiteConfig c;
  c.laws = AllLawNames();
  try {
    if (j.contains("n")) c.n = j.at("n").get<std::size_t>();
    if (j.contains("m_max")) c.m_max = j.at("m_max").get<std::size_t>();
    if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
    if (j.contains("shifts")) c.shifts = j.at("shifts").get<std::vector<std::size_t>>();
    if (j.contains("ops")) {
      c.ops.clear();
      for (const auto& o : j.at("ops")) c.ops.push_back(ParsePointwiseOp(o.get<std::string>()));
    }
    if (j.contains("separation")) {
      const auto& s = j.at("separation");
      c.separation_a = s.value("a", c.separation_a);
      c.separation_b = s.value("b", c.separation_b);
      c.separation_t = s.value("t", c.separation_t);
    }
    if (j.contains("implify")) {
      const auto& s = j.at("implify");
      c.implify_epsilon = s.value("epsilon", c.implify_epsilon);
      c.implify_t = s.value("t", c.implify_t);
    }
    if (j.contains("laws")) {
      c.laws = j.at("laws").get<std::vector<std::string>>();
      const auto known = AllLawNames();
      for (const auto& l : c.laws) {
        if (std::ranges::find(known, l) == known.end()) {
          throw InvalidArgument("unknown law '" + l + "'");
        }
      }
    }
    if (j.contains("inputs")) {
      for (const auto& in : j.at("inputs")) {
        nlohmann::json spec = in.at("spec");
        if (!spec.contains("n")) spec["n"] = c.n;
        c.inputs.push_back({in.at("name").get<std::string>(), SpecFromJson(spec)});
      }
    } else {
      const SuiteConfig d = DefaultSuiteConfig();
      for (auto in : d.inputs) {
        in.spec.n = c.n;
        c.inputs.push_back(in);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("suite config: ") + e.what());
  }
  if (c.m_max == 0) throw InvalidArgument("m_max must be positive");
  if (c.inputs.empty()) throw InvalidArgument("suite config has no inputs");
  return c;
}

nlohmann::json SuiteConfigToJson(const SuiteConfig& c) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& in : c.inputs) inputs.push_back({{"name", in.name}, {"spec", SpecToJson(in.spec)}});
  nlohmann::json ops = nlohmann::json::array();
  for (auto op : c.ops) ops.push_back(PointwiseOpName(op));
  return {{"n", c.n},
          {"m_max", c.m_max},
          {"epsilon", c.epsilon},
          {"shifts", c.shifts},
          {"ops", ops},
          {"separation", {{"a", c.separation_a}, {"b", c.separation_b}, {"t", c.separation_t}}},
          {"implify", {{"epsilon", c.implify_epsilon}, {"t", c.implify_t}}},
          {"laws", c.laws},
          {"inputs", inputs}};
}

namespace {

struct Prepared {
  std::string name;
  SymbolicSequence symbolic;  // quantized at config epsilon for numeric inputs
  NumericSequence numeric;    // integer labels as reals for symbolic inputs
  bool quantized = false;
};

NumericSequence AsNumeric(const SymbolicSequence& s) {
  std::vector<Complex> table;
  for (const Label& l : s.alphabet().labels()) {
    const auto z = l.numeric();
    if (!z) throw DataError("sequence has non-numeric label '" + l.text() + "'");
    table.push_back(*z);
  }
  std::vector<Complex> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = table[s[i]];
  return NumericSequence(std::move(v));
}

NumericSequence RealPart(const NumericSequence& v) {
  if (v.is_real()) return v;
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Complex(v[i].real(), 0.0);
  return NumericSequence(std::move(out));
}

Prepared Prepare(const SuiteInput& in, double epsilon) {
  AnySequence any = Generate(in.spec);
  if (auto* s = std::get_if<SymbolicSequence>(&any)) {
    return Prepared{in.name, *s, AsNumeric(*s), false};
  }
  const auto& v = std::get<NumericSequence>(any);
  return Prepared{in.name, Quantize(v, BuildCodebook(v, epsilon)), v, true};
}

LawVerdict SeparationLaw(const Prepared& p, double a, double b, std::size_t t) {
  const NumericSequence values = RealPart(p.numeric);
  const SeparationResult sep = Separate(values, a, b, t);
  std::uint64_t violations = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = values[i].real();
    const auto bit = sep.sequence.label_at(i).as_integer();
    if ((x >= b && bit != 1) || (x <= a && bit != 0)) ++violations;
  }
  const std::uint64_t out_blocks = CountRegularNaive(sep.sequence.symbols(), t);
  LawVerdict v;
  v.law = "separation";
  v.relation = "<=";
  v.rows.push_back({t, 0, out_blocks, sep.mask_blocks, out_blocks <= sep.mask_blocks});
  v.extra["violations"] = violations;
  v.extra["a"] = a;
  v.extra["b"] = b;
  if (!p.numeric.is_real()) v.extra["values"] = "real part";
  Finish(v);
  if (violations > 0) {
    v.holds = false;
    v.verdict = "VIOLATED";
  }
  return v;
}

LawVerdict ImplifyLaw(const Prepared& p, double epsilon, std::size_t t) {
  const ImplifyResult r = Implify(p.numeric, epsilon, t);
  const double sup = SupDistance(p.numeric, r.sequence);
  const auto pointwise = QuantizeCodes(p.numeric, r.codebook);
  const std::uint64_t out_blocks = CountRegularNaive(r.sequence.symbols(), t);
  const std::uint64_t q_blocks = CountRegularNaive(pointwise, t);
  LawVerdict v;
  v.law = "implify";
  v.relation = "<=";
  v.rows.push_back({t, 0, out_blocks, q_blocks, out_blocks <= q_blocks && q_blocks <= r.candidates});
  v.extra["sup_distance"] = sup;
  v.extra["epsilon"] = epsilon;
  v.extra["patterns"] = r.patterns.patterns.size();
  v.extra["candidates"] = r.candidates;
  Finish(v);
  if (!(sup < epsilon)) {
    v.holds = false;
    v.verdict = "VIOLATED";
  }
  return v;
}

LawVerdict NotApplicable(std::string law, const std::string& why) {
  LawVerdict v;
  v.law = std::move(law);
  v.exact = false;
  v.relation = "n/a";
  v.verdict = "not applicable: " + why;
  return v;
}

}  // namespace

std::vector<LawVerdict> LawSuite(const SuiteConfig& config) {
  std::vector<std::optional<Prepared>> slots(config.inputs.size());
  ParallelFor(config.inputs.size(),
              [&](std::size_t i) { slots[i] = Prepare(config.inputs[i], config.epsilon); });
  std::vector<Prepared> inputs;
  for (auto& s : slots) inputs.push_back(std::move(*s));

  using Task = std::function<LawVerdict()>;
  std::vector<std::pair<std::string, Task>> tasks;  // subject, body
  const std::size_t m_max = config.m_max;

  auto pair_truncated = [&](std::size_t i, std::size_t j) {
    const std::size_t n = std::min(inputs[i].symbolic.size(), inputs[j].symbolic.size());
    return std::make_pair(Truncate(inputs[i].symbolic, n), Truncate(inputs[j].symbolic, n));
  };
  for (const std::string& law : config.laws) {
    const bool pairwise = law == "joint" || law == "pointwise" || law == "independence";
    if (pairwise) {
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (std::size_t j = i + 1; j < inputs.size(); ++j) {
          const std::string subject = inputs[i].name + " x " + inputs[j].name;
          if (law == "joint") {
            tasks.push_back({subject, [&, i, j] {
                               auto [f, g] = pair_truncated(i, j);
                               return JointDomination(f, g, m_max);
                             }});
          } else if (law == "independence") {
            tasks.push_back({subject, [&, i, j] {
                               auto [f, g] = pair_truncated(i, j);
                               return IndependenceCheck(f, g, m_max);
                             }});
          } else {
            for (PointwiseOp op : config.ops) {
              tasks.push_back({subject + " [" + std::string(PointwiseOpName(op)) + "]",
                               [&, i, j, op] {
                                 auto [f, g] = pair_truncated(i, j);
                                 try {
                                   return PointwiseDomination(f, g, op, m_max);
                                 } catch (const DataError& e) {
                                   return NotApplicable("pointwise", e.what());
                                 }
                               }});
            }
          }
        }
      }
      continue;
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const Prepared& p = inputs[i];
      if (law == "shift") {
        for (std::size_t k : config.shifts) {
          tasks.push_back({p.name + " [k=" + std::to_string(k) + "]", [&, i, k] {
                             if (k >= inputs[i].symbolic.size()) {
                               return NotApplicable("shift", "k exceeds length");
                             }
                             return ShiftInclusion(inputs[i].symbolic, k, m_max);
                           }});
        }
      } else if (law == "levelset") {
        for (const Label& label : p.symbolic.alphabet().labels()) {
          tasks.push_back({p.name + " [" + label.text() + "]", [&, i, label] {
                             return LevelSetDomination(inputs[i].symbolic, label, m_max);
                           }});
        }
      } else if (law == "recode") {
        tasks.push_back({p.name, [&, i] {
                           return RecodeInvariance(inputs[i].symbolic, ReciprocalShiftMap(),
                                                   "reciprocal_shift", m_max);
                         }});
      } else if (law == "concatenation") {
        tasks.push_back({p.name, [&, i] { return ConcatenationBound(inputs[i].symbolic, m_max); }});
      } else if (law == "separation") {
        tasks.push_back({p.name, [&, i] {
                           return SeparationLaw(inputs[i], config.separation_a,
                                                config.separation_b, config.separation_t);
                         }});
      } else if (law == "implify") {
        tasks.push_back({p.name, [&, i] {
                           return ImplifyLaw(inputs[i], config.implify_epsilon, config.implify_t);
                         }});
      }
    }
  }

  std::vector<LawVerdict> out(tasks.size());
  ParallelFor(tasks.size(), [&](std::size_t t) {
    out[t] = tasks[t].second();
    out[t].subject = tasks[t].first;
  });
  return out;
}

bool AllExactHold(const std::vector<LawVerdict>& verdicts) {
  return std::ranges::all_of(verdicts, [](const LawVerdict& v) { return !v.exact || v.holds; });
}

nlohmann::json VerdictToJson(const LawVerdict& v) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : v.rows) {
    nlohmann::json row = {{"m", r.m}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
    if (r.k) row["k"] = r.k;
    rows.push_back(row);
  }
  nlohmann::json j = {{"law", v.law},       {"subject", v.subject}, {"exact", v.exact},
                      {"holds", v.holds},   {"relation", v.relation}, {"lhs", v.lhs},
                      {"rhs", v.rhs},       {"verdict", v.verdict}, {"rows", rows}};
  if (!v.extra.empty()) j["extra"] = v.extra;
  return j;
}

std::string VerdictTable(const std::vector<LawVerdict>& verdicts) {
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"law", "subject", "relation", "lhs", "rhs", "verdict"});
  for (const auto& v : verdicts) {
    cells.push_back({v.law, v.subject, v.relation, std::to_string(v.lhs), std::to_string(v.rhs),
                     v.verdict});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 6; ++c) {
      out << row[c];
      if (c + 1 < 6) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace anqie
