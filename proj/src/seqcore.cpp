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

#include "anqie/seqcore.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>

#include "anqie/error.hpp"
#include "anqie/io.hpp"

namespace anqie {

namespace {

std::uint64_t Bits(double v) { return std::bit_cast<std::uint64_t>(v); }

std::size_t Mix(std::size_t h, std::uint64_t v) {
  v *= 0x9e3779b97f4a7c15ULL;
  v ^= v >> 29;
  return h ^ (static_cast<std::size_t>(v) + 0x7f4a7c15 + (h << 6) + (h >> 2));
}

std::optional<double> ParseDouble(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Label Label::FromToken(std::string_view token) {
  std::int64_t iv = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), iv);
  if (ec == std::errc() && ptr == token.data() + token.size() && !token.empty()) {
    return Label(iv);
  }
  if (token.size() >= 5 && token.front() == '(' && token.back() == ')') {
    auto inner = token.substr(1, token.size() - 2);
    auto comma = inner.find(',');
    if (comma != std::string_view::npos) {
      auto re = ParseDouble(inner.substr(0, comma));
      auto im = ParseDouble(inner.substr(comma + 1));
      if (re && im) return Label(Complex(*re, *im));
    }
  }
  return Label(std::string(token));
}

std::optional<Complex> Label::numeric() const {
  if (is_integer()) return Complex(static_cast<double>(as_integer()), 0.0);
  if (is_complex()) return as_complex();
  return std::nullopt;
}

std::string Label::text() const {
  if (is_integer()) return std::to_string(as_integer());
  if (is_string()) return as_string();
  const Complex c = as_complex();
  return "(" + FormatDouble(c.real()) + "," + FormatDouble(c.imag()) + ")";
}

std::size_t Label::hash() const {
  std::size_t h = value_.index();
  if (is_integer()) return Mix(h, static_cast<std::uint64_t>(as_integer()));
  if (is_string()) return Mix(h, std::hash<std::string>{}(as_string()));
  const Complex c = as_complex();
  return Mix(Mix(h, Bits(c.real())), Bits(c.imag()));
}

bool operator==(const Label& a, const Label& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (a.is_complex()) {
    const Complex x = a.as_complex();
    const Complex y = b.as_complex();
    return Bits(x.real()) == Bits(y.real()) && Bits(x.imag()) == Bits(y.imag());
  }
  return a.value_ == b.value_;
}

Alphabet::Alphabet(std::vector<Label> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidArgument("alphabet must not be empty");
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<Symbol>(i)).second) {
      throw InvalidArgument("duplicate alphabet label " + labels_[i].text());
    }
  }
}

std::optional<Symbol> Alphabet::Find(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SymbolicSequence::SymbolicSequence(Alphabet alphabet, std::vector<Symbol> symbols)
    : SymbolicSequence(std::make_shared<const Alphabet>(std::move(alphabet)),
                       std::move(symbols)) {}

SymbolicSequence::SymbolicSequence(std::shared_ptr<const Alphabet> alphabet,
                                   std::vector<Symbol> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  if (!alphabet_) throw InvalidArgument("null alphabet");
  if (symbols_.empty()) throw InvalidArgument("sequence must not be empty");
  const std::size_t k = alphabet_->size();
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= k) {
      throw InvalidArgument("symbol " + std::to_string(symbols_[i]) +
                            " at index " + std::to_string(i) +
                            " outside alphabet of size " + std::to_string(k));
    }
  }
}

SymbolicSequence SymbolicSequence::FromLabels(std::span<const Label> labels) {
  std::vector<Label> alphabet;
  std::unordered_map<Label, Symbol, LabelHash> seen;
  std::vector<Symbol> symbols;
  symbols.reserve(labels.size());
  for (const Label& l : labels) {
    auto [it, inserted] = seen.emplace(l, static_cast<Symbol>(alphabet.size()));
    if (inserted) alphabet.push_back(l);
    symbols.push_back(it->second);
  }
  if (symbols.empty()) throw InvalidArgument("sequence must not be empty");
  return SymbolicSequence(Alphabet(std::move(alphabet)), std::move(symbols));
}

SymbolicSequence SymbolicSequence::FromIntegers(std::span<const std::int64_t> values) {
  std::vector<Label> labels(values.begin(), values.end());
  return FromLabels(labels);
}

std::size_t SymbolicSequence::occurring_symbols() const {
  std::vector<bool> seen(alphabet_->size(), false);
  std::size_t count = 0;
  for (Symbol s : symbols_) {
    if (!seen[s]) {
      seen[s] = true;
      ++count;
    }
  }
  return count;
}

NumericSequence::NumericSequence(std::vector<Complex> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("sequence must not be empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Complex& v = values_[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidArgument("non-finite value at index " + std::to_string(i));
    }
    bound_ = std::max(bound_, std::abs(v));
  }
}

NumericSequence NumericSequence::FromReals(std::span<const double> values) {
  std::vector<Complex> v;
  v.reserve(values.size());
  for (double x : values) v.emplace_back(x, 0.0);
  return NumericSequence(std::move(v));
}

bool NumericSequence::is_real() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Complex& v) { return v.imag() == 0.0; });
}

std::vector<double> NumericSequence::reals() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const Complex& v : values_) out.push_back(v.real());
  return out;
}

bool operator==(const NumericSequence& a, const NumericSequence& b) {
  if (a.values_.size() != b.values_.size()) return false;
  for (std::size_t i = 0; i < a.values_.size(); ++i) {
    if (Bits(a.values_[i].real()) != Bits(b.values_[i].real()) ||
        Bits(a.values_[i].imag()) != Bits(b.values_[i].imag())) {
      return false;
    }
  }
  return true;
}

JointSequence::JointSequence(std::vector<SymbolicSequence> components)
    : components_(std::move(components)) {
  if (components_.size() < 2) {
    throw InvalidArgument("joint needs at least two sequences");
  }
  const std::size_t n = components_.front().size();
  for (const auto& c : components_) {
    if (c.size() != n) {
      throw InvalidArgument("joint: mismatched lengths " + std::to_string(n) +
                            " and " + std::to_string(c.size()));
    }
  }
  struct TupleHash {
    std::size_t operator()(const std::vector<Symbol>& t) const {
      std::size_t h = t.size();
      for (Symbol s : t) h = Mix(h, s);
      return h;
    }
  };
  std::unordered_map<std::vector<Symbol>, Symbol, TupleHash> index;
  codes_.reserve(n);
  std::vector<Symbol> tuple(components_.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < components_.size(); ++c) {
      tuple[c] = components_[c][i];
    }
    auto [it, inserted] = index.emplace(tuple, static_cast<Symbol>(tuples_.size()));
    if (inserted) tuples_.push_back(tuple);
    codes_.push_back(it->second);
  }
}

SymbolicSequence JointSequence::AsSymbolic() const {
  std::vector<Label> labels;
  labels.reserve(tuples_.size());
  for (const auto& t : tuples_) {
    std::string s = "(";
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (c) s += ',';
      s += components_[c].alphabet()[t[c]].text();
    }
    s += ')';
    labels.emplace_back(std::move(s));
  }
  return SymbolicSequence(Alphabet(std::move(labels)), codes_);
}

SymbolicSequence Shift(const SymbolicSequence& seq, std::size_t k) {
  if (k >= seq.size()) {
    throw InvalidArgument("shift " + std::to_string(k) +
                          " must be less than length " +
                          std::to_string(seq.size()));
  }
  auto symbols = seq.symbols();
  return SymbolicSequence(seq.shared_alphabet(),
                          std::vector<Symbol>(symbols.begin() + static_cast<std::ptrdiff_t>(k),
                                              symbols.end()));
}

SymbolicSequence Recode(const SymbolicSequence& seq, const LabelMap& map) {
  const Alphabet& in = seq.alphabet();
  std::vector<Label> out_labels;
  std::unordered_map<Label, Symbol, LabelHash> out_index;
  std::vector<Symbol> translate(in.size());
  for (Symbol s = 0; s < in.size(); ++s) {
    std::optional<Label> image = map(in[s]);
    if (!image) throw DataError("recode: map undefined on label " + in[s].text());
    auto [it, inserted] =
        out_index.emplace(*image, static_cast<Symbol>(out_labels.size()));
    if (inserted) out_labels.push_back(*image);
    translate[s] = it->second;
  }
  std::vector<Symbol> symbols;
  symbols.reserve(seq.size());
  for (Symbol s : seq.symbols()) symbols.push_back(translate[s]);
  return SymbolicSequence(Alphabet(std::move(out_labels)), std::move(symbols));
}

JointSequence Joint(std::vector<SymbolicSequence> seqs) {
  return JointSequence(std::move(seqs));
}

}  // namespace anqie
