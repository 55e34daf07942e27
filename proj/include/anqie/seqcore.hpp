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

// Core sequence types. A sequence here is always a finite prefix
// f(0), f(1), ..., f(n-1) of an N-indexed sequence; nothing in the library
// pretends to know what comes after index n-1.

#ifndef ANQIE_SEQCORE_HPP_
#define ANQIE_SEQCORE_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace anqie {

using Symbol = std::uint32_t;
using Complex = std::complex<double>;

// An alphabet entry. Integers and strings compare exactly, complex labels
// compare bitwise (so 0.0 and -0.0 are different labels). Any fuzziness in
// numeric values belongs to the quantizer.
class Label {
 public:
  using Value = std::variant<std::int64_t, std::string, Complex>;

  Label(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Label(int v) : value_(std::int64_t{v}) {}  // NOLINT
  Label(std::string v) : value_(std::move(v)) {}  // NOLINT
  Label(const char* v) : value_(std::string(v)) {}  // NOLINT
  Label(Complex v) : value_(v) {}  // NOLINT
  Label(double v) : value_(Complex(v, 0.0)) {}  // NOLINT

  // Integer if the whole token parses as a decimal int64, complex if it has
  // the "(re,im)" form produced by text(), otherwise a string.
  static Label FromToken(std::string_view token);

  bool is_integer() const { return std::holds_alternative<std::int64_t>(value_); }
  bool is_string() const { return std::holds_alternative<std::string>(value_); }
  bool is_complex() const { return std::holds_alternative<Complex>(value_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
  const std::string& as_string() const { return std::get<std::string>(value_); }
  Complex as_complex() const { return std::get<Complex>(value_); }
  const Value& value() const { return value_; }

  // Value as a complex number; nullopt for string labels.
  std::optional<Complex> numeric() const;

  // Token form used by the tokens file format. Doubles use the shortest
  // representation that round-trips.
  std::string text() const;

  std::size_t hash() const;

  friend bool operator==(const Label& a, const Label& b);
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }

 private:
  Value value_;
};

struct LabelHash {
  std::size_t operator()(const Label& l) const { return l.hash(); }
};

// Ordered list of distinct labels. Order is meaningful: symbol i is labels[i],
// and every "lowest index" tie-break in the library inherits it.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Label> labels);

  std::size_t size() const { return labels_.size(); }
  const Label& operator[](Symbol s) const { return labels_[s]; }
  std::span<const Label> labels() const { return labels_; }
  std::optional<Symbol> Find(const Label& label) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, Symbol, LabelHash> index_;
};

// Finite-range sequence: indices into a shared, immutable alphabet.
class SymbolicSequence {
 public:
  SymbolicSequence(Alphabet alphabet, std::vector<Symbol> symbols);
  SymbolicSequence(std::shared_ptr<const Alphabet> alphabet,
                   std::vector<Symbol> symbols);

  // Alphabet in first-occurrence order.
  static SymbolicSequence FromLabels(std::span<const Label> labels);
  static SymbolicSequence FromIntegers(std::span<const std::int64_t> values);

  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& shared_alphabet() const {
    return alphabet_;
  }
  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const Label& label_at(std::size_t i) const { return (*alphabet_)[symbols_[i]]; }

  // Number of distinct symbols that actually occur.
  std::size_t occurring_symbols() const;

  friend bool operator==(const SymbolicSequence& a, const SymbolicSequence& b) {
    return *a.alphabet_ == *b.alphabet_ && a.symbols_ == b.symbols_;
  }

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<Symbol> symbols_;
};

// Bounded complex-valued prefix. Real sequences have zero imaginary parts.
class NumericSequence {
 public:
  explicit NumericSequence(std::vector<Complex> values);
  static NumericSequence FromReals(std::span<const double> values);

  std::span<const Complex> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  double bound() const { return bound_; }
  bool is_real() const;
  std::vector<double> reals() const;

  friend bool operator==(const NumericSequence& a, const NumericSequence& b);

 private:
  std::vector<Complex> values_;
  double bound_ = 0.0;
};

// Tuple sequence z_n = (f_1(n), ..., f_k(n)). The product alphabet holds
// exactly the observed tuples, first occurrence first.
class JointSequence {
 public:
  explicit JointSequence(std::vector<SymbolicSequence> components);

  const std::vector<SymbolicSequence>& components() const { return components_; }
  const std::vector<std::vector<Symbol>>& tuples() const { return tuples_; }
  std::span<const Symbol> codes() const { return codes_; }
  std::size_t size() const { return codes_.size(); }

  // Same data as a SymbolicSequence whose labels are "(a,b,...)" strings of
  // the component labels.
  SymbolicSequence AsSymbolic() const;

 private:
  std::vector<SymbolicSequence> components_;
  std::vector<std::vector<Symbol>> tuples_;
  std::vector<Symbol> codes_;
};

// Suffix f(k), f(k+1), ... over the same alphabet. Requires k < size.
SymbolicSequence Shift(const SymbolicSequence& seq, std::size_t k);

// Partial map on labels; nullopt means "undefined here".
using LabelMap = std::function<std::optional<Label>(const Label&)>;

// Symbolwise image. The output alphabet lists the distinct images in input
// alphabet order, so an injective map keeps the index array unchanged.
SymbolicSequence Recode(const SymbolicSequence& seq, const LabelMap& map);

// Requires at least two sequences of equal length.
JointSequence Joint(std::vector<SymbolicSequence> seqs);

}  // namespace anqie

#endif  // ANQIE_SEQCORE_HPP_
