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

#include "anqie/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "anqie/error.hpp"

namespace anqie {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double ParseField(std::string_view s, std::size_t line, const char* what) {
  s = Trim(s);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " field '" + std::string(s) + "'",
                     line);
  }
  return v;
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

void WriteJsonFile(const std::string& path, const nlohmann::json& j) {
  auto out = OpenOut(path);
  out << j.dump(2) << '\n';
}

}  // namespace

Format ParseFormat(std::string_view name) {
  if (name == "tokens") return Format::kTokens;
  if (name == "csv-complex" || name == "csv") return Format::kCsvComplex;
  if (name == "raw-bytes" || name == "bytes") return Format::kRawBytes;
  throw InvalidArgument("unknown format '" + std::string(name) +
                        "' (tokens, csv-complex, raw-bytes)");
}

std::string_view FormatName(Format format) {
  switch (format) {
    case Format::kTokens: return "tokens";
    case Format::kCsvComplex: return "csv-complex";
    case Format::kRawBytes: return "raw-bytes";
  }
  return "tokens";
}

std::string FormatDouble(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string SidecarPath(const std::string& path) { return path + ".meta.json"; }

nlohmann::json LabelToJson(const Label& label) {
  if (label.is_integer()) return label.as_integer();
  if (label.is_string()) return label.as_string();
  const Complex c = label.as_complex();
  return {{"re", c.real()}, {"im", c.imag()}};
}

Label LabelFromJson(const nlohmann::json& j) {
  if (j.is_number_integer()) return Label(j.get<std::int64_t>());
  if (j.is_string()) return Label(j.get<std::string>());
  if (j.is_number_float()) return Label(Complex(j.get<double>(), 0.0));
  if (j.is_object() && j.contains("re")) {
    return Label(Complex(j.at("re").get<double>(), j.value("im", 0.0)));
  }
  throw ParseError("bad label " + j.dump(), 0);
}

nlohmann::json AlphabetToJson(const Alphabet& alphabet) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    arr.push_back({{"index", i}, {"label", LabelToJson(alphabet[static_cast<Symbol>(i)])}});
  }
  return arr;
}

Alphabet AlphabetFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("alphabet listing must be an array", 0);
  std::vector<Label> labels(j.size(), Label(std::int64_t{0}));
  std::vector<bool> filled(j.size(), false);
  for (const auto& entry : j) {
    const auto idx = entry.at("index").get<std::size_t>();
    if (idx >= labels.size() || filled[idx]) {
      throw ParseError("alphabet listing has bad index " + std::to_string(idx), 0);
    }
    labels[idx] = LabelFromJson(entry.at("label"));
    filled[idx] = true;
  }
  return Alphabet(std::move(labels));
}

SymbolicSequence ParseTokens(std::istream& in, const Alphabet* alphabet) {
  std::unordered_map<std::string, Symbol> by_text;
  if (alphabet) {
    for (std::size_t i = 0; i < alphabet->size(); ++i) {
      by_text.emplace((*alphabet)[static_cast<Symbol>(i)].text(), static_cast<Symbol>(i));
    }
  }
  std::vector<Label> labels;
  std::vector<Symbol> symbols;
  std::string line;
  std::size_t lineno = 0;
  std::size_t pending_blank = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view tok = line;
    if (!tok.empty() && tok.back() == '\r') tok.remove_suffix(1);
    if (tok.empty()) {
      // Blank lines are allowed only at the very end of the file.
      if (pending_blank == 0) pending_blank = lineno;
      continue;
    }
    if (pending_blank != 0) throw ParseError("empty token", pending_blank);
    if (alphabet) {
      auto it = by_text.find(std::string(tok));
      if (it == by_text.end()) {
        throw ParseError("token '" + std::string(tok) + "' not in alphabet listing",
                         lineno);
      }
      symbols.push_back(it->second);
    } else {
      labels.push_back(Label::FromToken(tok));
    }
  }
  if (alphabet) {
    if (symbols.empty()) throw ParseError("empty input", 0);
    return SymbolicSequence(*alphabet, std::move(symbols));
  }
  if (labels.empty()) throw ParseError("empty input", 0);
  return SymbolicSequence::FromLabels(labels);
}

NumericSequence ParseCsvComplex(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<Complex> values;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view row = Trim(line);
    if (row.empty()) continue;
    if (!header) {
      if (row != "re,im") throw ParseError("expected header 're,im'", lineno);
      header = true;
      continue;
    }
    auto comma = row.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("expected 're,im' row", lineno);
    }
    const double re = ParseField(row.substr(0, comma), lineno, "re");
    const double im = ParseField(row.substr(comma + 1), lineno, "im");
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw ParseError("non-finite value", lineno);
    }
    values.emplace_back(re, im);
  }
  if (values.empty()) throw ParseError("empty input", 0);
  return NumericSequence(std::move(values));
}

SymbolicSequence ParseRawBytes(std::istream& in) {
  std::vector<Label> labels;
  std::array<std::optional<Label>, 256> cache{};
  char c = 0;
  while (in.get(c)) {
    const auto b = static_cast<unsigned char>(c);
    if (!cache[b]) cache[b] = Label(std::int64_t{b});
    labels.push_back(*cache[b]);
  }
  if (labels.empty()) throw ParseError("empty input", 0);
  return SymbolicSequence::FromLabels(labels);
}

void WriteTokens(std::ostream& out, const SymbolicSequence& seq) {
  std::vector<std::string> text;
  text.reserve(seq.alphabet().size());
  std::unordered_map<std::string, Symbol> seen;
  for (std::size_t i = 0; i < seq.alphabet().size(); ++i) {
    std::string t = seq.alphabet()[static_cast<Symbol>(i)].text();
    if (t.empty() || t.find('\n') != std::string::npos) {
      throw DataError("label '" + t + "' cannot be written as a token");
    }
    if (!seen.emplace(t, static_cast<Symbol>(i)).second) {
      throw DataError("two labels share the token text '" + t + "'");
    }
    text.push_back(std::move(t));
  }
  for (Symbol s : seq.symbols()) out << text[s] << '\n';
}

void WriteCsvComplex(std::ostream& out, const NumericSequence& seq) {
  out << "re,im\n";
  for (const Complex& v : seq.values()) {
    out << FormatDouble(v.real()) << ',' << FormatDouble(v.imag()) << '\n';
  }
}

void WriteRawBytes(std::ostream& out, const SymbolicSequence& seq) {
  std::vector<char> bytes(seq.alphabet().size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const Label& l = seq.alphabet()[static_cast<Symbol>(i)];
    if (!l.is_integer() || l.as_integer() < 0 || l.as_integer() > 255) {
      throw DataError("raw-bytes needs integer labels in 0..255, got " + l.text());
    }
    bytes[i] = static_cast<char>(static_cast<unsigned char>(l.as_integer()));
  }
  for (Symbol s : seq.symbols()) out.put(bytes[s]);
}

SymbolicSequence LoadSymbolic(const std::string& path, Format format) {
  auto in = OpenIn(path);
  switch (format) {
    case Format::kTokens: {
      const std::string sidecar = SidecarPath(path);
      if (std::filesystem::exists(sidecar)) {
        std::ifstream meta_in(sidecar);
        nlohmann::json meta;
        try {
          meta = nlohmann::json::parse(meta_in);
        } catch (const nlohmann::json::exception& e) {
          throw ParseError(sidecar + ": " + e.what(), 0);
        }
        if (meta.contains("alphabet")) {
          Alphabet alphabet = AlphabetFromJson(meta.at("alphabet"));
          return ParseTokens(in, &alphabet);
        }
      }
      return ParseTokens(in);
    }
    case Format::kRawBytes:
      return ParseRawBytes(in);
    case Format::kCsvComplex:
      break;
  }
  throw InvalidArgument("csv-complex holds numeric data, not symbols");
}

NumericSequence LoadNumeric(const std::string& path) {
  auto in = OpenIn(path);
  return ParseCsvComplex(in);
}

AnySequence LoadSequence(const std::string& path, Format format) {
  if (format == Format::kCsvComplex) return LoadNumeric(path);
  return LoadSymbolic(path, format);
}

void SaveSymbolic(const SymbolicSequence& seq, const std::string& path,
                  Format format, const nlohmann::json* meta) {
  nlohmann::json sidecar = meta ? *meta : nlohmann::json::object();
  switch (format) {
    case Format::kTokens: {
      std::ostringstream body;
      WriteTokens(body, seq);
      auto out = OpenOut(path);
      out << body.str();
      sidecar["alphabet"] = AlphabetToJson(seq.alphabet());
      WriteJsonFile(SidecarPath(path), sidecar);
      return;
    }
    case Format::kRawBytes: {
      std::ostringstream body;
      WriteRawBytes(body, seq);
      auto out = OpenOut(path);
      out << body.str();
      if (meta) WriteJsonFile(SidecarPath(path), sidecar);
      return;
    }
    case Format::kCsvComplex:
      break;
  }
  throw InvalidArgument("csv-complex holds numeric data, not symbols");
}

void SaveNumeric(const NumericSequence& seq, const std::string& path,
                 const nlohmann::json* meta) {
  auto out = OpenOut(path);
  WriteCsvComplex(out, seq);
  if (meta) WriteJsonFile(SidecarPath(path), *meta);
}

}  // namespace anqie
