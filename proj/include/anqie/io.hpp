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

// Sequence file formats:
//   tokens       one token per line; a sidecar "<path>.meta.json" carries the
//                alphabet listing (index -> label) and, when written by the
//                CLI, the run config that produced the file.
//   csv-complex  header "re,im", then one "re,im" row per value.
//   raw-bytes    every byte is a symbol.

#ifndef ANQIE_IO_HPP_
#define ANQIE_IO_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "anqie/seqcore.hpp"
#include "json.hpp"

namespace anqie {

enum class Format { kTokens, kCsvComplex, kRawBytes };

Format ParseFormat(std::string_view name);
std::string_view FormatName(Format format);

using AnySequence = std::variant<SymbolicSequence, NumericSequence>;

std::string SidecarPath(const std::string& path);

AnySequence LoadSequence(const std::string& path, Format format);
SymbolicSequence LoadSymbolic(const std::string& path, Format format);
NumericSequence LoadNumeric(const std::string& path);

// Stream-level parsers; the file loaders wrap these. `alphabet` pins the
// label order (from a sidecar); without it labels come in first-occurrence
// order.
SymbolicSequence ParseTokens(std::istream& in, const Alphabet* alphabet = nullptr);
NumericSequence ParseCsvComplex(std::istream& in);
SymbolicSequence ParseRawBytes(std::istream& in);

void WriteTokens(std::ostream& out, const SymbolicSequence& seq);
void WriteCsvComplex(std::ostream& out, const NumericSequence& seq);
void WriteRawBytes(std::ostream& out, const SymbolicSequence& seq);

// `meta` is merged into the sidecar (tokens) or written as the sidecar
// (other formats) when non-null.
void SaveSymbolic(const SymbolicSequence& seq, const std::string& path,
                  Format format, const nlohmann::json* meta = nullptr);
void SaveNumeric(const NumericSequence& seq, const std::string& path,
                 const nlohmann::json* meta = nullptr);

nlohmann::json LabelToJson(const Label& label);
Label LabelFromJson(const nlohmann::json& j);
nlohmann::json AlphabetToJson(const Alphabet& alphabet);
Alphabet AlphabetFromJson(const nlohmann::json& j);

// Shortest decimal text that round-trips the double.
std::string FormatDouble(double v);

}  // namespace anqie

#endif  // ANQIE_IO_HPP_
