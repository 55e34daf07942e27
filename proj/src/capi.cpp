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

#include "anqie/anqie.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "anqie/blockcount.hpp"
#include "anqie/entropy.hpp"
#include "anqie/error.hpp"
#include "anqie/generators.hpp"
#include "anqie/io.hpp"
#include "anqie/laws.hpp"
#include "anqie/quantize.hpp"
#include "anqie/seqcore.hpp"

struct anqie_symseq {
  anqie::SymbolicSequence seq;
};

struct anqie_numseq {
  anqie::NumericSequence seq;
};

namespace {

using nlohmann::json;

thread_local std::string g_last_error;

anqie_status Fail(anqie_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs body and maps exceptions onto status codes.
template <typename Body>
anqie_status Guard(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return ANQIE_OK;
  } catch (const anqie::InvalidArgument& e) {
    return Fail(ANQIE_INVALID_ARG, e.what());
  } catch (const anqie::ParseError& e) {
    return Fail(ANQIE_PARSE, e.what());
  } catch (const anqie::IoError& e) {
    return Fail(ANQIE_IO, e.what());
  } catch (const anqie::DataError& e) {
    return Fail(ANQIE_DATA, e.what());
  } catch (const json::exception& e) {
    return Fail(ANQIE_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(ANQIE_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(ANQIE_INTERNAL, e.what());
  } catch (...) {
    return Fail(ANQIE_INTERNAL, "unknown error");
  }
}

void Need(const void* p, const char* name) {
  if (p == nullptr) throw anqie::InvalidArgument(std::string(name) + " must not be null");
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void Emit(char** out, const json& j) {
  Need(out, "output");
  *out = Dup(j.dump());
}

json ParseJson(const char* text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw anqie::ParseError(std::string(what) + ": " + e.what());
  }
}

anqie::Format PickFormat(const char* path, const char* format) {
  if (format != nullptr) return anqie::ParseFormat(format);
  const std::string p(path);
  auto ends = [&](const std::string& suffix) {
    return p.size() >= suffix.size() && p.compare(p.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends(".csv")) return anqie::Format::kCsvComplex;
  if (ends(".bin") || ends(".bytes")) return anqie::Format::kRawBytes;
  return anqie::Format::kTokens;
}

void Deliver(anqie::AnySequence any, anqie_symseq** sym_out, anqie_numseq** num_out) {
  Need(sym_out, "sym_out");
  Need(num_out, "num_out");
  *sym_out = nullptr;
  *num_out = nullptr;
  if (auto* s = std::get_if<anqie::SymbolicSequence>(&any)) {
    *sym_out = new anqie_symseq{std::move(*s)};
  } else {
    *num_out = new anqie_numseq{std::move(std::get<anqie::NumericSequence>(any))};
  }
}

json PatternsOf(const anqie::PatternSet& p) { return anqie::PatternSetToJson(p); }

}  // namespace

extern "C" {

const char* anqie_version(void) { return "1.0.0"; }

const char* anqie_last_error(void) { return g_last_error.c_str(); }

void anqie_string_free(char* s) { std::free(s); }

void anqie_symseq_free(anqie_symseq* seq) { delete seq; }

void anqie_numseq_free(anqie_numseq* seq) { delete seq; }

anqie_status anqie_symseq_from_ints(const int64_t* values, size_t n, anqie_symseq** out) {
  return Guard([&] {
    Need(out, "out");
    if (n > 0) Need(values, "values");
    *out = new anqie_symseq{
        anqie::SymbolicSequence::FromIntegers(std::span<const std::int64_t>(values, n))};
  });
}

anqie_status anqie_numseq_from_complex(const double* re, const double* im, size_t n,
                                       anqie_numseq** out) {
  return Guard([&] {
    Need(out, "out");
    if (n > 0) Need(re, "re");
    std::vector<anqie::Complex> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = {re[i], im ? im[i] : 0.0};
    *out = new anqie_numseq{anqie::NumericSequence(std::move(v))};
  });
}

size_t anqie_symseq_size(const anqie_symseq* seq) { return seq ? seq->seq.size() : 0; }

size_t anqie_symseq_alphabet_size(const anqie_symseq* seq) {
  return seq ? seq->seq.alphabet().size() : 0;
}

size_t anqie_numseq_size(const anqie_numseq* seq) { return seq ? seq->seq.size() : 0; }

anqie_status anqie_symseq_symbols(const anqie_symseq* seq, uint32_t* out, size_t cap) {
  return Guard([&] {
    Need(seq, "seq");
    const auto s = seq->seq.symbols();
    const size_t k = std::min(cap, s.size());
    if (k > 0) Need(out, "out");
    std::copy_n(s.begin(), k, out);
  });
}

anqie_status anqie_symseq_alphabet_json(const anqie_symseq* seq, char** out) {
  return Guard([&] {
    Need(seq, "seq");
    Emit(out, anqie::AlphabetToJson(seq->seq.alphabet()));
  });
}

anqie_status anqie_symseq_to_numseq(const anqie_symseq* seq, anqie_numseq** out) {
  return Guard([&] {
    Need(seq, "seq");
    Need(out, "out");
    std::vector<anqie::Complex> table;
    for (const auto& l : seq->seq.alphabet().labels()) {
      const auto z = l.numeric();
      if (!z) throw anqie::DataError("label '" + l.text() + "' is not numeric");
      table.push_back(*z);
    }
    std::vector<anqie::Complex> v(seq->seq.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = table[seq->seq[i]];
    *out = new anqie_numseq{anqie::NumericSequence(std::move(v))};
  });
}

anqie_status anqie_numseq_summary_json(const anqie_numseq* seq, char** out) {
  return Guard([&] {
    Need(seq, "seq");
    Emit(out, {{"n", seq->seq.size()}, {"bound", seq->seq.bound()}, {"real", seq->seq.is_real()}});
  });
}

anqie_status anqie_load(const char* path, const char* format, anqie_symseq** sym_out,
                        anqie_numseq** num_out) {
  return Guard([&] {
    Need(path, "path");
    Deliver(anqie::LoadSequence(path, PickFormat(path, format)), sym_out, num_out);
  });
}

anqie_status anqie_save_symseq(const anqie_symseq* seq, const char* path, const char* format,
                               const char* meta_json) {
  return Guard([&] {
    Need(seq, "seq");
    Need(path, "path");
    const json meta = meta_json ? ParseJson(meta_json, "meta") : json();
    anqie::SaveSymbolic(seq->seq, path, PickFormat(path, format), meta_json ? &meta : nullptr);
  });
}

anqie_status anqie_save_numseq(const anqie_numseq* seq, const char* path, const char* meta_json) {
  return Guard([&] {
    Need(seq, "seq");
    Need(path, "path");
    const json meta = meta_json ? ParseJson(meta_json, "meta") : json();
    anqie::SaveNumeric(seq->seq, path, meta_json ? &meta : nullptr);
  });
}

anqie_status anqie_generate(const char* spec_json, anqie_symseq** sym_out,
                            anqie_numseq** num_out, char** resolved_json) {
  return Guard([&] {
    Need(spec_json, "spec_json");
    const anqie::GeneratorSpec spec = anqie::SpecFromJson(ParseJson(spec_json, "generator spec"));
    Deliver(anqie::Generate(spec), sym_out, num_out);
    if (resolved_json) *resolved_json = Dup(anqie::SpecToJson(spec).dump());
  });
}

anqie_status anqie_shift(const anqie_symseq* seq, size_t k, anqie_symseq** out) {
  return Guard([&] {
    Need(seq, "seq");
    Need(out, "out");
    *out = new anqie_symseq{anqie::Shift(seq->seq, k)};
  });
}

anqie_status anqie_joint(const anqie_symseq* const* seqs, size_t count, anqie_symseq** out) {
  return Guard([&] {
    Need(seqs, "seqs");
    Need(out, "out");
    std::vector<anqie::SymbolicSequence> parts;
    for (size_t i = 0; i < count; ++i) {
      Need(seqs[i], "seqs[i]");
      parts.push_back(seqs[i]->seq);
    }
    *out = new anqie_symseq{anqie::Joint(std::move(parts)).AsSymbolic()};
  });
}

anqie_status anqie_count_sliding(const anqie_symseq* seq, size_t m, uint64_t* out) {
  return Guard([&] {
    Need(seq, "seq");
    Need(out, "out");
    *out = anqie::CountSliding(seq->seq, m);
  });
}

anqie_status anqie_count_regular(const anqie_symseq* seq, size_t m, uint64_t* out) {
  return Guard([&] {
    Need(seq, "seq");
    Need(out, "out");
    *out = anqie::CountRegular(seq->seq, m);
  });
}

anqie_status anqie_profile_json(const anqie_symseq* seq, size_t m_max, char** out) {
  return Guard([&] {
    Need(seq, "seq");
    Emit(out, anqie::ProfileToJson(anqie::Profile(seq->seq, m_max)));
  });
}

anqie_status anqie_profile_csv(const anqie_symseq* seq, size_t m_max, char** out) {
  return Guard([&] {
    Need(seq, "seq");
    Need(out, "out");
    *out = Dup(anqie::ProfileToCsv(anqie::Profile(seq->seq, m_max)));
  });
}

anqie_status anqie_entropy_json(const anqie_symseq* seq, size_t m_max, double min_coverage,
                                const char* units, char** out) {
  return Guard([&] {
    Need(seq, "seq");
    const anqie::Units u = units ? anqie::ParseUnits(units) : anqie::Units::kNats;
    Emit(out, anqie::ReportToJson(anqie::EntropyOf(seq->seq, m_max, min_coverage, u)));
  });
}

anqie_status anqie_zigzag_lower_bound(unsigned m, double* out) {
  return Guard([&] {
    Need(out, "out");
    *out = anqie::ZigzagLowerBound(m);
  });
}

anqie_status anqie_zigzag_map(double x, double* out) {
  return Guard([&] {
    Need(out, "out");
    *out = anqie::ZigzagMap(x);
  });
}

anqie_status anqie_build_codebook(const anqie_numseq* values, double epsilon, char** out) {
  return Guard([&] {
    Need(values, "values");
    Emit(out, anqie::CodebookToJson(anqie::BuildCodebook(values->seq, epsilon)));
  });
}

anqie_status anqie_quantize(const anqie_numseq* values, const char* codebook_json,
                            anqie_symseq** out) {
  return Guard([&] {
    Need(values, "values");
    Need(codebook_json, "codebook_json");
    Need(out, "out");
    const auto book = anqie::CodebookFromJson(ParseJson(codebook_json, "codebook"));
    *out = new anqie_symseq{anqie::Quantize(values->seq, book)};
  });
}

anqie_status anqie_sup_distance(const anqie_numseq* values, const anqie_symseq* approx,
                                double* out) {
  return Guard([&] {
    Need(values, "values");
    Need(approx, "approx");
    Need(out, "out");
    *out = anqie::SupDistance(values->seq, approx->seq);
  });
}

anqie_status anqie_implify(const anqie_numseq* values, double epsilon, size_t t,
                           anqie_symseq** out, char** info_json) {
  return Guard([&] {
    Need(values, "values");
    Need(out, "out");
    anqie::ImplifyResult r = anqie::Implify(values->seq, epsilon, t);
    const double sup = anqie::SupDistance(values->seq, r.sequence);
    if (info_json) {
      *info_json = Dup(json{{"codebook", anqie::CodebookToJson(r.codebook)},
                            {"patterns", PatternsOf(r.patterns)},
                            {"candidates", r.candidates},
                            {"sup_distance", sup}}
                           .dump());
    }
    *out = new anqie_symseq{std::move(r.sequence)};
  });
}

anqie_status anqie_implify_staged(const anqie_numseq* values, double epsilon,
                                  const size_t* schedule, size_t schedule_len, size_t stages,
                                  anqie_symseq** out, char** info_json) {
  return Guard([&] {
    Need(values, "values");
    Need(out, "out");
    if (schedule_len > 0) Need(schedule, "schedule");
    const std::vector<std::size_t> plan(schedule, schedule + schedule_len);
    anqie::StagedResult r = anqie::ImplifyStaged(values->seq, epsilon, plan, stages);
    if (info_json) {
      json st = json::array();
      for (const auto& s : r.stages) {
        st.push_back({{"t", s.t},
                      {"patterns", PatternsOf(s.patterns)},
                      {"candidates", s.candidates},
                      {"sup_distance", anqie::SupDistance(values->seq, s.sequence)}});
      }
      *info_json = Dup(json{{"codebook", anqie::CodebookToJson(r.codebook)}, {"stages", st}}.dump());
    }
    *out = new anqie_symseq{std::move(r.stages.back().sequence)};
  });
}

anqie_status anqie_separate(const anqie_numseq* values, double a, double b, size_t t,
                            anqie_symseq** out, char** info_json) {
  return Guard([&] {
    Need(values, "values");
    Need(out, "out");
    anqie::SeparationResult r = anqie::Separate(values->seq, a, b, t);
    if (info_json) {
      *info_json = Dup(json{{"patterns", PatternsOf(r.patterns)}, {"mask_blocks", r.mask_blocks}}.dump());
    }
    *out = new anqie_symseq{std::move(r.sequence)};
  });
}

anqie_status anqie_law_json(const char* law, const anqie_symseq* f, const anqie_symseq* g,
                            size_t m_max, const char* params_json, char** out) {
  return Guard([&] {
    Need(law, "law");
    Need(f, "f");
    const json params = params_json ? ParseJson(params_json, "params") : json::object();
    const std::string name(law);
    auto need_g = [&] {
      Need(g, "g");
      return g->seq;
    };
    anqie::LawVerdict v;
    if (name == "joint") {
      v = anqie::JointDomination(f->seq, need_g(), m_max);
    } else if (name == "pointwise") {
      v = anqie::PointwiseDomination(f->seq, need_g(),
                                     anqie::ParsePointwiseOp(params.value("op", "sum")), m_max);
    } else if (name == "independence") {
      v = anqie::IndependenceCheck(f->seq, need_g(), m_max);
    } else if (name == "shift") {
      v = anqie::ShiftInclusion(f->seq, params.value("k", std::size_t{1}), m_max);
    } else if (name == "levelset") {
      if (!params.contains("label")) throw anqie::InvalidArgument("levelset needs a label");
      v = anqie::LevelSetDomination(f->seq, anqie::LabelFromJson(params.at("label")), m_max);
    } else if (name == "recode") {
      v = anqie::RecodeInvariance(f->seq, anqie::ReciprocalShiftMap(), "reciprocal_shift", m_max);
    } else if (name == "concatenation") {
      v = anqie::ConcatenationBound(f->seq, m_max);
    } else {
      throw anqie::InvalidArgument("unknown law '" + name + "'");
    }
    Emit(out, anqie::VerdictToJson(v));
  });
}

anqie_status anqie_law_suite(const char* config_json, char** result_json, int* all_hold) {
  return Guard([&] {
    Need(result_json, "result_json");
    const anqie::SuiteConfig config =
        config_json ? anqie::SuiteConfigFromJson(ParseJson(config_json, "suite config"))
                    : anqie::DefaultSuiteConfig();
    const auto verdicts = anqie::LawSuite(config);
    json list = json::array();
    for (const auto& v : verdicts) list.push_back(anqie::VerdictToJson(v));
    *result_json = Dup(json{{"config", anqie::SuiteConfigToJson(config)}, {"verdicts", list}}.dump());
    if (all_hold) *all_hold = anqie::AllExactHold(verdicts) ? 1 : 0;
  });
}

anqie_status anqie_weyl(const char* kind, double theta, size_t count, const int64_t* lattice,
                        size_t lattice_count, int64_t lattice_bound, char** out) {
  return Guard([&] {
    Need(kind, "kind");
    const anqie::WeylKind k = anqie::ParseWeylKind(kind);
    const auto points = anqie::WeylPoints(k, theta, count);
    const std::size_t dim = k == anqie::WeylKind::kQuadraticPair ? 2 : 1;
    std::vector<anqie::LatticeVector> vectors;
    if (lattice) {
      for (size_t i = 0; i < lattice_count; ++i) {
        vectors.emplace_back(lattice + i * dim, lattice + (i + 1) * dim);
      }
    } else {
      vectors = anqie::DefaultLattice(dim, lattice_bound);
    }
    const anqie::WeylResult r = anqie::WeylSums(points, vectors, count);
    json rows = json::array();
    for (size_t i = 0; i < vectors.size(); ++i) {
      rows.push_back({{"l", vectors[i]}, {"modulus", r.moduli[i]}});
    }
    Emit(out, {{"max", r.max_modulus}, {"argmax", vectors[r.argmax]}, {"vectors", rows}});
  });
}

}  // extern "C"
