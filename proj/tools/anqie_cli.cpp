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

// anqie command line. Every command prints one JSON document (or a CSV /
// table rendering of it) holding the fully resolved "config" and a
// "timestamp". Passing that document, or any JSON with the same config
// fields, back through --config reproduces the run; flags given on the
// command line win over config values.
//
// Exit codes: 0 success, 1 law failure, 2 usage error, 3 data error.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anqie/anqie.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitLawFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

// Error carrying the process exit code.
struct Exit : std::runtime_error {
  Exit(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

void Check(anqie_status status) {
  if (status == ANQIE_OK) return;
  throw Exit(status == ANQIE_INVALID_ARG ? kExitUsage : kExitData, anqie_last_error());
}

struct SymDeleter {
  void operator()(anqie_symseq* s) const { anqie_symseq_free(s); }
};
struct NumDeleter {
  void operator()(anqie_numseq* s) const { anqie_numseq_free(s); }
};
using SymPtr = std::unique_ptr<anqie_symseq, SymDeleter>;
using NumPtr = std::unique_ptr<anqie_numseq, NumDeleter>;

// Takes ownership of a C string returned by the library.
std::string Take(char* s) {
  std::string out(s ? s : "");
  anqie_string_free(s);
  return out;
}

json TakeJson(char* s) { return json::parse(Take(s)); }

std::string Timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// ---------------------------------------------------------------------------
// Options bound to config keys.

struct Field {
  std::string key;
  CLI::Option* option;
  std::function<void(const json&)> load;
  std::function<json()> save;
};

class Command {
 public:
  Command(CLI::App& app, std::string name, std::string help)
      : name_(std::move(name)), sub_(app.add_subcommand(name_, std::move(help))) {
    sub_->add_option("--config", config_path_,
                     "JSON config or previous output whose config is replayed");
  }

  template <typename T>
  CLI::Option* Bind(const std::string& flag, T& var, const std::string& help) {
    CLI::Option* opt = sub_->add_option(flag, var, help)->capture_default_str();
    std::string key = flag.substr(2);
    for (auto& c : key) c = c == '-' ? '_' : c;
    fields_.push_back({key, opt, [&var](const json& j) { var = j.get<T>(); },
                       [&var] { return json(var); }});
    return opt;
  }

  CLI::App* app() const { return sub_; }
  const std::string& name() const { return name_; }
  bool parsed() const { return sub_->parsed(); }
  bool given(const std::string& key) const {
    for (const auto& f : fields_) {
      if (f.key == key) return f.option->count() > 0;
    }
    return false;
  }

  // Loads config values for options not given on the command line. Returns
  // the loaded document (empty object when no --config).
  json ApplyConfig() {
    if (config_path_.empty()) return json::object();
    std::ifstream in(config_path_);
    if (!in) throw Exit(kExitUsage, "cannot open config '" + config_path_ + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw Exit(kExitUsage, "config '" + config_path_ + "': " + e.what());
    }
    if (doc.contains("config") && doc["config"].is_object()) doc = doc["config"];
    for (auto& f : fields_) {
      if (f.option->count() > 0 || !doc.contains(f.key)) continue;
      try {
        f.load(doc[f.key]);
      } catch (const json::exception& e) {
        throw Exit(kExitUsage, "config field '" + f.key + "': " + e.what());
      }
    }
    return doc;
  }

  json Resolved() const {
    json j = json::object();
    for (const auto& f : fields_) j[f.key] = f.save();
    return j;
  }

 private:
  std::string name_;
  CLI::App* sub_;
  std::string config_path_;
  std::vector<Field> fields_;
};

// ---------------------------------------------------------------------------
// Input handling shared by the analysis commands.

struct InputOptions {
  std::string in;
  std::string format;  // empty: by extension
  std::string spec;    // generator spec JSON, alternative to --in

  void Register(Command& cmd) {
    cmd.Bind("--in", in, "input sequence file");
    cmd.Bind("--format", format, "tokens, csv-complex or raw-bytes (default: by extension)");
    cmd.Bind("--spec", spec, "generator spec JSON used instead of --in");
  }
};

struct Loaded {
  SymPtr sym;
  NumPtr num;
  json source;
};

Loaded LoadInput(InputOptions& opts) {
  if (opts.in.empty() == opts.spec.empty()) {
    throw Exit(kExitUsage, "give exactly one of --in or --spec");
  }
  anqie_symseq* s = nullptr;
  anqie_numseq* n = nullptr;
  Loaded out;
  if (!opts.in.empty()) {
    Check(anqie_load(opts.in.c_str(), opts.format.empty() ? nullptr : opts.format.c_str(), &s, &n));
    out.source = {{"path", opts.in}};
  } else {
    char* resolved = nullptr;
    Check(anqie_generate(opts.spec.c_str(), &s, &n, &resolved));
    const json spec = TakeJson(resolved);
    opts.spec = spec.dump();
    out.source = {{"spec", spec}};
  }
  out.sym.reset(s);
  out.num.reset(n);
  return out;
}

NumPtr RequireNumeric(Loaded& input) {
  if (input.num) return std::move(input.num);
  anqie_numseq* n = nullptr;
  Check(anqie_symseq_to_numseq(input.sym.get(), &n));
  return NumPtr(n);
}

// Symbolic view; numeric inputs are quantized at epsilon.
SymPtr RequireSymbolic(Loaded& input, double epsilon, json& info) {
  if (input.sym) return std::move(input.sym);
  if (!(epsilon > 0)) {
    throw Exit(kExitUsage, "numeric input needs --epsilon > 0 for quantization");
  }
  char* book = nullptr;
  Check(anqie_build_codebook(input.num.get(), epsilon, &book));
  const std::string book_json = Take(book);
  anqie_symseq* s = nullptr;
  Check(anqie_quantize(input.num.get(), book_json.c_str(), &s));
  info["quantized"] = {{"epsilon", epsilon},
                       {"centers", json::parse(book_json)["centers"].size()}};
  return SymPtr(s);
}

void SaveSym(const anqie_symseq* seq, const std::string& path, const std::string& format,
             const json& meta) {
  Check(anqie_save_symseq(seq, path.c_str(), format.empty() ? nullptr : format.c_str(),
                          meta.dump().c_str()));
}

// ---------------------------------------------------------------------------
// Rendering.

std::string Cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string Table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << r[c];
      if (c + 1 < r.size()) out << std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string ProfileTable(const json& profile) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : profile["rows"]) {
    rows.push_back({Cell(r["m"]), Cell(r["b"]), Cell(r["r"]), Cell(r["pos_b"]), Cell(r["pos_r"])});
  }
  return Table({"m", "b", "r", "pos_b", "pos_r"}, rows);
}

std::string ProfileCsv(const json& profile) {
  std::ostringstream out;
  out << "m,b,r,pos_b,pos_r\n";
  for (const auto& r : profile["rows"]) {
    out << r["m"] << ',' << r["b"] << ',' << r["r"] << ',' << r["pos_b"] << ',' << r["pos_r"] << '\n';
  }
  return out.str();
}

std::string KeyValueTable(const json& result) {
  std::vector<std::vector<std::string>> rows;
  for (auto it = result.begin(); it != result.end(); ++it) {
    if (it->is_object() || (it->is_array() && it->size() > 8)) continue;
    rows.push_back({it.key(), Cell(*it)});
  }
  return Table({"field", "value"}, rows);
}

std::string VerdictTable(const json& verdicts) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& v : verdicts) {
    rows.push_back({Cell(v["law"]), Cell(v["subject"]), Cell(v["relation"]), Cell(v["lhs"]),
                    Cell(v["rhs"]), Cell(v["verdict"])});
  }
  return Table({"law", "subject", "relation", "lhs", "rhs", "verdict"}, rows);
}

// ---------------------------------------------------------------------------
// Commands. Each returns the "result" object and may set the exit code.

struct Context {
  Command* cmd;
  json loaded;  // config document, if any
  int exit_code = 0;
};

struct GenOptions {
  std::string kind = "periodic";
  std::size_t n = 0;
  std::vector<std::int64_t> pattern{0, 1};
  double theta = std::numbers::sqrt2 - 1.0;
  std::string mode = "complex";
  std::uint32_t bins = 8;
  double x0 = 0.2907;
  std::uint32_t base = 2;
  std::size_t support = 0;
  std::vector<double> probabilities{0.5, 0.5};
  std::uint64_t seed = 1;
  double jitter = 1e-12;
  std::string out;
  std::string out_format;
};

json RunGen(GenOptions& o, Context& ctx) {
  if (ctx.cmd->given("bins") && !ctx.cmd->given("mode") && !ctx.loaded.contains("mode")) {
    o.mode = "bins";
  }
  if (o.out.empty()) throw Exit(kExitUsage, "gen needs --out");
  const json spec = {{"kind", o.kind},       {"n", o.n},         {"pattern", o.pattern},
                     {"theta", o.theta},     {"mode", o.mode},   {"bins", o.bins},
                     {"x0", o.x0},           {"base", o.base},   {"support", o.support},
                     {"probabilities", o.probabilities},         {"seed", o.seed},
                     {"jitter", o.jitter}};
  anqie_symseq* s = nullptr;
  anqie_numseq* n = nullptr;
  char* resolved = nullptr;
  Check(anqie_generate(spec.dump().c_str(), &s, &n, &resolved));
  SymPtr sym(s);
  NumPtr num(n);
  json result = {{"spec", TakeJson(resolved)}, {"out", o.out}};
  const json meta = {{"command", "gen"}, {"config", ctx.cmd->Resolved()}};
  if (sym) {
    SaveSym(sym.get(), o.out, o.out_format, meta);
    result["alphabet_size"] = anqie_symseq_alphabet_size(sym.get());
  } else {
    if (!o.out_format.empty() && o.out_format != "csv-complex" && o.out_format != "csv") {
      throw Exit(kExitUsage, "numeric sequences are written as csv-complex");
    }
    Check(anqie_save_numseq(num.get(), o.out.c_str(), meta.dump().c_str()));
    char* summary = nullptr;
    Check(anqie_numseq_summary_json(num.get(), &summary));
    result["summary"] = TakeJson(summary);
  }
  return result;
}

struct AnalysisOptions {
  InputOptions input;
  std::size_t m_max = 0;
  double min_coverage = 50.0;
  std::string units = "nats";
  double epsilon = 0.0;
};

json RunBlocks(AnalysisOptions& o, Context&) {
  Loaded in = LoadInput(o.input);
  json result = {{"source", in.source}};
  SymPtr sym = RequireSymbolic(in, o.epsilon, result);
  char* profile = nullptr;
  Check(anqie_profile_json(sym.get(), o.m_max, &profile));
  result["profile"] = TakeJson(profile);
  return result;
}

json RunEntropy(AnalysisOptions& o, Context&) {
  Loaded in = LoadInput(o.input);
  json result = {{"source", in.source}};
  SymPtr sym = RequireSymbolic(in, o.epsilon, result);
  char* report = nullptr;
  Check(anqie_entropy_json(sym.get(), o.m_max, o.min_coverage, o.units.c_str(), &report));
  result["report"] = TakeJson(report);
  return result;
}

json RunReport(AnalysisOptions& o, Context&) {
  Loaded in = LoadInput(o.input);
  json result = {{"source", in.source}};
  if (in.num) {
    char* summary = nullptr;
    Check(anqie_numseq_summary_json(in.num.get(), &summary));
    result["numeric"] = TakeJson(summary);
  }
  SymPtr sym = RequireSymbolic(in, o.epsilon, result);
  char* report = nullptr;
  Check(anqie_entropy_json(sym.get(), o.m_max, o.min_coverage, o.units.c_str(), &report));
  const json r = TakeJson(report);
  result["n"] = anqie_symseq_size(sym.get());
  result["alphabet_size"] = anqie_symseq_alphabet_size(sym.get());
  result["estimate"] = r["estimate"];
  result["units"] = r["units"];
  result["m_star"] = r["m_star"];
  result["saturated"] = r["saturated"];
  result["reliability_ratio"] = r["reliability_ratio"];
  result["regression_slope"] = r["regression_slope"];
  result["warnings"] = r["warnings"];
  result["profile"] = r["profile"];
  return result;
}

struct QuantizeOptions {
  InputOptions input;
  double epsilon = 0.0;
  std::string codebook;
  std::string out;
  std::string codebook_out;
};

json RunQuantize(QuantizeOptions& o, Context& ctx) {
  Loaded in = LoadInput(o.input);
  NumPtr values = RequireNumeric(in);
  std::string book;
  if (!o.codebook.empty()) {
    std::ifstream f(o.codebook);
    if (!f) throw Exit(kExitData, "cannot open codebook '" + o.codebook + "'");
    json j = json::parse(f);
    if (j.contains("result") && j["result"].contains("codebook")) j = j["result"]["codebook"];
    book = j.dump();
  } else {
    if (!(o.epsilon > 0)) throw Exit(kExitUsage, "quantize needs --epsilon > 0 or --codebook");
    char* b = nullptr;
    Check(anqie_build_codebook(values.get(), o.epsilon, &b));
    book = Take(b);
  }
  anqie_symseq* s = nullptr;
  Check(anqie_quantize(values.get(), book.c_str(), &s));
  SymPtr sym(s);
  double sup = 0;
  Check(anqie_sup_distance(values.get(), sym.get(), &sup));
  json result = {{"source", in.source}, {"codebook", json::parse(book)}, {"sup_distance", sup}};
  const json meta = {{"command", "quantize"}, {"config", ctx.cmd->Resolved()}};
  if (!o.out.empty()) SaveSym(sym.get(), o.out, "", meta);
  if (!o.codebook_out.empty()) {
    std::ofstream f(o.codebook_out);
    f << json::parse(book).dump(2) << '\n';
    if (!f) throw Exit(kExitData, "cannot write '" + o.codebook_out + "'");
  }
  return result;
}

struct ImplifyOptions {
  InputOptions input;
  double epsilon = 0.0;
  std::size_t t = 0;
  std::vector<std::size_t> schedule;
  std::size_t stages = 0;
  std::string out;
};

json RunImplify(ImplifyOptions& o, Context& ctx) {
  Loaded in = LoadInput(o.input);
  NumPtr values = RequireNumeric(in);
  anqie_symseq* s = nullptr;
  char* info = nullptr;
  std::size_t t = o.t;
  if (!o.schedule.empty()) {
    if (o.t != 0) throw Exit(kExitUsage, "give either --t or --schedule");
    Check(anqie_implify_staged(values.get(), o.epsilon, o.schedule.data(), o.schedule.size(),
                               o.stages, &s, &info));
  } else {
    if (o.t == 0) throw Exit(kExitUsage, "implify needs --t or --schedule");
    Check(anqie_implify(values.get(), o.epsilon, o.t, &s, &info));
  }
  SymPtr sym(s);
  json result = {{"source", in.source}, {"implification", TakeJson(info)}};
  if (!o.schedule.empty()) t = result["implification"]["stages"].back()["t"].get<std::size_t>();

  // Regular t-block counts of output vs. pointwise quantization.
  const std::string book = result["implification"]["codebook"].dump();
  anqie_symseq* q = nullptr;
  Check(anqie_quantize(values.get(), book.c_str(), &q));
  SymPtr pointwise(q);
  std::uint64_t r_out = 0, r_q = 0;
  Check(anqie_count_regular(sym.get(), t, &r_out));
  Check(anqie_count_regular(pointwise.get(), t, &r_q));
  double sup = 0;
  Check(anqie_sup_distance(values.get(), sym.get(), &sup));
  result["regular_blocks"] = {{"t", t}, {"output", r_out}, {"pointwise", r_q}};
  result["sup_distance"] = sup;
  const json meta = {{"command", "implify"}, {"config", ctx.cmd->Resolved()}};
  if (!o.out.empty()) SaveSym(sym.get(), o.out, "", meta);
  return result;
}

struct SeparateOptions {
  InputOptions input;
  double a = 0.4;
  double b = 0.6;
  std::size_t t = 8;
  std::string out;
};

json RunSeparate(SeparateOptions& o, Context& ctx) {
  Loaded in = LoadInput(o.input);
  NumPtr values = RequireNumeric(in);
  anqie_symseq* s = nullptr;
  char* info = nullptr;
  Check(anqie_separate(values.get(), o.a, o.b, o.t, &s, &info));
  SymPtr sym(s);
  std::uint64_t r_out = 0;
  Check(anqie_count_regular(sym.get(), o.t, &r_out));
  json result = {{"source", in.source}, {"separation", TakeJson(info)}, {"regular_blocks", r_out}};
  const json meta = {{"command", "separate"}, {"config", ctx.cmd->Resolved()}};
  if (!o.out.empty()) SaveSym(sym.get(), o.out, "", meta);
  return result;
}

struct JointOptions {
  std::vector<std::string> in;
  std::string format;
  std::size_t m_max = 8;
  std::string out;
};

json RunJoint(JointOptions& o, Context& ctx) {
  if (o.in.size() < 2) throw Exit(kExitUsage, "joint needs at least two --in files");
  std::vector<SymPtr> seqs;
  std::vector<const anqie_symseq*> raw;
  for (const auto& path : o.in) {
    anqie_symseq* s = nullptr;
    anqie_numseq* n = nullptr;
    Check(anqie_load(path.c_str(), o.format.empty() ? nullptr : o.format.c_str(), &s, &n));
    NumPtr drop(n);
    if (!s) throw Exit(kExitData, "'" + path + "' is numeric; joint needs symbolic inputs");
    seqs.emplace_back(s);
    raw.push_back(s);
  }
  anqie_symseq* j = nullptr;
  Check(anqie_joint(raw.data(), raw.size(), &j));
  SymPtr joint(j);
  json components = json::array();
  for (const auto* s : raw) components.push_back(anqie_symseq_alphabet_size(s));
  json result = {{"inputs", o.in},
                 {"component_alphabet_sizes", components},
                 {"product_alphabet_size", anqie_symseq_alphabet_size(joint.get())}};
  if (raw.size() == 2) {
    char* v = nullptr;
    Check(anqie_law_json("independence", raw[0], raw[1], o.m_max, nullptr, &v));
    result["independence"] = TakeJson(v);
    Check(anqie_law_json("joint", raw[0], raw[1], o.m_max, nullptr, &v));
    result["domination"] = TakeJson(v);
  }
  const json meta = {{"command", "joint"}, {"config", ctx.cmd->Resolved()}};
  if (!o.out.empty()) SaveSym(joint.get(), o.out, "", meta);
  return result;
}

struct LawsOptions {
  std::string battery;  // suite config file
  json suite;           // resolved suite config
};

json RunLaws(LawsOptions& o, Context& ctx) {
  json config;
  if (!o.battery.empty()) {
    std::ifstream f(o.battery);
    if (!f) throw Exit(kExitUsage, "cannot open battery '" + o.battery + "'");
    config = json::parse(f);
  } else if (ctx.loaded.contains("suite")) {
    config = ctx.loaded["suite"];
  } else if (ctx.loaded.contains("inputs") || ctx.loaded.contains("laws")) {
    config = ctx.loaded;  // a bare battery file
  }
  char* out = nullptr;
  int all_hold = 0;
  const std::string text = config.is_null() ? std::string() : config.dump();
  Check(anqie_law_suite(config.is_null() ? nullptr : text.c_str(), &out, &all_hold));
  json result = TakeJson(out);
  o.suite = result["config"];
  result.erase("config");
  std::size_t failed = 0;
  for (const auto& v : result["verdicts"]) {
    if (v["exact"].get<bool>() && !v["holds"].get<bool>()) ++failed;
  }
  result["failed"] = failed;
  result["all_exact_hold"] = all_hold == 1;
  if (!all_hold) ctx.exit_code = kExitLawFailure;
  return result;
}

struct WeylOptions {
  std::string kind = "linear";
  double theta = 0.0;
  std::vector<std::int64_t> l;
  std::size_t count = 10000;
  std::int64_t lattice_bound = 3;
};

json RunWeyl(WeylOptions& o, Context&) {
  char* out = nullptr;
  if (o.l.empty()) {
    Check(anqie_weyl(o.kind.c_str(), o.theta, o.count, nullptr, 0, o.lattice_bound, &out));
  } else {
    const std::size_t dim = o.kind == "quadratic_pair" ? 2 : 1;
    if (o.l.size() % dim != 0) throw Exit(kExitUsage, "--l must list whole lattice vectors");
    Check(anqie_weyl(o.kind.c_str(), o.theta, o.count, o.l.data(), o.l.size() / dim,
                     o.lattice_bound, &out));
  }
  return TakeJson(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empirical entropy of bounded sequences via block counting"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(anqie_version()));
  std::string render = "json";
  std::string report_path;
  app.add_option("--render", render, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--report", report_path, "write the output document here instead of stdout");

  GenOptions gen;
  Command gen_cmd(app, "gen", "generate a sequence");
  gen_cmd.Bind("--kind", gen.kind, "generator kind");
  gen_cmd.Bind("--n", gen.n, "length")->required();
  gen_cmd.Bind("--pattern", gen.pattern, "periodic pattern")->delimiter(',');
  gen_cmd.Bind("--theta", gen.theta, "rotation / phase parameter");
  gen_cmd.Bind("--mode", gen.mode, "quadratic_phase output: complex, phase or bins");
  gen_cmd.Bind("--bins", gen.bins, "quadratic_phase bin count");
  gen_cmd.Bind("--x0", gen.x0, "orbit start");
  gen_cmd.Bind("--base", gen.base, "champernowne base");
  gen_cmd.Bind("--support", gen.support, "delta support point");
  gen_cmd.Bind("--probabilities", gen.probabilities, "iid symbol probabilities")->delimiter(',');
  gen_cmd.Bind("--seed", gen.seed, "seed");
  gen_cmd.Bind("--jitter", gen.jitter, "zigzag pseudo-orbit jitter");
  gen_cmd.Bind("--out", gen.out, "output file");
  gen_cmd.Bind("--out-format", gen.out_format, "tokens or raw-bytes for symbolic output");

  auto analysis = [](Command& cmd, AnalysisOptions& o) {
    o.input.Register(cmd);
    cmd.Bind("--m-max", o.m_max, "largest block length (0: floor(log2 n) + 4)");
    cmd.Bind("--epsilon", o.epsilon, "quantization radius for numeric input");
  };
  AnalysisOptions blocks;
  Command blocks_cmd(app, "blocks", "distinct sliding and regular block counts");
  analysis(blocks_cmd, blocks);

  AnalysisOptions entropy;
  Command entropy_cmd(app, "entropy", "entropy estimate with diagnostics");
  analysis(entropy_cmd, entropy);
  entropy_cmd.Bind("--min-coverage", entropy.min_coverage, "required windows per distinct block");
  entropy_cmd.Bind("--units", entropy.units, "nats or bits");

  QuantizeOptions quant;
  Command quant_cmd(app, "quantize", "epsilon-net quantization");
  quant.input.Register(quant_cmd);
  quant_cmd.Bind("--epsilon", quant.epsilon, "ball radius");
  quant_cmd.Bind("--codebook", quant.codebook, "existing codebook JSON");
  quant_cmd.Bind("--out", quant.out, "quantized sequence file");
  quant_cmd.Bind("--codebook-out", quant.codebook_out, "write the codebook here");

  ImplifyOptions impl;
  Command impl_cmd(app, "implify", "finite-range block recoding within epsilon");
  impl.input.Register(impl_cmd);
  impl_cmd.Bind("--epsilon", impl.epsilon, "ball radius")->required();
  impl_cmd.Bind("--t", impl.t, "block length");
  impl_cmd.Bind("--schedule", impl.schedule, "staged block factors, e.g. 2,2,2")->delimiter(',');
  impl_cmd.Bind("--stages", impl.stages, "stages to run (0: whole schedule)");
  impl_cmd.Bind("--out", impl.out, "output sequence file");

  SeparateOptions sep;
  Command sep_cmd(app, "separate", "0/1 sequence sandwiched between two level sets");
  sep.input.Register(sep_cmd);
  sep_cmd.Bind("--a", sep.a, "values <= a map to 0");
  sep_cmd.Bind("--b", sep.b, "values >= b map to 1");
  sep_cmd.Bind("--t", sep.t, "block length");
  sep_cmd.Bind("--out", sep.out, "output sequence file");

  JointOptions joint;
  Command joint_cmd(app, "joint", "tuple sequence and independence check");
  joint_cmd.Bind("--in", joint.in, "input files (two or more)");
  joint_cmd.Bind("--format", joint.format, "input format (default: by extension)");
  joint_cmd.Bind("--m-max", joint.m_max, "largest block length");
  joint_cmd.Bind("--out", joint.out, "joint sequence file");

  LawsOptions laws;
  Command laws_cmd(app, "laws", "run the law suite");
  laws_cmd.Bind("--battery", laws.battery, "suite config file (default: built-in battery)");

  WeylOptions weyl;
  Command weyl_cmd(app, "weyl", "Weyl exponential sums");
  weyl_cmd.Bind("--kind", weyl.kind, "rational, linear, quadratic or quadratic_pair");
  weyl_cmd.Bind("--theta", weyl.theta, "parameter")->required();
  weyl_cmd.Bind("--l", weyl.l, "lattice vector(s), flattened")->delimiter(',');
  weyl_cmd.Bind("--N", weyl.count, "number of points");
  weyl_cmd.Bind("--lattice-bound", weyl.lattice_bound, "sup norm of the default lattice");

  AnalysisOptions report;
  Command report_cmd(app, "report", "summary of a sequence: size, alphabet, entropy");
  analysis(report_cmd, report);
  report_cmd.Bind("--min-coverage", report.min_coverage, "required windows per distinct block");
  report_cmd.Bind("--units", report.units, "nats or bits");

  // --config may supply required options, so requirements are checked after
  // the config is applied.
  std::vector<Command*> commands{&gen_cmd,  &blocks_cmd, &entropy_cmd, &quant_cmd, &impl_cmd,
                                 &sep_cmd,  &joint_cmd,  &laws_cmd,    &weyl_cmd,  &report_cmd};
  std::map<std::string, std::vector<std::string>> required;
  for (Command* c : commands) {
    for (CLI::Option* opt : c->app()->get_options()) {
      if (opt->get_required()) {
        required[c->name()].push_back(opt->get_name());
        opt->required(false);
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  Command* active = nullptr;
  for (Command* c : commands) {
    if (c->parsed()) active = c;
  }
  try {
    Context ctx{active, active->ApplyConfig()};
    if (ctx.loaded.contains("render") && app.get_option("--render")->count() == 0) {
      render = ctx.loaded["render"].get<std::string>();
    }
    for (const auto& name : required[active->name()]) {
      std::string key = name.substr(2);
      for (auto& c : key) c = c == '-' ? '_' : c;
      if (!active->given(key) && !ctx.loaded.contains(key)) {
        std::cerr << active->app()->help();
        throw Exit(kExitUsage, "missing required option " + name);
      }
    }

    json result;
    const std::string& name = active->name();
    if (name == "gen") result = RunGen(gen, ctx);
    if (name == "blocks") result = RunBlocks(blocks, ctx);
    if (name == "entropy") result = RunEntropy(entropy, ctx);
    if (name == "quantize") result = RunQuantize(quant, ctx);
    if (name == "implify") result = RunImplify(impl, ctx);
    if (name == "separate") result = RunSeparate(sep, ctx);
    if (name == "joint") result = RunJoint(joint, ctx);
    if (name == "laws") result = RunLaws(laws, ctx);
    if (name == "weyl") result = RunWeyl(weyl, ctx);
    if (name == "report") result = RunReport(report, ctx);

    json config = active->Resolved();
    if (name == "laws") config["suite"] = laws.suite;
    config["render"] = render;
    json doc = {{"command", name}, {"config", config}, {"result", result},
                {"timestamp", Timestamp()}};

    std::string text;
    if (render == "json") {
      text = doc.dump(2) + "\n";
    } else if (name == "blocks" || name == "report") {
      const json& profile = name == "blocks" ? result["profile"] : result["profile"];
      text = render == "csv" ? ProfileCsv(profile) : ProfileTable(profile);
      if (name == "report" && render == "table") text = KeyValueTable(result) + "\n" + text;
    } else if (name == "laws" && render == "table") {
      text = VerdictTable(result["verdicts"]);
    } else if (name == "entropy") {
      text = render == "csv" ? ProfileCsv(result["report"]["profile"])
                             : KeyValueTable(result["report"]);
    } else {
      text = KeyValueTable(result);
    }
    if (report_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(report_path);
      f << text;
      if (!f) throw Exit(kExitData, "cannot write '" + report_path + "'");
    }
    return ctx.exit_code;
  } catch (const Exit& e) {
    std::cerr << "anqie " << active->name() << ": " << e.what() << '\n';
    return e.code;
  } catch (const json::exception& e) {
    std::cerr << "anqie " << active->name() << ": " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "anqie " << active->name() << ": " << e.what() << '\n';
    return kExitData;
  }
}
