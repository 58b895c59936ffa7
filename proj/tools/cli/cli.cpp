#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "addtrip/bounds.hpp"
#include "addtrip/errors.hpp"
#include "addtrip/interval_construction.hpp"
#include "addtrip/params.hpp"
#include "addtrip/residue_set.hpp"
#include "addtrip/spectrum.hpp"
#include "addtrip/triple_count.hpp"
#include "verify.hpp"

namespace addtrip::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, csv };

struct Config {
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t r = 0;
  std::string set_a;
  std::string set_b;
  std::string method = "auto";
  std::string mode = "exhaustive";
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultPairBudget;
  std::int64_t p_min = 0;
  std::int64_t p_max = 0;
  std::string p_list;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  Format format = Format::json;
  std::string output;
  bool witnesses = true;
  bool timing = false;
};

// Raised for malformed flag values found after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_list(std::string_view text, std::string_view flag) {
  std::vector<std::int64_t> out;
  const auto trimmed = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  if (trimmed(text).empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = trimmed(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw UsageError(std::string(flag) + ": cannot parse '" + std::string(piece) + "' as an integer");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

ResidueSet parse_set(std::int64_t p, std::string_view text, std::string_view flag) {
  const auto values = parse_list(text, flag);
  for (const auto v : values) {
    if (v < 0 || v >= p) {
      throw UsageError(std::string(flag) + ": " + std::to_string(v) +
                       " is not a canonical residue mod " + std::to_string(p));
    }
  }
  return ResidueSet::make(p, values);
}

Json elements_json(const ResidueSet& x) {
  Json arr = Json::array();
  for (const auto e : x.elements()) arr.push_back(e);
  return arr;
}

template <typename Range>
std::string joined(const Range& values, char sep = ';') {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

std::string set_field(const ResidueSet& x) { return joined(x.elements(), ' '); }

const char* bool_text(bool b) { return b ? "true" : "false"; }

// Writes either a JSON document or a CSV table.
class Emitter {
 public:
  Emitter(const Config& config, std::ostream& out) : config_(config), out_(out) {}

  bool csv() const { return config_.format == Format::csv; }

  void json(const Json& doc) { out_ << doc.dump(2) << '\n'; }
  void line(const std::string& text) { out_ << text << '\n'; }

 private:
  const Config& config_;
  std::ostream& out_;
};

Json spectrum_json(const SpectrumReport& report, bool timing) {
  Json doc;
  doc["p"] = report.p;
  doc["s"] = report.s;
  doc["t"] = report.t;
  doc["mode"] = std::string(to_string(report.mode));
  doc["f"] = report.f;
  doc["g"] = report.g;
  doc["prime"] = report.prime;
  doc["guaranteed"] = report.prime;
  doc["attained"] = report.attained;
  doc["gaps"] = report.gaps;
  doc["exceptions"] = report.exceptions;
  Json ws = Json::array();
  for (const auto& [value, w] : report.witnesses) {
    ws.push_back(Json{{"r", value}, {"witness_a", elements_json(w.a)}, {"witness_b", elements_json(w.b)}});
  }
  doc["witnesses"] = ws;
  if (timing) doc["elapsed_seconds"] = report.elapsed_seconds;
  return doc;
}

void emit_spectrum(Emitter& em, const SpectrumReport& report, bool timing) {
  if (!em.csv()) {
    em.json(spectrum_json(report, timing));
    return;
  }
  em.line(std::string("p,s,t,mode,f,g,prime,guaranteed,attained,gaps,exceptions") +
          (timing ? ",elapsed_seconds" : ""));
  std::ostringstream row;
  row << report.p << ',' << report.s << ',' << report.t << ',' << to_string(report.mode) << ','
      << report.f << ',' << report.g << ',' << bool_text(report.prime) << ','
      << bool_text(report.prime) << ',' << joined(report.attained) << ',' << joined(report.gaps)
      << ',' << joined(report.exceptions);
  if (timing) row << ',' << report.elapsed_seconds;
  em.line(row.str());
}

int cmd_bounds(const Config& c, Emitter& em) {
  const auto b = compute_bounds(c.p, c.s, c.t);
  if (em.csv()) {
    em.line("p,s,t,f,g,prime,guaranteed");
    em.line(std::to_string(b.p) + ',' + std::to_string(b.s) + ',' + std::to_string(b.t) + ',' +
            std::to_string(b.f) + ',' + std::to_string(b.g) + ',' + bool_text(b.guaranteed) + ',' +
            bool_text(b.guaranteed));
  } else {
    em.json(Json{{"p", b.p}, {"s", b.s}, {"t", b.t}, {"f", b.f}, {"g", b.g},
                 {"prime", b.guaranteed}, {"guaranteed", b.guaranteed}});
  }
  return kOk;
}

int cmd_count(const Config& c, Emitter& em, std::ostream& err) {
  checked_modulus(c.p);
  const auto a = parse_set(c.p, c.set_a, "--set-a");
  const auto b = parse_set(c.p, c.set_b, "--set-b");

  Json doc{{"p", c.p}, {"set_a", elements_json(a)}, {"set_b", elements_json(b)}};
  std::int64_t r = 0;
  int status = kOk;
  Json methods = Json::object();
  if (c.method == "all") {
    const std::int64_t values[] = {count_naive(a, b), count_shift(a, b), count_layers(a, b),
                                   count_convolution(a, b)};
    methods = Json{{"naive", values[0]}, {"shift", values[1]}, {"layers", values[2]},
                   {"convolution", values[3]}};
    r = values[0];
    for (const auto v : values) {
      if (v != r) status = kVerificationFailure;
    }
    if (status != kOk) err << "error: counting methods disagree: " << methods.dump() << '\n';
  } else if (c.method == "auto") {
    r = count(a, b);
  } else if (c.method == "naive") {
    r = count_naive(a, b);
  } else if (c.method == "shift") {
    r = count_shift(a, b);
  } else if (c.method == "layers") {
    r = count_layers(a, b);
  } else {
    r = count_convolution(a, b);
  }
  const std::string method_used =
      c.method == "auto" ? (a.modulus() <= kShiftMethodMaxModulus ? "shift" : "convolution") : c.method;

  if (em.csv()) {
    em.line("p,r,method,set_a,set_b");
    em.line(std::to_string(c.p) + ',' + std::to_string(r) + ',' + method_used + ',' + set_field(a) +
            ',' + set_field(b));
  } else {
    doc["r"] = r;
    doc["method"] = method_used;
    if (c.method == "all") doc["methods"] = methods;
    em.json(doc);
  }
  return status;
}

int cmd_construct(const Config& c, Emitter& em) {
  const auto w = construct(c.p, c.s, c.t, c.r);
  // Independent re-count before anything is printed.
  if (count_naive(w.a, w.b) != c.r) {
    throw InvariantViolation("constructed witness does not re-count to r");
  }
  if (em.csv()) {
    em.line("p,s,t,r,achieved_r,witness_a,witness_b");
    em.line(std::to_string(w.p) + ',' + std::to_string(w.s) + ',' + std::to_string(w.t) + ',' +
            std::to_string(w.target_r) + ',' + std::to_string(w.achieved_r) + ',' +
            set_field(w.a) + ',' + set_field(w.b));
    return kOk;
  }
  Json selection = Json::object();
  for (std::size_t v = 0; v < w.selection.size(); ++v) {
    if (w.selection[v] != 0) selection[std::to_string(v)] = w.selection[v];
  }
  const auto [r1, r2] = extreme_sums(c.p, c.s, c.t);
  em.json(Json{{"p", w.p}, {"s", w.s}, {"t", w.t}, {"r", w.target_r}, {"f", r1}, {"g", r2},
               {"prime", is_prime(w.p)}, {"witness_a", elements_json(w.a)},
               {"witness_b", elements_json(w.b)}, {"selection", selection},
               {"achieved_r", w.achieved_r}});
  return kOk;
}

SpectrumOptions spectrum_options(const Config& c) {
  SpectrumOptions o;
  o.budget = c.budget;
  o.jobs = c.jobs;
  o.want_witnesses = c.witnesses;
  return o;
}

int cmd_spectrum(const Config& c, Emitter& em) {
  const auto mode = parse_spectrum_mode(c.mode);
  if (!mode || *mode == SpectrumMode::schur) throw UsageError("--mode: unknown mode '" + c.mode + "'");
  const auto options = spectrum_options(c);
  SpectrumReport report;
  switch (*mode) {
    case SpectrumMode::fixed_interval_b:
      report = spectrum_fixed_interval_b(c.p, c.s, c.t, options);
      break;
    case SpectrumMode::multiset_dp:
      report = spectrum_multiset_dp(c.p, c.s, c.t);
      if (options.want_witnesses) {
        for (const auto value : report.attained) {
          auto w = construct(c.p, c.s, c.t, value);
          report.witnesses.emplace(value, SpectrumWitness{std::move(w.a), std::move(w.b)});
        }
      }
      break;
    default:
      report = spectrum_exhaustive(c.p, c.s, c.t, options);
      break;
  }
  for (const auto& [value, w] : report.witnesses) {
    if (count_naive(w.a, w.b) != value) throw InvariantViolation("spectrum witness does not re-count");
  }
  emit_spectrum(em, report, c.timing);
  return kOk;
}

int cmd_schur(const Config& c, Emitter& em) {
  const auto report = schur_spectrum(c.p, c.s, spectrum_options(c));
  for (const auto& [value, w] : report.witnesses) {
    if (count_naive(w.a, w.a) != value) throw InvariantViolation("schur witness does not re-count");
  }
  emit_spectrum(em, report, c.timing);
  return kOk;
}

int cmd_scan(const Config& c, Emitter& em) {
  if (c.p_min > c.p_max) throw UsageError("--p-min must not exceed --p-max");
  const auto result = exception_scan(c.p_min, c.p_max, spectrum_options(c));
  if (em.csv()) {
    em.line("p,s,t,f,g,exceptions,witness_a,witness_b");
    for (const auto& rec : result.records) {
      std::string wa;
      std::string wb;
      for (const auto value : rec.exceptions) {
        const auto& w = rec.witnesses.at(value);
        wa += (wa.empty() ? "" : "|") + set_field(w.a);
        wb += (wb.empty() ? "" : "|") + set_field(w.b);
      }
      em.line(std::to_string(rec.p) + ',' + std::to_string(rec.s) + ',' + std::to_string(rec.t) +
              ',' + std::to_string(rec.f) + ',' + std::to_string(rec.g) + ',' +
              joined(rec.exceptions) + ',' + wa + ',' + wb);
    }
    return kOk;
  }
  Json records = Json::array();
  for (const auto& rec : result.records) {
    Json ws = Json::array();
    for (const auto value : rec.exceptions) {
      const auto& w = rec.witnesses.at(value);
      ws.push_back(Json{{"r", value}, {"witness_a", elements_json(w.a)}, {"witness_b", elements_json(w.b)}});
    }
    records.push_back(Json{{"p", rec.p}, {"s", rec.s}, {"t", rec.t}, {"f", rec.f}, {"g", rec.g},
                           {"exceptions", rec.exceptions}, {"witnesses", ws}});
  }
  Json skipped = Json::array();
  for (const auto& skip : result.skipped) {
    skipped.push_back(Json{{"p", skip.p}, {"s", skip.s}, {"t", skip.t}, {"estimated_pairs", skip.estimated_pairs}});
  }
  em.json(Json{{"p_min", c.p_min}, {"p_max", c.p_max}, {"budget", c.budget},
               {"instances_checked", result.instances_checked}, {"records", records},
               {"skipped", skipped}});
  return kOk;
}

int cmd_verify(const Config& c, Emitter& em, std::ostream& err) {
  std::vector<std::uint32_t> moduli;
  for (const auto p : parse_list(c.p_list, "--p")) moduli.push_back(checked_modulus(p));
  if (moduli.empty()) throw UsageError("--p: need at least one modulus");
  const auto result = run_property_suites(moduli, c.trials, c.seed);

  if (em.csv()) {
    em.line("p,property,checked,violations,excluded");
    for (const auto& t : result.tallies) {
      em.line(std::to_string(t.p) + ',' + t.name + ',' + std::to_string(t.checked) + ',' +
              std::to_string(t.violations) + ',' + bool_text(t.excluded));
    }
  } else {
    Json props = Json::array();
    for (const auto& t : result.tallies) {
      props.push_back(Json{{"p", t.p}, {"property", t.name}, {"checked", t.checked},
                           {"violations", t.violations}, {"excluded", t.excluded}});
    }
    Json doc{{"p", moduli}, {"trials", c.trials}, {"seed", c.seed}, {"passed", result.passed()},
             {"properties", props}};
    if (result.first_failure) {
      const auto& f = *result.first_failure;
      doc["failure"] = Json{{"p", f.p}, {"property", f.property}, {"witness_a", elements_json(f.a)},
                            {"witness_b", elements_json(f.b)}, {"detail", f.detail}};
    }
    em.json(doc);
  }
  if (result.first_failure) {
    const auto& f = *result.first_failure;
    err << "error: property " << f.property << " failed for p = " << f.p << ": " << f.detail
        << " (A = {" << set_field(f.a) << "}, B = {" << set_field(f.b) << "})\n";
    return kVerificationFailure;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Additive triples (a, b, a+b) in A x B x B over Z_p", "addtrip"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", c.format, "Output format: json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--output,-o", c.output, "Write the report to this file instead of stdout");
  app.add_option("--jobs,-j", c.jobs, "Worker threads for enumeration (0 = all cores)");
  app.add_option("--budget", c.budget, "Maximum (A, B) pairs an exhaustive run may visit");
  app.add_flag("--timing", c.timing, "Include wall-clock time in spectrum reports");

  auto* bounds = app.add_subcommand("bounds", "Print f(s,t) and g(s,t)");
  bounds->add_option("--p", c.p)->required();
  bounds->add_option("--s", c.s)->required();
  bounds->add_option("--t", c.t)->required();

  auto* count_cmd = app.add_subcommand("count", "Count r(A,B,B) for explicit sets");
  count_cmd->add_option("--p", c.p)->required();
  count_cmd->add_option("--set-a", c.set_a, "Comma-separated residues; empty for the empty set")->required();
  count_cmd->add_option("--set-b", c.set_b, "Comma-separated residues; empty for the empty set")->required();
  count_cmd->add_option("--method", c.method)
      ->check(CLI::IsMember({"auto", "naive", "shift", "layers", "convolution", "all"}));

  auto* construct_cmd = app.add_subcommand("construct", "Build A with r(A,B,B) = r for B = {0..t-1}");
  construct_cmd->add_option("--p", c.p)->required();
  construct_cmd->add_option("--s", c.s)->required();
  construct_cmd->add_option("--t", c.t)->required();
  construct_cmd->add_option("--r", c.r)->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Enumerate attained values of r(A,B,B)");
  spectrum_cmd->add_option("--p", c.p)->required();
  spectrum_cmd->add_option("--s", c.s)->required();
  spectrum_cmd->add_option("--t", c.t)->required();
  spectrum_cmd->add_option("--mode", c.mode, "exhaustive, fixed-interval-B or multiset-dp");
  spectrum_cmd->add_flag("!--no-witnesses", c.witnesses, "Omit witnesses");

  auto* schur_cmd = app.add_subcommand("schur", "Enumerate attained values of r(A,A,A)");
  schur_cmd->add_option("--p", c.p)->required();
  schur_cmd->add_option("--s", c.s)->required();
  schur_cmd->add_flag("!--no-witnesses", c.witnesses, "Omit witnesses");

  auto* scan_cmd = app.add_subcommand("scan", "Look for values outside [f,g] for composite odd p");
  scan_cmd->add_option("--p-min", c.p_min)->required();
  scan_cmd->add_option("--p-max", c.p_max)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized property suites");
  verify_cmd->add_option("--p", c.p_list, "Comma-separated moduli")->required();
  verify_cmd->add_option("--trials", c.trials);
  verify_cmd->add_option("--seed", c.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.output.empty()) {
    file.open(c.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << c.output << " for writing\n";
      return kUsageError;
    }
    sink = &file;
  }
  Emitter em(c, *sink);

  try {
    if (bounds->parsed()) return cmd_bounds(c, em);
    if (count_cmd->parsed()) return cmd_count(c, em, err);
    if (construct_cmd->parsed()) return cmd_construct(c, em);
    if (spectrum_cmd->parsed()) return cmd_spectrum(c, em);
    if (schur_cmd->parsed()) return cmd_schur(c, em);
    if (scan_cmd->parsed()) return cmd_scan(c, em);
    return cmd_verify(c, em, err);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InvariantViolation& e) {
    err << "error: internal check failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const UnattainableTarget& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IncompatibleSets& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace addtrip::cli
