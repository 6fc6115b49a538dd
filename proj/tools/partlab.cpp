// partlab: exact computations for restricted/multicolor partition counts.
//
// Subcommands mirror the library: point evaluation, delta CSV dumps for
// plotting, quasi-polynomial and sigma reports, envelope/threshold
// constants, classification, and the two inequality scanners.  All numeric
// output is exact; JSON renders integers as decimal strings and rationals
// as "num/den" strings so arbitrary precision survives any consumer.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "partlab/asymptotics.hpp"
#include "partlab/bounds.hpp"
#include "partlab/numeric.hpp"
#include "partlab/part_system.hpp"
#include "partlab/partition_count.hpp"
#include "partlab/quasipolynomial.hpp"
#include "partlab/scanner.hpp"

using json = nlohmann::ordered_json;
using namespace partlab;

namespace {

struct Options {
  std::vector<long> parts;
  long n = 0;
  long n_max = 0;
  long lo = 2;
  long hi = 0;
  long max = 0;
  long order = 8;
  std::optional<std::string> u_str;
  std::optional<long> e;
  std::string out;
  std::string format = "json";
  std::string cache_dir;
  bool do_assert = false;
  std::optional<long> assert_start;
};

// Where report text goes: --out PATH or stdout.  Binary mode keeps line
// endings as written (LF) regardless of platform.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

PartSystem system_from(const Options& opts) { return make_part_system(opts.parts); }

Rat parse_rat(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("cannot parse rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string join_parts(const PartSystem& system, char sep) {
  std::string s;
  for (std::size_t i = 0; i < system.k(); ++i) {
    if (i) s += sep;
    s += to_string(system.part(i));
  }
  return s;
}

// CSV fields hold integers, "num/den" rationals, or prose; prose gets its
// commas swapped out so rows never need quoting.
std::string csv_safe(std::string s) {
  for (char& ch : s)
    if (ch == ',') ch = ';';
  return s;
}

json parts_json(const PartSystem& system) {
  json a = json::array();
  for (const Int& p : system.parts()) a.push_back(to_string(p));
  return a;
}

json poly_json(const Polynomial& poly) {
  json a = json::array();
  for (long d = 0; d <= poly.degree(); ++d)
    a.push_back(to_string(poly.coeff(static_cast<std::size_t>(d))));
  return a;
}

std::string poly_field(const Polynomial& poly) {
  std::string s;
  for (long d = 0; d <= poly.degree(); ++d) {
    if (d) s += ' ';
    s += to_string(poly.coeff(static_cast<std::size_t>(d)));
  }
  return s.empty() ? "0/1" : s;
}

// Partition table with optional on-disk cache.  A cache file is trusted
// only if its header names exactly the same sorted parts and n_max.
PartitionTable load_table(const PartSystem& system, std::size_t n_max,
                          const std::string& cache_dir) {
  if (cache_dir.empty()) return count_table(system, n_max);

  std::string header =
      "partlab-table parts=" + join_parts(system, ',') + " n_max=" + std::to_string(n_max);
  std::filesystem::path path = std::filesystem::path(cache_dir) /
                               ("table_" + join_parts(system, '-') + "_n" +
                                std::to_string(n_max) + ".txt");

  std::ifstream in(path);
  if (in) {
    std::string line;
    if (std::getline(in, line) && line == header) {
      std::vector<Int> values;
      values.reserve(n_max + 1);
      bool ok = true;
      for (std::size_t i = 0; i <= n_max && ok; ++i) {
        Int v;
        ok = static_cast<bool>(std::getline(in, line)) && !line.empty() &&
             v.set_str(line, 10) == 0;
        if (ok) values.push_back(v);
      }
      if (ok) return PartitionTable{system, std::move(values)};
    }
  }

  PartitionTable table = count_table(system, n_max);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  std::ofstream out(path, std::ios::binary);
  if (out) {
    out << header << '\n';
    for (const Int& v : table.values) out << to_string(v) << '\n';
  }
  return table;
}

// ---- report rendering ----------------------------------------------------

json scan_report_json(const ScanReport& report) {
  json j;
  j["property"] = to_string(report.property.kind);
  j["parts"] = parts_json(report.system);
  if (report.property.u) j["u"] = to_string(*report.property.u);
  if (report.property.e) j["e"] = std::to_string(*report.property.e);
  if (report.property.envelope) j["envelope"] = to_string(*report.property.envelope);
  j["lo"] = to_string(report.lo);
  j["hi"] = to_string(report.hi);
  json pv = json::array();
  for (const auto& v : report.pair_violations)
    pv.push_back(json{{"a", to_string(v.a)},
                      {"b", to_string(v.b)},
                      {"lhs", to_string(v.lhs)},
                      {"rhs", to_string(v.rhs)}});
  json nv = json::array();
  for (const auto& v : report.point_violations)
    nv.push_back(json{{"n", to_string(v.n)},
                      {"lhs", to_string(v.lhs)},
                      {"rhs", to_string(v.rhs)}});
  std::size_t count = report.pair_violations.size() + report.point_violations.size();
  j["violation_count"] = std::to_string(count);
  if (!report.pair_violations.empty()) j["violations"] = pv;
  if (!report.point_violations.empty()) j["violations"] = nv;
  if (report.pair_violations.empty() && report.point_violations.empty())
    j["violations"] = json::array();
  j["minimal_start"] =
      report.minimal_start ? json(to_string(*report.minimal_start)) : json(nullptr);
  j["horizon_bounded"] = true;
  return j;
}

void scan_report_csv(const ScanReport& report, std::ostream& out) {
  if (report.property.kind == ScanProperty::Kind::Bo) {
    out << "a,b,lhs,rhs\n";
    for (const auto& v : report.pair_violations)
      out << to_string(v.a) << ',' << to_string(v.b) << ',' << to_string(v.lhs)
          << ',' << to_string(v.rhs) << '\n';
    return;
  }
  out << "n,lhs,rhs\n";
  for (const auto& v : report.point_violations)
    out << to_string(v.n) << ',' << to_string(v.lhs) << ',' << to_string(v.rhs)
        << '\n';
}

int finish_scan(const ScanReport& report, const Options& opts) {
  Sink sink(opts.out);
  if (opts.format == "csv")
    scan_report_csv(report, sink.out());
  else
    sink.out() << scan_report_json(report).dump(2) << '\n';

  std::size_t count = report.pair_violations.size() + report.point_violations.size();
  if (opts.do_assert && count > 0) return 2;
  if (opts.assert_start) {
    if (!report.minimal_start) return 2;
    if (*report.minimal_start != Int(*opts.assert_start)) return 2;
  }
  return 0;
}

json threshold_json(const Threshold& t) {
  json j;
  j["applicable"] = true;
  j["theorem"] = t.theorem;
  j["value"] = to_string(t.value);
  Int strict = t.value - 1;
  j["strict_above"] = to_string(strict);
  j["condition"] = t.condition;
  if (!t.variants.empty()) {
    json v;
    for (const auto& [name, value] : t.variants) v[name] = to_string(value);
    j["variants"] = v;
  }
  return j;
}

json envelope_json(const BoundEnvelope& env) {
  json j;
  j["applicable"] = true;
  j["kind"] = to_string(env.kind);
  j["main"] = poly_json(env.main);
  j["err_coeff"] = to_string(env.err_coeff);
  j["err_degree"] = std::to_string(env.err_degree);
  j["valid_from"] = to_string(env.valid_from);
  return j;
}

json not_applicable(const std::string& reason) {
  return json{{"applicable", false}, {"reason", reason}};
}

// ---- subcommands ----------------------------------------------------------

int run_eval(const Options& opts) {
  PartSystem system = system_from(opts);
  Sink sink(opts.out);
  sink.out() << to_string(count_one(system, Int(opts.n))) << '\n';
  return 0;
}

int run_delta_csv(const Options& opts) {
  if (opts.n_max < 2) throw std::invalid_argument("delta-csv: --n-max must be >= 2");
  PartSystem system = system_from(opts);
  std::size_t n_max = static_cast<std::size_t>(opts.n_max);
  PartitionTable table = load_table(system, n_max + 1, opts.cache_dir);
  Sink sink(opts.out);
  std::ostream& out = sink.out();
  out << "n,p,delta,sign\n";
  for (std::size_t n = 2; n <= n_max; ++n) {
    Int d = delta_from(table, n);
    out << n << ',' << to_string(table.at(n)) << ',' << to_string(d) << ','
        << sgn(d) << '\n';
  }
  return 0;
}

int run_qp(const Options& opts) {
  PartSystem system = system_from(opts);
  QuasiPolynomial qp = quasipolynomial_by_interpolation(system);
  Sink sink(opts.out);
  if (opts.format == "csv") {
    std::ostream& out = sink.out();
    out << "residue,degree,coefficient\n";
    for (std::size_t r = 0; r < qp.period(); ++r) {
      const Polynomial& poly = qp.residue_polynomial(r);
      for (long d = 0; d <= (poly.degree() < 0 ? 0 : poly.degree()); ++d)
        out << r << ',' << d << ','
            << to_string(poly.coeff(static_cast<std::size_t>(d))) << '\n';
    }
    return 0;
  }
  json j;
  j["command"] = "qp";
  j["parts"] = parts_json(system);
  j["period"] = std::to_string(qp.period());
  json polys = json::array();
  for (std::size_t r = 0; r < qp.period(); ++r)
    polys.push_back(poly_json(qp.residue_polynomial(r)));
  j["residue_polynomials"] = polys;
  StableCoefficients stable = qp.stable_coefficients();
  j["stable_min_degree"] = std::to_string(stable.min_degree);
  j["stable_tail"] = poly_json(stable.tail);
  sink.out() << j.dump(2) << '\n';
  return 0;
}

int run_sigma(const Options& opts) {
  if (opts.order < 0) throw std::invalid_argument("sigma: --order must be >= 0");
  PartSystem system = system_from(opts);
  SigmaTable table = sigma_table(system, static_cast<std::size_t>(opts.order));
  Sink sink(opts.out);
  if (opts.format == "csv") {
    std::ostream& out = sink.out();
    out << "m,sigma_m\n";
    for (std::size_t m = 0; m <= table.order(); ++m)
      out << m << ',' << to_string(table.at(m)) << '\n';
    return 0;
  }
  json j;
  j["command"] = "sigma";
  j["parts"] = parts_json(system);
  j["order"] = std::to_string(table.order());
  json coeffs = json::array();
  for (std::size_t m = 0; m <= table.order(); ++m)
    coeffs.push_back(to_string(table.at(m)));
  j["sigma"] = coeffs;
  sink.out() << j.dump(2) << '\n';
  return 0;
}

int run_bounds(const Options& opts) {
  PartSystem system = system_from(opts);

  struct Row {
    std::string label;
    std::optional<BoundEnvelope> env;
    std::string reason;
  };
  std::vector<Row> rows;
  auto attempt = [&](const std::string& label, auto&& make) {
    try {
      rows.push_back(Row{label, make(), ""});
    } catch (const std::exception& e) {
      rows.push_back(Row{label, std::nullopt, e.what()});
    }
  };
  attempt("leading-term", [&] { return leading_term_envelope(system); });
  attempt("cubic-constant", [&] { return cubic_constant_envelope(system); });
  attempt("top-three", [&] { return top_three_envelope(system); });
  for (std::size_t j = 1; j <= system.k(); ++j)
    attempt("stable-tail:j=" + std::to_string(j),
            [&] { return stable_tail_envelope(system, j); });

  Sink sink(opts.out);
  if (opts.format == "csv") {
    std::ostream& out = sink.out();
    out << "kind,applicable,valid_from,err_degree,err_coeff,main,reason\n";
    for (const Row& row : rows) {
      if (row.env) {
        out << row.label << ",true," << to_string(row.env->valid_from) << ','
            << row.env->err_degree << ',' << to_string(row.env->err_coeff) << ','
            << poly_field(row.env->main) << ",\n";
      } else {
        out << row.label << ",false,,,,," << csv_safe(row.reason) << '\n';
      }
    }
    return 0;
  }
  json j;
  j["command"] = "bounds";
  j["parts"] = parts_json(system);
  json envs;
  for (const Row& row : rows)
    envs[row.label] = row.env ? envelope_json(*row.env) : not_applicable(row.reason);
  j["envelopes"] = envs;
  sink.out() << j.dump(2) << '\n';
  return 0;
}

int run_thresholds(const Options& opts) {
  PartSystem system = system_from(opts);

  json bo, logc;
  std::optional<Threshold> bo_t, logc_t;
  try {
    bo_t = bessenrodt_ono_threshold(system);
    bo = threshold_json(*bo_t);
  } catch (const std::exception& e) {
    bo = not_applicable(e.what());
  }
  try {
    logc_t = log_concavity_threshold(system);
    logc = threshold_json(*logc_t);
  } catch (const std::exception& e) {
    logc = not_applicable(e.what());
  }

  Sink sink(opts.out);
  if (opts.format == "csv") {
    std::ostream& out = sink.out();
    out << "property,theorem,value,strict_above,condition\n";
    auto emit = [&](const char* name, const std::optional<Threshold>& t,
                    const json& fallback) {
      if (t) {
        Int strict = t->value - 1;
        out << name << ',' << t->theorem << ',' << to_string(t->value) << ','
            << to_string(strict) << ',' << csv_safe(t->condition) << '\n';
        for (const auto& [vname, vvalue] : t->variants) {
          Int vstrict = vvalue - 1;
          out << name << ":" << vname << ',' << t->theorem << ','
              << to_string(vvalue) << ',' << to_string(vstrict) << ",\n";
        }
      } else {
        out << name << ",,,," << csv_safe(fallback["reason"].get<std::string>())
            << '\n';
      }
    };
    emit("bessenrodt-ono", bo_t, bo);
    emit("log-concavity", logc_t, logc);
    return 0;
  }
  json j;
  j["command"] = "thresholds";
  j["parts"] = parts_json(system);
  j["bessenrodt_ono"] = bo;
  j["log_concavity"] = logc;
  sink.out() << j.dump(2) << '\n';
  return 0;
}

int run_classify(const Options& opts) {
  PartSystem system = system_from(opts);
  Classification cls = classify(system);
  Sink sink(opts.out);
  if (opts.format == "csv") {
    std::ostream& out = sink.out();
    out << "field,value\n";
    out << "bo," << (cls.bo_holds_eventually ? "true" : "false") << '\n';
    out << "bo_reason," << csv_safe(cls.bo_reason) << '\n';
    if (cls.common_divisor)
      out << "witness_divisor," << to_string(*cls.common_divisor) << '\n';
    out << "logconcave," << (cls.logconcave_eventually ? "true" : "false") << '\n';
    out << "logconcave_reason," << csv_safe(cls.logconcave_reason) << '\n';
    if (cls.bad_multisubset) {
      std::string s;
      for (const Int& p : *cls.bad_multisubset) {
        if (!s.empty()) s += ' ';
        s += to_string(p);
      }
      out << "bad_multisubset," << s << '\n';
      out << "bad_multisubset_gcd," << to_string(*cls.bad_multisubset_gcd) << '\n';
    }
    return 0;
  }
  json j;
  j["command"] = "classify";
  j["parts"] = parts_json(system);
  j["bo"] = cls.bo_holds_eventually;
  j["bo_reason"] = cls.bo_reason;
  if (cls.common_divisor) j["witness_divisor"] = to_string(*cls.common_divisor);
  j["logconcave"] = cls.logconcave_eventually;
  j["logconcave_reason"] = cls.logconcave_reason;
  if (cls.bad_multisubset) {
    json arr = json::array();
    for (const Int& p : *cls.bad_multisubset) arr.push_back(to_string(p));
    j["bad_multisubset"] = arr;
    j["bad_multisubset_gcd"] = to_string(*cls.bad_multisubset_gcd);
  }
  sink.out() << j.dump(2) << '\n';
  return 0;
}

int run_scan_bo(const Options& opts) {
  if (opts.max < 2) throw std::invalid_argument("scan-bo: --max must be >= 2");
  PartSystem system = system_from(opts);
  std::size_t max = static_cast<std::size_t>(opts.max);
  PartitionTable table = load_table(system, 2 * max, opts.cache_dir);
  ScanReport report = scan_bo(table, max);
  return finish_scan(report, opts);
}

int run_scan_logc(const Options& opts) {
  if (opts.lo < 1 || opts.hi <= opts.lo)
    throw std::invalid_argument("scan-logc: need 1 <= --lo < --hi");
  PartSystem system = system_from(opts);
  std::size_t lo = static_cast<std::size_t>(opts.lo);
  std::size_t hi = static_cast<std::size_t>(opts.hi);
  std::optional<Rat> u;
  if (opts.u_str) u = parse_rat(*opts.u_str);
  PartitionTable table = load_table(system, hi + 1, opts.cache_dir);
  ScanReport report = scan_logconcavity(table, lo, hi, u, opts.e);
  return finish_scan(report, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact restricted and multicolor partition counts, bounds, and scans"};
  app.require_subcommand(1);
  Options opts;

  auto add_parts = [&](CLI::App* sub) {
    sub->add_option("--parts", opts.parts, "parts, comma separated (repeats allowed)")
        ->required()
        ->delimiter(',');
  };
  auto add_output = [&](CLI::App* sub, bool with_format = true) {
    sub->add_option("--out", opts.out, "output file (default: stdout)");
    if (with_format)
      sub->add_option("--format", opts.format, "report format")
          ->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_scan_flags = [&](CLI::App* sub) {
    sub->add_option("--cache", opts.cache_dir, "directory for partition table cache");
    sub->add_flag("--assert", opts.do_assert, "exit 2 if any violation is found");
    sub->add_option("--assert-start", opts.assert_start,
                    "exit 2 unless minimal_start equals N");
  };

  CLI::App* eval = app.add_subcommand("eval", "print one exact count p_A(n, k)");
  add_parts(eval);
  eval->add_option("--n", opts.n, "target value")->required();
  add_output(eval, false);

  CLI::App* delta = app.add_subcommand(
      "delta-csv", "CSV of n, p(n), log-concavity defect, and its sign");
  add_parts(delta);
  delta->add_option("--n-max", opts.n_max, "last n (rows run 2..n-max)")->required();
  add_output(delta, false);
  delta->add_option("--cache", opts.cache_dir, "directory for partition table cache");

  CLI::App* qp = app.add_subcommand(
      "qp", "quasi-polynomial per residue class, with stable coefficients");
  add_parts(qp);
  add_output(qp);

  CLI::App* sigma = app.add_subcommand("sigma", "sigma coefficient table");
  add_parts(sigma);
  sigma->add_option("--order", opts.order, "highest coefficient order (default 8)");
  add_output(sigma);

  CLI::App* bounds =
      app.add_subcommand("bounds", "every envelope that applies to the system");
  add_parts(bounds);
  add_output(bounds);

  CLI::App* thresholds = app.add_subcommand(
      "thresholds", "inequality thresholds with per-theorem applicability");
  add_parts(thresholds);
  add_output(thresholds);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "eventual behavior of both inequalities");
  add_parts(classify_cmd);
  add_output(classify_cmd);

  CLI::App* scan_bo_cmd = app.add_subcommand(
      "scan-bo", "scan all pairs b <= a <= max for product-inequality failures");
  add_parts(scan_bo_cmd);
  scan_bo_cmd->add_option("--max", opts.max, "largest pair element")->required();
  add_output(scan_bo_cmd);
  add_scan_flags(scan_bo_cmd);

  CLI::App* scan_logc_cmd = app.add_subcommand(
      "scan-logc", "scan lo..hi for (strengthened) log-concavity failures");
  add_parts(scan_logc_cmd);
  scan_logc_cmd->add_option("--lo", opts.lo, "first n (default 2)");
  scan_logc_cmd->add_option("--hi", opts.hi, "last n")->required();
  scan_logc_cmd->add_option("--u", opts.u_str,
                            "strengthening factor parameter u (rational, e.g. 2/3)");
  scan_logc_cmd->add_option("--e", opts.e, "strengthening exponent");
  add_output(scan_logc_cmd);
  add_scan_flags(scan_logc_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (eval->parsed()) return run_eval(opts);
    if (delta->parsed()) return run_delta_csv(opts);
    if (qp->parsed()) return run_qp(opts);
    if (sigma->parsed()) return run_sigma(opts);
    if (bounds->parsed()) return run_bounds(opts);
    if (thresholds->parsed()) return run_thresholds(opts);
    if (classify_cmd->parsed()) return run_classify(opts);
    if (scan_bo_cmd->parsed()) return run_scan_bo(opts);
    if (scan_logc_cmd->parsed()) return run_scan_logc(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
