// Command-line front end: evaluation, convergence tables, finite-h limit
// demonstration, and the cross-route verification report.

#include <derivgamma/derivgamma.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace derivgamma;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_complex(ComplexScalar v) {
  if (v.imag() == 0.0) return fmt(v.real());
  std::string s = fmt(v.real());
  s += (v.imag() < 0.0) ? "-" : "+";
  s += fmt(std::abs(v.imag()));
  s += "i";
  return s;
}

// Accepts "1.5", "2+1i", "0.5-2i", "1i", "-3.2e-1+0.5i".
ComplexScalar parse_complex(const std::string& text) {
  if (text.empty()) throw UsageError("empty complex literal");
  std::string s = text;
  double re = 0.0, im = 0.0;
  if (s.back() == 'i' || s.back() == 'I') {
    s.pop_back();
    // split at the last '+'/'-' that is not a leading sign or exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    std::size_t pos = 0;
    try {
      if (split == std::string::npos) {
        im = std::stod(s, &pos);
        if (pos != s.size()) throw UsageError("bad complex literal: " + text);
        return {0.0, im};
      }
      re = std::stod(s.substr(0, split), &pos);
      if (pos != split) throw UsageError("bad complex literal: " + text);
      const std::string imtxt = s.substr(split);
      im = (imtxt == "+" || imtxt == "-") ? (imtxt == "+" ? 1.0 : -1.0)
                                          : std::stod(imtxt, &pos);
    } catch (const std::invalid_argument&) {
      throw UsageError("bad complex literal: " + text);
    }
    return {re, im};
  }
  std::size_t pos = 0;
  try {
    re = std::stod(s, &pos);
  } catch (const std::invalid_argument&) {
    throw UsageError("bad complex literal: " + text);
  }
  if (pos != s.size()) throw UsageError("bad complex literal: " + text);
  return {re, 0.0};
}

// "a..b", "a..b:s", or "a,b,c".
std::vector<TermIndex> parse_schedule(const std::string& text) {
  std::vector<TermIndex> out;
  try {
    const std::size_t range = text.find("..");
    if (range != std::string::npos) {
      const TermIndex lo = std::stoll(text.substr(0, range));
      std::string rest = text.substr(range + 2);
      TermIndex step = 1;
      const std::size_t colon = rest.find(':');
      if (colon != std::string::npos) {
        step = std::stoll(rest.substr(colon + 1));
        rest = rest.substr(0, colon);
      }
      const TermIndex hi = std::stoll(rest);
      if (lo < 1 || hi < lo || step < 1)
        throw UsageError("bad schedule: " + text);
      for (TermIndex m = lo; m <= hi; m += step) out.push_back(m);
      return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = text.find(',', start);
      const std::string tok = text.substr(start, comma - start);
      out.push_back(std::stoll(tok));
      if (out.back() < 1) throw UsageError("bad schedule: " + text);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } catch (const std::invalid_argument&) {
    throw UsageError("bad schedule: " + text);
  } catch (const std::out_of_range&) {
    throw UsageError("bad schedule: " + text);
  }
  if (out.empty()) throw UsageError("empty schedule: " + text);
  return out;
}

TermIndex default_max_terms() {
  if (const char* env = std::getenv("DERIVGAMMA_MAX_TERMS")) {
    try {
      const TermIndex v = std::stoll(env);
      if (v >= 1) return v;
    } catch (...) {
    }
    throw UsageError("DERIVGAMMA_MAX_TERMS: not a positive integer");
  }
  return 1'000'000;
}

struct CommonOpts {
  std::vector<std::string> z_texts;
  double tol = 1e-10;
  TermIndex max_terms = 0;  // 0 = env/default
  bool no_tail_correction = false;
  bool no_reduction = false;
  bool compare = false;
  std::string format = "plain";

  EvalConfig config() const {
    EvalConfig cfg;
    cfg.abs_tol = tol;
    cfg.max_terms = max_terms > 0 ? max_terms : default_max_terms();
    cfg.tail_correction = !no_tail_correction;
    cfg.argument_reduction = !no_reduction;
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool need_z = true) {
  auto* zopt = cmd->add_option("--z", opts.z_texts, "argument z, e.g. 2.5 or 2+1i");
  if (need_z) zopt->required();
  cmd->add_option("--tol", opts.tol, "absolute tolerance for adaptive truncation");
  cmd->add_option("--max-terms", opts.max_terms, "series term cap");
  cmd->add_flag("--no-tail-correction", opts.no_tail_correction,
                "disable the first-order tail correction");
  cmd->add_flag("--no-reduction", opts.no_reduction,
                "disable recurrence argument reduction");
  cmd->add_flag("--compare", opts.compare, "report |value - oracle|");
  cmd->add_option("--format", opts.format, "plain, csv, or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
}

struct OutputRecord {
  std::string method;
  ComplexScalar z;
  TermIndex order;
  ComplexScalar value;
  TermIndex terms_used;
  double tail_estimate;
  std::optional<double> abs_err_vs_oracle;
};

void emit_records(const std::vector<OutputRecord>& records, const std::string& format) {
  if (format == "csv") {
    std::cout << "method,z_re,z_im,order,value_re,value_im,terms_used,"
                 "tail_estimate";
    if (!records.empty() && records.front().abs_err_vs_oracle)
      std::cout << ",abs_err_vs_oracle";
    std::cout << "\n";
    for (const auto& r : records) {
      std::cout << r.method << "," << fmt(r.z.real()) << "," << fmt(r.z.imag())
                << "," << r.order << "," << fmt(r.value.real()) << ","
                << fmt(r.value.imag()) << "," << r.terms_used << ","
                << fmt(r.tail_estimate);
      if (r.abs_err_vs_oracle) std::cout << "," << fmt(*r.abs_err_vs_oracle);
      std::cout << "\n";
    }
  } else if (format == "json") {
    for (const auto& r : records) {
      ordered_json j;
      j["method"] = r.method;
      j["z"] = {{"re", r.z.real()}, {"im", r.z.imag()}};
      j["order"] = r.order;
      j["value"] = {{"re", r.value.real()}, {"im", r.value.imag()}};
      j["terms_used"] = r.terms_used;
      j["tail_estimate"] = r.tail_estimate;
      if (r.abs_err_vs_oracle) j["abs_err_vs_oracle"] = *r.abs_err_vs_oracle;
      std::cout << j.dump() << "\n";
    }
  } else {
    for (const auto& r : records) {
      std::cout << "psi";
      if (r.order > 0) std::cout << "^(" << r.order << ")";
      std::cout << "(" << fmt_complex(r.z) << ") = " << fmt_complex(r.value)
                << "  [method=" << r.method << " terms=" << r.terms_used
                << " tail=" << fmt(r.tail_estimate);
      if (r.abs_err_vs_oracle)
        std::cout << " abs_err_vs_oracle=" << fmt(*r.abs_err_vs_oracle);
      std::cout << "]\n";
    }
  }
}

ComplexScalar oracle_value(ComplexScalar z, TermIndex order) {
  return order == 0 ? reference_digamma(z) : reference_polygamma(z, order);
}

int run_eval(const CommonOpts& opts, const std::string& method, TermIndex order,
             double h0) {
  const EvalConfig cfg = opts.config();
  std::vector<OutputRecord> records;
  for (const std::string& ztxt : opts.z_texts) {
    const ComplexScalar z = parse_complex(ztxt);
    OutputRecord rec;
    rec.method = method;
    rec.z = z;
    rec.order = order;
    rec.terms_used = 0;
    rec.tail_estimate = 0.0;
    if (method == "series") {
      const SeriesResult r = polygamma(z, order, cfg);
      rec.value = r.value;
      rec.terms_used = r.terms_used;
      rec.tail_estimate = r.tail_estimate;
    } else if (method == "eq11") {
      if (order != 0) throw UsageError("--method eq11 supports order 0 only");
      const TermIndex m = std::min<TermIndex>(cfg.max_terms, 150);
      rec.value = digamma_eq11_partial(z, m);
      rec.terms_used = m;
    } else if (method == "f32") {
      if (order != 0) throw UsageError("--method f32 supports order 0 only");
      const SeriesResult r = digamma_via_3f2(z, cfg);
      rec.value = r.value;
      rec.terms_used = r.terms_used;
      rec.tail_estimate = r.tail_estimate;
    } else if (method == "limit") {
      if (order != 0) throw UsageError("--method limit supports order 0 only");
      rec.value = psi_via_limit(z, {h0, 0.0});
    } else {  // oracle
      rec.value = oracle_value(z, order);
    }
    if (opts.compare)
      rec.abs_err_vs_oracle = std::abs(rec.value - oracle_value(z, order));
    records.push_back(rec);
  }
  emit_records(records, opts.format);
  return kExitOk;
}

int run_table(const CommonOpts& opts, const std::string& schedule_text) {
  const std::vector<TermIndex> schedule = parse_schedule(schedule_text);
  const ComplexScalar z = parse_complex(opts.z_texts.at(0));
  if (!(z.real() > 0.0)) throw DomainError("table: requires Re(z) > 0");
  const ComplexScalar psi_ref = reference_digamma(z);
  const TermIndex mmax = *std::max_element(schedule.begin(), schedule.end());

  // One incremental pass; rows captured at the requested m values.
  std::vector<OutputRecord> dummy;  // (unused; table has its own columns)
  std::cout << "m,partial_sum_re,partial_sum_im,term_mag,tail_estimate,"
               "abs_err_vs_oracle\n";
  KahanComplex sum;
  ComplexScalar t = 1.0 - z;
  std::size_t next_row = 0;
  std::vector<TermIndex> sorted = schedule;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (TermIndex n = 1; n <= mmax && next_row < sorted.size(); ++n) {
    sum.add(t);
    const double term_mag = std::abs(t);
    if (n == sorted[next_row]) {
      ++next_row;
      const ComplexScalar partial = -constants::euler_gamma - sum.value();
      const double tail = term_mag * static_cast<double>(n) / z.real();
      std::cout << n << "," << fmt(partial.real()) << "," << fmt(partial.imag())
                << "," << fmt(term_mag) << "," << fmt(tail) << ","
                << fmt(std::abs(partial - psi_ref)) << "\n";
    }
    const double nd = static_cast<double>(n);
    t *= (nd + 1.0 - z) * (nd / ((nd + 1.0) * (nd + 1.0)));
  }
  return kExitOk;
}

int run_limit_demo(const CommonOpts& opts, double h0, int steps) {
  const ComplexScalar z = parse_complex(opts.z_texts.at(0));
  if (steps < 1) throw UsageError("limit-demo: --steps must be >= 1");
  const ComplexScalar psi_ref = reference_digamma(z);
  std::cout << "h,psi_via_limit_re,psi_via_limit_im,abs_err_vs_oracle\n";
  for (int k = 0; k < steps; ++k) {
    const double h = h0 * std::pow(2.0, -k);
    const ComplexScalar v = psi_via_limit(z, {h, 0.0});
    std::cout << fmt(h) << "," << fmt(v.real()) << "," << fmt(v.imag()) << ","
              << fmt(std::abs(v - psi_ref)) << "\n";
  }
  return kExitOk;
}

int run_verify(const std::vector<std::string>& only, const std::string& format) {
  EvalConfig cfg;
  cfg.max_terms = default_max_terms();
  const VerificationReport rep = run_verification(only, cfg);
  if (rep.checks.empty()) throw UsageError("verify: unknown module filter");
  if (format == "json") {
    for (const Check& c : rep.checks) {
      ordered_json j;
      j["module"] = c.module;
      j["name"] = c.name;
      j["residual"] = c.residual;
      j["tolerance"] = c.tolerance;
      j["pass"] = c.pass;
      std::cout << j.dump() << "\n";
    }
  } else {
    for (const Check& c : rep.checks) {
      std::cout << (c.pass ? "PASS" : "FAIL") << "  [" << c.module << "] "
                << c.name << "  residual=" << fmt(c.residual)
                << " tolerance=" << fmt(c.tolerance) << "\n";
    }
    std::cout << (rep.all_passed() ? "all checks passed" : "some checks FAILED")
              << "\n";
  }
  return rep.all_passed() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digamma/polygamma via the derivative-definition series"};
  app.require_subcommand(1);

  CommonOpts eval_opts;
  std::string eval_method = "series";
  TermIndex eval_order = 0;
  double eval_h0 = 1e-4;
  auto* eval = app.add_subcommand("eval", "evaluate psi or psi^(l)");
  add_common(eval, eval_opts);
  eval->add_option("--method", eval_method, "series, eq11, f32, limit, or oracle")
      ->check(CLI::IsMember({"series", "eq11", "f32", "limit", "oracle"}));
  eval->add_option("--order", eval_order, "derivative order l (0 = digamma)");
  eval->add_option("--h0", eval_h0, "finite h for --method limit");

  CommonOpts poly_opts;
  TermIndex poly_order = 1;
  auto* poly = app.add_subcommand("poly", "evaluate psi^(l) by the series route");
  add_common(poly, poly_opts);
  poly->add_option("--order", poly_order, "derivative order l")->required();

  CommonOpts table_opts;
  std::string table_schedule;
  auto* table = app.add_subcommand("table", "partial-sum convergence table (CSV)");
  add_common(table, table_opts);
  table->add_option("--m", table_schedule, "schedule: a..b, a..b:step, or a,b,c")
      ->required();

  CommonOpts limit_opts;
  double limit_h0 = 0.01;
  int limit_steps = 6;
  auto* limit = app.add_subcommand("limit-demo", "finite-h limit convergence (CSV)");
  add_common(limit, limit_opts);
  limit->add_option("--h0", limit_h0, "starting h; rows use h0 * 2^-k");
  limit->add_option("--steps", limit_steps, "number of halvings");

  std::vector<std::string> verify_only;
  std::string verify_format = "plain";
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--only", verify_only,
                     "restrict to modules (pochhammer, beta, digamma, hyp3f2, "
                     "polygamma, oracle)");
  verify->add_option("--format", verify_format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  try {
    app.parse(argc, argv);
    if (eval->parsed()) return run_eval(eval_opts, eval_method, eval_order, eval_h0);
    if (poly->parsed()) return run_eval(poly_opts, "series", poly_order, 0.0);
    if (table->parsed()) return run_table(table_opts, table_schedule);
    if (limit->parsed()) return run_limit_demo(limit_opts, limit_h0, limit_steps);
    if (verify->parsed()) return run_verify(verify_only, verify_format);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const derivgamma::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const derivgamma::OverflowError& e) {
    std::cerr << "overflow error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
