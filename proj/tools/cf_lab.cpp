#include "cflab/catalog.hpp"
#include "cflab/constants.hpp"
#include "cflab/errors.hpp"
#include "cflab/euler.hpp"
#include "cflab/series.hpp"
#include "cflab/verify.hpp"

#include "CLI11.hpp"

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using namespace cflab;

namespace {

enum Exit { kOk = 0, kUsage = 1, kConvergence = 2, kIo = 3 };

std::string branch_string(const Branch& b) {
  if (b.den == Polynomial(1)) return b.num.to_string();
  return "(" + b.num.to_string() + ")/(" + b.den.to_string() + ")";
}

std::string rule_string(const CoeffRule& r) {
  std::ostringstream os;
  if (r.period() == 1) {
    os << branch_string(r.branches()[0]);
  } else {
    for (long i = 0; i < r.period(); ++i) {
      if (i) os << "; ";
      os << "n = " << r.start_index() + i << " mod " << r.period() << ": " << branch_string(r.branches()[i]);
    }
  }
  os << "  (n >= " << r.start_index() << ")";
  return os.str();
}

void print_cf(std::ostream& os, const CFSpec& cf) {
  os << "  b0  = " << to_string(cf.b0) << "\n";
  for (size_t i = 0; i < cf.head.size(); ++i)
    os << "  a" << i + 1 << " = " << to_string(cf.head[i].first) << ", b" << i + 1 << " = "
       << to_string(cf.head[i].second) << "\n";
  if (cf.a_rule) {
    os << "  a_n = " << rule_string(*cf.a_rule) << "\n";
    os << "  b_n = " << rule_string(*cf.b_rule) << "\n";
  }
}

struct Config {
  std::string filter = "*";
  std::string format = "table";
  std::string output;
  std::string params;
  long digits = 20;
  long verify_digits = 0;  // 0: tier goals
  long terms = 2000000;
  bool all = false;
  bool serial = false;
  long fast = 30, moderate = 20, slow = 10;
  long bench_terms = 200;
  long cap = 60;
  std::string series;
  std::string theorem = "I";
  long check = 25;
  std::string id;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

int cmd_list(const Config& c) {
  if (c.format == "json") {
    emit(registry_json(c.filter) + "\n", c.output);
    return kOk;
  }
  if (c.format != "table") throw CLI::ValidationError("--format", "list supports table or json");
  std::ostringstream os;
  for (const CatalogEntry* e : select_entries(c.filter)) {
    std::string params;
    for (const ParamSpec& p : e->params) params += (params.empty() ? "" : ", ") + p.name + ": " + p.range;
    os << std::left << std::setw(26) << e->id << std::setw(4) << e->sweep.size() << e->provenance;
    if (!params.empty()) os << "  [" << params << "]";
    os << "\n";
  }
  emit(os.str(), c.output);
  return kOk;
}

int cmd_eval(const Config& c) {
  if (c.digits < 1) throw CLI::ValidationError("--digits", "must be at least 1");
  if (!find_entry(c.id)) {
    std::cerr << "cf-lab: unknown entry '" << c.id << "' (see cf-lab list)\n";
    return kUsage;
  }
  Instance inst = instantiate(c.id, parse_params(c.params));
  try {
    CFEvaluation ev = eval_cf(inst.cf, c.digits, c.terms);
    std::cout << ev.value.to_string(c.digits) << "\n";
    std::cout << "terms: " << ev.terms_used << "\n";
    std::cout << "status: " << (ev.exact ? "exact (finite fraction)" : ev.certified ? "certified (bracketed)" : "heuristic stop")
              << "\n";
    std::cout << "target: " << inst.target.text << "\n";
  } catch (const ConvergenceError& e) {
    std::cerr << "cf-lab: " << inst.label() << ": " << e.what() << "\n";
    return kConvergence;
  }
  return kOk;
}

int cmd_verify(const Config& c) {
  VerifyOptions o;
  o.filter = c.all ? "*" : c.filter;
  o.max_terms = c.terms;
  o.parallel = !c.serial;
  o.fast_digits = c.fast;
  o.moderate_digits = c.moderate;
  o.slow_digits = c.slow;
  if (c.verify_digits < 0) throw CLI::ValidationError("--digits", "must be positive");
  if (c.verify_digits > 0) o.digits = c.verify_digits;
  std::optional<ReportFormat> fmt;
  if (c.format != "table") {
    fmt = parse_format(c.format);
    if (!fmt) throw CLI::ValidationError("--format", "use table, json, csv or markdown");
  }
  std::vector<VerificationReport> reports = verify_all(o);

  long failures = 0;
  for (const VerificationReport& r : reports) {
    if (!r.pass) {
      ++failures;
      std::cerr << "FAIL " << r.label() << ": " << r.message << "\n";
    }
  }
  if (fmt) {
    emit(render_reports(reports, *fmt), c.output);
  } else {
    // a table goes to the terminal; a report file is written as JSON
    if (!c.output.empty()) write_file(c.output, reports_to_json(reports));
    for (const VerificationReport& r : reports)
      std::cout << (r.pass ? "pass " : "FAIL ") << std::left << std::setw(34) << r.label() << " digits " << std::setw(3)
                << r.digits << " terms " << std::setw(8) << r.terms << " error " << r.error.to_scientific()
                << (r.certified ? "  certified" : "") << "\n";
  }
  size_t entries = select_entries(o.filter).size();
  // keep stdout parseable when it carries a machine-readable report
  std::ostream& summary = fmt && c.output.empty() ? std::cerr : std::cout;
  summary << entries << " entries, " << reports.size() << " instantiations, " << failures << " failures\n";
  return failures == 0 ? kOk : kConvergence;
}

int cmd_transform(const Config& c) {
  auto s = named_alt_series(c.series);
  if (!s) {
    std::cerr << "cf-lab: unknown series '" << c.series << "'; available:";
    for (const std::string& id : named_alt_series_ids()) std::cerr << " " << id;
    std::cerr << "\n";
    return kUsage;
  }
  if (c.theorem != "I" && c.theorem != "II") throw CLI::ValidationError("--theorem", "use I or II");
  CFSpec cf = c.theorem == "I" ? theorem1_transform(*s) : theorem2_transform(*s);
  std::cout << "series " << c.series << " (" << to_string(s->kind) << "), theorem " << c.theorem << "\n";
  print_cf(std::cout, cf);
  IdentityReport rep = check_partial_sum_identity(*s, cf, c.check);
  std::cout << "identity " << rep.relation << ": " << (rep.ok ? "holds" : "FAILS") << " for n = 1.." << rep.checked;
  if (!rep.ok) std::cout << " (first failure at n = " << rep.first_failure << ")";
  std::cout << "\n";
  return rep.ok ? kOk : kConvergence;
}

int cmd_bench(const Config& c) {
  std::vector<ConvergenceProfile> profiles;
  std::vector<Instance> instances = default_instances(c.filter);
  profiles.resize(instances.size());
  for (size_t i = 0; i < instances.size(); ++i) profiles[i] = convergence_profile(instances[i], c.bench_terms, c.cap);
  std::string fmt = c.format == "table" ? "csv" : c.format;
  if (fmt == "csv") emit(profiles_to_csv(profiles), c.output);
  else if (fmt == "json") emit(profiles_to_json(profiles), c.output);
  else throw CLI::ValidationError("--format", "bench supports csv or json");
  for (const ConvergenceProfile& p : profiles)
    std::cerr << (p.params.empty() ? p.id : p.id + "(" + p.params + ")") << ": d(" << c.bench_terms
              << ") = " << p.digits.back() << ", slope " << p.slope << " digits/term\n";
  return kOk;
}

int cmd_constants(const Config& c) {
  if (c.digits < 1) throw CLI::ValidationError("--digits", "must be at least 1");
  CrossCheck pi = cross_check_pi(c.digits);
  CrossCheck g = cross_check_catalan(c.digits);
  if (!pi.consistent || !g.consistent) throw OracleMismatch("reference constants disagree between methods");
  auto mark = [&](const CrossCheck& x) {
    return x.agreed_digits >= c.digits ? "  verified: dual-method (" + std::to_string(x.agreed_digits) + " digits agree)"
                                       : std::string("  dual-method agreement below request");
  };
  std::cout << "pi    = " << pi_reference(c.digits).to_string(c.digits) << mark(pi) << "\n";
  std::cout << "G     = " << catalan_reference(c.digits).to_string(c.digits) << mark(g) << "\n";
  std::cout << "sqrt3 = " << sqrt3_reference(c.digits).to_string(c.digits) << "  (Newton, exact rationals)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued fractions for pi and Catalan's constant: evaluation and verification"};
  app.require_subcommand(1);
  Config c;
  long max_digits = max_reference_digits();
  app.add_option("--max-digits", max_digits, "Largest precision accepted for reference constants")
      ->envname("CF_LAB_MAX_DIGITS");

  auto* list = app.add_subcommand("list", "List catalog entries with provenance");
  list->add_option("--filter", c.filter, "Id glob")->envname("CF_LAB_FILTER");
  list->add_option("--format", c.format, "table or json")->envname("CF_LAB_FORMAT");
  list->add_option("-o,--output", c.output, "Output file")->envname("CF_LAB_OUTPUT");

  auto* eval = app.add_subcommand("eval", "Evaluate one catalog fraction");
  eval->add_option("id", c.id, "Entry id")->required();
  eval->add_option("-p,--params", c.params, "Parameters, e.g. k=2 or m=1/2,n=1")->envname("CF_LAB_PARAMS");
  eval->add_option("--digits", c.digits, "Decimal digits")->envname("CF_LAB_DIGITS");
  eval->add_option("--terms", c.terms, "Maximum number of terms")->envname("CF_LAB_TERMS");

  auto* verify = app.add_subcommand("verify", "Verify catalog instances against their targets");
  verify->add_flag("--all", c.all, "Every entry (same as --filter '*')");
  verify->add_option("--filter", c.filter, "Id glob")->envname("CF_LAB_FILTER");
  verify->add_option("--digits", c.verify_digits, "Digits for every instance (default: tier goals)")
      ->envname("CF_LAB_DIGITS");
  verify->add_option("--fast-digits", c.fast, "Goal for fast entries")->envname("CF_LAB_FAST_DIGITS");
  verify->add_option("--moderate-digits", c.moderate, "Goal for moderate entries")->envname("CF_LAB_MODERATE_DIGITS");
  verify->add_option("--slow-digits", c.slow, "Goal for slow entries")->envname("CF_LAB_SLOW_DIGITS");
  verify->add_option("--terms", c.terms, "Maximum terms per fraction")->envname("CF_LAB_TERMS");
  verify->add_option("--format", c.format, "table, json, csv or markdown")->envname("CF_LAB_FORMAT");
  verify->add_option("-o,--output", c.output, "Report file")->envname("CF_LAB_OUTPUT");
  verify->add_flag("--serial", c.serial, "Disable the parallel sweep")->envname("CF_LAB_SERIAL");

  auto* transform = app.add_subcommand("transform", "Euler's series-to-fraction transforms");
  transform->add_option("series", c.series, "Series id")->required();
  transform->add_option("--theorem", c.theorem, "I or II")->envname("CF_LAB_THEOREM");
  transform->add_option("--check", c.check, "Check the partial-sum identity for n = 1..N")
      ->envname("CF_LAB_CHECK");

  auto* bench = app.add_subcommand("bench", "Convergence profiles (correct digits per term)");
  bench->add_option("--filter", c.filter, "Id glob")->envname("CF_LAB_FILTER");
  bench->add_option("--terms", c.bench_terms, "Number of convergents")->envname("CF_LAB_BENCH_TERMS");
  bench->add_option("--cap", c.cap, "Digit ceiling")->envname("CF_LAB_CAP");
  bench->add_option("--format", c.format, "csv or json")->envname("CF_LAB_FORMAT");
  bench->add_option("-o,--output", c.output, "Output file (default stdout)")->envname("CF_LAB_OUTPUT");

  auto* constants = app.add_subcommand("constants", "Reference values of pi, G and sqrt3");
  constants->add_option("--digits", c.digits, "Decimal digits")->envname("CF_LAB_DIGITS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    set_max_reference_digits(max_digits);
    if (*list) return cmd_list(c);
    if (*eval) return cmd_eval(c);
    if (*verify) return cmd_verify(c);
    if (*transform) return cmd_transform(c);
    if (*bench) return cmd_bench(c);
    if (*constants) return cmd_constants(c);
  } catch (const CLI::Error& e) {
    std::cerr << "cf-lab: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "cf-lab: " << e.what() << "\n";
    return kIo;
  } catch (const DomainError& e) {
    std::cerr << "cf-lab: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "cf-lab: " << e.what() << "\n";
    return kUsage;
  } catch (const EvaluationError& e) {
    std::cerr << "cf-lab: " << e.what() << "\n";
    return kConvergence;
  } catch (const std::exception& e) {
    std::cerr << "cf-lab: " << e.what() << "\n";
    return kConvergence;
  }
  return kUsage;
}
