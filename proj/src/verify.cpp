#include "cflab/verify.hpp"

#include "cflab/errors.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace cflab {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

// Decimal text printed by HPReal::to_string, widened by one unit in its last place.
HPReal parse_printed(const std::string& text, long scale) {
  size_t dot = text.find('.');
  long decimals = dot == std::string::npos ? 0 : static_cast<long>(text.size() - dot - 1);
  HPReal v = HPReal::from_rational(parse_rational(text), scale);
  return v.widened(scale > decimals ? pow10(scale - decimals) : BigInt(1));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

json error_json(const HPReal& e) {
  return {{"mantissa", e.mantissa().get_str()}, {"scale", e.scale()}, {"ulps", e.error_ulps().get_str()}};
}

HPReal error_from_json(const json& j) {
  return HPReal(BigInt(j.at("mantissa").get<std::string>()), j.at("scale").get<long>(),
                BigInt(j.at("ulps").get<std::string>()));
}

}  // namespace

VerificationReport verify_instance(const Instance& inst, long digits, long max_terms, const AtomOffsets& offsets) {
  VerificationReport r;
  r.id = inst.id;
  r.params = format_params(inst.params);
  r.tier = to_string(inst.tier);
  r.digits = digits;
  auto t0 = Clock::now();
  auto finish = [&] {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
  };
  const long scale = digits + 10;
  try {
    HPReal target = inst.target.eval(digits + 10, offsets);
    HPReal value;
    try {
      CFEvaluation ev = eval_cf(inst.cf, digits, max_terms);
      value = ev.value;
      r.terms = ev.terms_used;
      r.certified = ev.certified;
    } catch (const ConvergenceError& e) {
      r.terms = e.terms();
      r.message = e.what();
      r.value = e.last_value();
      r.error = abs_diff(parse_printed(e.last_value(), scale), target);
      return finish();
    }
    r.value = value.to_string(digits);
    r.error = abs_diff(value, target);
    r.pass = certainly_below_pow10(r.error, digits);
    if (!r.pass) r.message = "error " + r.error.to_scientific() + " is not below 1e-" + std::to_string(digits);

    if (inst.product_form) {
      const ProductForm& pf = *inst.product_form;
      HPReal lhs = HPReal::from_rational(pf.factor, scale) * (HPReal::from_rational(pf.offset, scale) + value);
      HPReal rhs = const_expr_eval(pf.target, digits + 10, offsets);
      HPReal e2 = abs_diff(lhs, rhs);
      if (!certainly_below_pow10(e2, digits)) {
        r.pass = false;
        r.message += (r.message.empty() ? "" : "; ") + std::string("product form ") + pf.text + " off by " +
                     e2.to_scientific();
      }
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.message = e.what();
  }
  return finish();
}

VerificationReport verify_entry(const std::string& id, const ParamValues& params, long digits, long max_terms) {
  return verify_instance(instantiate(id, params), digits, max_terms);
}

std::vector<VerificationReport> verify_all(const VerifyOptions& opts) {
  std::vector<Instance> instances = default_instances(opts.filter);
  std::vector<VerificationReport> out(instances.size());
  const long n = static_cast<long>(instances.size());
  auto run = [&](long i) {
    const Instance& inst = instances[static_cast<size_t>(i)];
    long goal = inst.tier == Tier::Fast ? opts.fast_digits
                : inst.tier == Tier::Moderate ? opts.moderate_digits
                                              : opts.slow_digits;
    long d = opts.digits.value_or(goal);
    out[static_cast<size_t>(i)] = verify_instance(inst, d, opts.max_terms, opts.offsets);
  };
  if (opts.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) run(i);
  } else {
    for (long i = 0; i < n; ++i) run(i);
  }
  return out;
}

ConvergenceProfile convergence_profile(const Instance& inst, long N, long cap) {
  if (N < 10) throw DomainError("convergence profile needs N >= 10");
  if (cap < 1) throw DomainError("digit cap must be positive");
  ConvergenceProfile p;
  p.id = inst.id;
  p.params = format_params(inst.params);
  p.cap = cap;
  HPReal target = inst.target.eval(cap + 10);
  ConvergentStream stream(inst.cf, cap + 10);
  long last = 0;
  bool ended = false;
  for (long n = 1; n <= N; ++n) {
    if (!ended && !stream.advance()) ended = true;
    if (!ended || n == 1) last = std::max(0L, correct_digits(abs_diff(stream.value(), target), cap));
    p.digits.push_back(last);
  }
  // least squares on the final third
  long from = N - N / 3;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0;
  for (long n = from; n <= N; ++n) {
    double x = static_cast<double>(n), y = static_cast<double>(p.digits[static_cast<size_t>(n - 1)]);
    sx += x, sy += y, sxx += x * x, sxy += x * y, m += 1;
  }
  double den = m * sxx - sx * sx;
  p.slope = den == 0 ? 0 : (m * sxy - sx * sy) / den;
  return p;
}

std::optional<ReportFormat> parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "markdown" || s == "md") return ReportFormat::Markdown;
  return std::nullopt;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const VerificationReport& r : reports) {
    arr.push_back({{"id", r.id},
                   {"params", r.params},
                   {"tier", r.tier},
                   {"digits", r.digits},
                   {"terms", r.terms},
                   {"error", r.error.to_scientific()},
                   {"error_exact", error_json(r.error)},
                   {"certified", r.certified},
                   {"pass", r.pass},
                   {"elapsed_ms", r.elapsed_ms},
                   {"value", r.value},
                   {"message", r.message}});
  }
  return arr.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  std::vector<VerificationReport> out;
  try {
    json arr = json::parse(text);
    if (!arr.is_array()) throw IoError("report JSON must be an array");
    for (const json& j : arr) {
      VerificationReport r;
      r.id = j.at("id").get<std::string>();
      r.params = j.at("params").get<std::string>();
      r.tier = j.at("tier").get<std::string>();
      r.digits = j.at("digits").get<long>();
      r.terms = j.at("terms").get<long>();
      r.error = error_from_json(j.at("error_exact"));
      r.certified = j.at("certified").get<bool>();
      r.pass = j.at("pass").get<bool>();
      r.elapsed_ms = j.at("elapsed_ms").get<double>();
      r.value = j.at("value").get<std::string>();
      r.message = j.at("message").get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed report JSON: ") + e.what());
  }
  return out;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "id,params,digits,terms,error,certified,pass\n";
  for (const VerificationReport& r : reports) {
    os << csv_field(r.id) << ',' << csv_field(r.params) << ',' << r.digits << ',' << r.terms << ','
       << r.error.to_scientific() << ',' << (r.certified ? "true" : "false") << ',' << (r.pass ? "true" : "false")
       << '\n';
  }
  return os.str();
}

std::string reports_to_markdown(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "| id | params | tier | digits | terms | error | certified | pass | provenance |\n";
  os << "|---|---|---|---|---|---|---|---|---|\n";
  for (const VerificationReport& r : reports) {
    const CatalogEntry* e = find_entry(r.id);
    os << "| " << md_cell(r.id) << " | " << md_cell(r.params) << " | " << r.tier << " | " << r.digits << " | "
       << r.terms << " | " << r.error.to_scientific() << " | " << (r.certified ? "yes" : "no") << " | "
       << (r.pass ? "pass" : "FAIL") << " | " << md_cell(e ? e->provenance : "") << " |\n";
  }
  return os.str();
}

std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat f) {
  switch (f) {
    case ReportFormat::Json: return reports_to_json(reports);
    case ReportFormat::Csv: return reports_to_csv(reports);
    default: return reports_to_markdown(reports);
  }
}

std::string profiles_to_csv(const std::vector<ConvergenceProfile>& profiles) {
  std::ostringstream os;
  os << "id,params,n,digits\n";
  for (const ConvergenceProfile& p : profiles)
    for (size_t i = 0; i < p.digits.size(); ++i)
      os << csv_field(p.id) << ',' << csv_field(p.params) << ',' << i + 1 << ',' << p.digits[i] << '\n';
  return os.str();
}

std::string profiles_to_json(const std::vector<ConvergenceProfile>& profiles) {
  json arr = json::array();
  for (const ConvergenceProfile& p : profiles)
    arr.push_back({{"id", p.id}, {"params", p.params}, {"cap", p.cap}, {"slope", p.slope}, {"digits", p.digits}});
  return arr.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) throw IoError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void export_reports(const std::vector<VerificationReport>& reports, ReportFormat f, const std::string& path) {
  write_file(path, render_reports(reports, f));
}

}  // namespace cflab
