#pragma once

#include "cflab/catalog.hpp"
#include "cflab/const_expr.hpp"
#include "cflab/hpreal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cflab {

struct VerificationReport {
  std::string id;
  std::string params;  // format_params form
  std::string tier;
  long digits = 0;
  long terms = 0;
  HPReal error;        // upper bound comes from mantissa + error_ulps
  bool certified = false;
  bool pass = false;
  double elapsed_ms = 0;
  std::string value;   // CF value, truncated to `digits`
  std::string message; // diagnostics, empty on a clean pass

  std::string label() const { return params.empty() ? id : id + "(" + params + ")"; }
};

struct VerifyOptions {
  std::string filter = "*";
  std::optional<long> digits;  // overrides the tier goal for every instance
  long fast_digits = 30;
  long moderate_digits = 20;
  long slow_digits = 10;
  long max_terms = 2000000;
  AtomOffsets offsets;
  bool parallel = true;
};

/// Evaluates the instance's fraction and target at `digits` (+10 guard on the
/// target) and compares. Failures to converge or evaluate become failing
/// reports rather than exceptions.
VerificationReport verify_instance(const Instance& inst, long digits, long max_terms = 2000000,
                                   const AtomOffsets& offsets = {});

/// instantiate + verify_instance. Throws DomainError for unknown ids or
/// out-of-range parameters.
VerificationReport verify_entry(const std::string& id, const ParamValues& params, long digits,
                                long max_terms = 2000000);

/// Every default instance matching the filter, at its tier goal (or the
/// single `digits` override). Ordered by id, then sweep position, independent of threads.
std::vector<VerificationReport> verify_all(const VerifyOptions& opts = {});

struct ConvergenceProfile {
  std::string id;
  std::string params;
  long cap = 0;                  // digit ceiling of the measurement
  std::vector<long> digits;      // digits[i] = correct digits of c_(i+1)
  double slope = 0;              // least-squares digits per term, final third
};

/// Correct digits of c_n against the target for n = 1..N, capped at `cap`.
/// Throws DomainError for N < 10.
ConvergenceProfile convergence_profile(const Instance& inst, long N, long cap = 60);

enum class ReportFormat { Json, Csv, Markdown };
std::optional<ReportFormat> parse_format(const std::string& s);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> reports_from_json(const std::string& text);
/// Header: id,params,digits,terms,error,certified,pass
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
/// One table row per report, with a provenance column.
std::string reports_to_markdown(const std::vector<VerificationReport>& reports);
std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat f);

/// Header: id,params,n,digits
std::string profiles_to_csv(const std::vector<ConvergenceProfile>& profiles);
std::string profiles_to_json(const std::vector<ConvergenceProfile>& profiles);

/// Writes text to path. Throws IoError naming the path on failure.
void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);
void export_reports(const std::vector<VerificationReport>& reports, ReportFormat f, const std::string& path);

}  // namespace cflab
