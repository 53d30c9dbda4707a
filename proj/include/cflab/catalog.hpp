#pragma once

#include "cflab/cf.hpp"
#include "cflab/const_expr.hpp"
#include "cflab/hpreal.hpp"
#include "cflab/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cflab {

/// Digit goal used when verifying an instance: fast 30, moderate 20, slow 10.
enum class Tier { Fast, Moderate, Slow };

std::string to_string(Tier t);
std::optional<Tier> parse_tier(const std::string& s);
long tier_digits(Tier t);

struct ParamSpec {
  std::string name;
  bool integer = true;
  std::optional<Rational> lower;  // inclusive unless lower_strict
  bool lower_strict = false;
  Rational fallback = 0;          // value used when the caller omits it
  std::string range;              // human-readable, e.g. "integer >= -1"
};

/// Parameter values in declaration order.
using ParamValues = std::vector<std::pair<std::string, Rational>>;

/// "m=4,n=2"; empty for parameterless entries.
std::string format_params(const ParamValues& p);
/// Inverse of format_params. Throws DomainError on malformed text.
ParamValues parse_params(const std::string& text);

/// Exact closed form, or an oracle with its own error bound.
struct Target {
  std::string text;
  std::optional<ConstExpr> expr;
  std::function<HPReal(long digits)> oracle;

  /// Value with at least `digits` correct decimals. Offsets only affect
  /// closed-form targets.
  HPReal eval(long digits, const AtomOffsets& offsets = {}) const;
};

/// factor·(offset + CF) = target: a second arrangement checked alongside
/// the direct one.
struct ProductForm {
  Rational factor;
  Rational offset;
  ConstExpr target;
  std::string text;
};

struct Instance {
  std::string id;
  ParamValues params;
  CFSpec cf;
  Target target;
  Tier tier = Tier::Slow;
  std::optional<ProductForm> product_form;

  /// "id" or "id(m=4,n=2)".
  std::string label() const;
};

struct CatalogEntry {
  std::string id;
  std::string title;
  std::string provenance;
  std::vector<ParamSpec> params;
  std::vector<ParamValues> sweep;
  std::function<Instance(const ParamValues&)> build;
};

/// The registry, sorted by id.
const std::vector<CatalogEntry>& list_entries();
const CatalogEntry* find_entry(const std::string& id);

/// Shell-style glob match ("thm*", "sec5_?").
bool glob_match(const std::string& pattern, const std::string& text);

/// Entries whose id matches `filter`.
std::vector<const CatalogEntry*> select_entries(const std::string& filter);

/// Builds one instance. Omitted parameters take their fallback value.
/// Throws DomainError for unknown ids or names and out-of-range values.
Instance instantiate(const std::string& id, const ParamValues& params = {});

/// Every default-sweep instance of the entries matching `filter`, ordered by
/// id and then by sweep position.
std::vector<Instance> default_instances(const std::string& filter = "*");

/// P_0 = 1, P_n = ∏_{k=1}^n (2k-1)(2k+1)/(2k)².
Rational wallis_P(long n);

/// P_-1 = 1/2, P_2m = ∏_{k=1}^m 2k(2k+2)/(2k+1)², P_2m+1 = P_2m·(2m+2)/(2m+3).
Rational ramanujan_P(long n);

/// Correspondence between the recurrence p_(n+1) = (2n+3)p_n + (-1)^n 2(2n-1)!!,
/// q_n = (2n+1)!!, p_0 = q_0 = 1 and the approximants c_j of the π/2 - 1
/// fraction: p_n/q_n = shift + c_(n+offset) for n = 1..checked.
struct RelationReport {
  bool ok = false;
  long checked = 0;
  int offset = 0;
  int shift = 0;
  long first_mismatch = -1;  // for the best candidate when !ok
  std::string detail;
};

/// Tries offset ∈ {-1, 0, 1}, shift ∈ {0, 1} with exact comparisons.
RelationReport convergent_relation_check(long N);

/// JSON array describing the matching entries and their default instances.
std::string registry_json(const std::string& filter = "*", int indent = 2);

/// JSON object for one fraction: b0, head pairs and rules as coefficient lists.
std::string cf_json(const CFSpec& cf, int indent = -1);

}  // namespace cflab
