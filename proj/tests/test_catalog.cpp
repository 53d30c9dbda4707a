#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cflab/catalog.hpp"
#include "cflab/constants.hpp"
#include "cflab/errors.hpp"

#include "json.hpp"

#include <set>

using namespace cflab;

namespace {

ParamValues P(std::initializer_list<std::pair<const char*, Rational>> v) {
  ParamValues out;
  for (const auto& [k, x] : v) out.emplace_back(k, x);
  return out;
}

HPReal value_of(const Instance& inst, long digits) { return eval_cf(inst.cf, digits, 2000000).value; }

}  // namespace

TEST_CASE("registry contents") {
  const auto& entries = list_entries();
  CHECK(entries.size() == 26);
  std::set<std::string> ids;
  for (const CatalogEntry& e : entries) {
    ids.insert(e.id);
    CHECK(!e.title.empty());
    CHECK(!e.provenance.empty());
    CHECK(!e.sweep.empty());
  }
  CHECK(ids.size() == 26);
  for (const char* id : {"brouncker", "euler_integral", "pi8_disguise", "pi_over2_minus1", "convergent_relation",
                         "general_formula", "euler_s31", "euler_s33", "six_sqrt3_over_pi", "glaisher_2_over_pi",
                         "glaisher_3sqrt3_over_pi", "thm3_family", "lange", "ten_cf", "sixteen_over_pi",
                         "osler_class1", "osler_class2", "gamma_quotient", "ramanujan_2G_a", "ramanujan_2G_b",
                         "entry16", "bowman", "thm4_family", "sec5_cf1", "sec5_cf2", "sec5_cf3"})
    CHECK(ids.count(id) == 1);
  CHECK(std::is_sorted(entries.begin(), entries.end(),
                       [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; }));
  CHECK(find_entry("nosuch") == nullptr);
}

TEST_CASE("every default instance builds") {
  auto all = default_instances();
  CHECK(all.size() == 84);
  for (const Instance& inst : all) {
    CAPTURE(inst.label());
    CHECK_NOTHROW(inst.cf.validate());
    CHECK((inst.target.expr.has_value() || static_cast<bool>(inst.target.oracle)));
  }
  CHECK(default_instances("thm*").size() == 7 + 6);
  CHECK(default_instances("sec5_cf?").size() == 3);
  CHECK(default_instances("zzz").empty());
}

TEST_CASE("parameters") {
  CHECK(format_params(P({{"m", 4}, {"n", 2}})) == "m=4,n=2");
  CHECK(parse_params("m=4,n=2") == P({{"m", 4}, {"n", 2}}));
  CHECK(parse_params("x=1/2, y=3") == P({{"x", Rational(1, 2)}, {"y", 3}}));
  CHECK(parse_params("").empty());
  CHECK_THROWS_AS(parse_params("m"), DomainError);
  CHECK_THROWS_AS(instantiate("nosuch"), DomainError);
  CHECK_THROWS_AS(instantiate("thm3_family", P({{"f", 0}})), DomainError);
  CHECK_THROWS_AS(instantiate("thm3_family", P({{"f", Rational(5, 2)}})), DomainError);
  CHECK_THROWS_AS(instantiate("thm3_family", P({{"g", 3}})), DomainError);
  CHECK_THROWS_AS(instantiate("general_formula", P({{"n", -2}})), DomainError);
  CHECK_THROWS_AS(instantiate("entry16", P({{"m", -1}, {"n", 0}})), DomainError);
  CHECK(instantiate("thm3_family").params.size() == 1);
  CHECK(instantiate("euler_integral", P({{"m", 4}, {"n", 2}})).label() == "euler_integral(m=4,n=2)");
}

TEST_CASE("Wallis and Ramanujan products") {
  CHECK(wallis_P(0) == 1);
  CHECK(wallis_P(1) == Rational(3, 4));
  CHECK(wallis_P(2) == Rational(45, 64));
  CHECK(ramanujan_P(-1) == Rational(1, 2));
  CHECK(ramanujan_P(0) == 1);
  CHECK(ramanujan_P(1) == Rational(2, 3));
  CHECK(ramanujan_P(4) == Rational(64, 75));
  CHECK_THROWS_AS(wallis_P(-1), DomainError);
  CHECK_THROWS_AS(ramanujan_P(-2), DomainError);
}

TEST_CASE("convergent relation") {
  RelationReport r = convergent_relation_check(30);
  CHECK(r.ok);
  CHECK(r.checked == 30);
  CHECK(r.offset == 0);
  CHECK(r.shift == 1);
}

TEST_CASE("family coefficients") {
  Instance t = instantiate("thm3_family", P({{"f", 4}}));
  CHECK(t.cf.b0 == 7);
  CHECK(t.cf.term(1)->first == 1 * 7);
  CHECK(t.cf.term(2)->first == 3 * 9);
  CHECK(t.cf.term(3)->second == 8);
  CHECK(t.target.expr.has_value());
  CHECK(*t.target.expr == ConstExpr(24) / (ConstExpr::pi(15) - ConstExpr(44)));

  Instance k3 = instantiate("thm4_family", P({{"k", 3}}));
  CHECK(k3.cf.b0 == 49);
  CHECK(k3.cf.term(4)->second == 15 * 15 - 7 * 7);
}

TEST_CASE("Osler classes multiply to an integer") {
  for (long n = 0; n <= 4; ++n) {
    Instance a = instantiate("osler_class1", P({{"n", n}}));
    Instance b = instantiate("osler_class2", P({{"n", n}}));
    HPReal va = const_expr_eval(*a.target.expr, 30), vb = const_expr_eval(*b.target.expr, 30);
    HPReal expect = HPReal::from_integer(4 * (2 * n + 1) * (2 * n + 1), 30);
    CHECK(certainly_below_pow10(abs_diff(va * vb, expect), 25));
  }
}

TEST_CASE("gamma quotient") {
  Instance g = instantiate("gamma_quotient", P({{"x", 2}, {"y", 1}}));
  CFEvaluation ev = eval_cf(g.cf, 20, 1000);
  CHECK(ev.exact);
  CHECK(ev.value.midpoint() == 2);
  CHECK(certainly_below_pow10(abs_diff(g.target.eval(20), HPReal::from_integer(2, 20)), 18));
}

TEST_CASE("cross-entry agreements") {
  Instance e16 = instantiate("entry16", P({{"m", Rational(-1, 2)}, {"n", Rational(-1, 2)}}));
  HPReal four_g = HPReal::from_integer(4, 30) * catalan_reference(25);
  CHECK(certainly_below_pow10(abs_diff(e16.target.eval(20), four_g), 15));
  Instance bow = instantiate("bowman");

  Instance t0 = instantiate("thm4_family", P({{"k", 0}}));
  HPReal prod = value_of(t0, 7) * value_of(bow, 7);
  CHECK(certainly_below_pow10(abs_diff(prod, HPReal::from_integer(1, 10)), 6));

  Instance gf = instantiate("general_formula", P({{"n", -1}}));
  Instance pm = instantiate("pi_over2_minus1");
  auto a = convergents(gf.cf, 20), b = convergents(pm.cf, 20);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].value() == b[i].value());
}

TEST_CASE("fast closed-form entries reach 30 digits") {
  for (const char* id : {"six_sqrt3_over_pi", "glaisher_2_over_pi", "sec5_cf1", "sec5_cf2", "sec5_cf3"}) {
    Instance inst = instantiate(id);
    CAPTURE(id);
    CHECK(inst.tier == Tier::Fast);
    CHECK(certainly_below_pow10(abs_diff(value_of(inst, 30), inst.target.eval(40)), 30));
  }
}

TEST_CASE("tiers") {
  CHECK(parse_tier("moderate") == Tier::Moderate);
  CHECK(!parse_tier("quick"));
  CHECK(tier_digits(Tier::Fast) == 30);
  CHECK(tier_digits(Tier::Slow) == 10);
  CHECK(instantiate("general_formula", P({{"n", -1}})).tier == Tier::Slow);
  CHECK(instantiate("general_formula", P({{"n", 3}})).tier == Tier::Fast);
}

TEST_CASE("glob and JSON") {
  CHECK(glob_match("thm*", "thm3_family"));
  CHECK(!glob_match("thm*", "sec5_cf1"));
  CHECK(select_entries("*").size() == 26);
  auto j = nlohmann::json::parse(registry_json("lange"));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["id"] == "lange");
  auto c = nlohmann::json::parse(cf_json(instantiate("lange").cf));
  CHECK(c["b0"] == "6");
}
