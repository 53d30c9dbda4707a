#include "cflab/catalog.hpp"

#include "cflab/constants.hpp"
#include "cflab/errors.hpp"
#include "cflab/gamma.hpp"
#include "cflab/polynomial.hpp"
#include "cflab/series.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <map>
#include "json.hpp"

namespace cflab {

namespace {

using json = nlohmann::json;

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Polynomial lin(const Rational& slope, const Rational& intercept) { return Polynomial::linear(slope, intercept); }
Polynomial poly(std::initializer_list<long> c) { return Polynomial::from_ints(c); }

CFSpec simple_cf(const Rational& b0, const Polynomial& a, const Polynomial& b) {
  CFSpec cf;
  cf.b0 = b0;
  cf.a_rule = CoeffRule(a);
  cf.b_rule = CoeffRule(b);
  return cf;
}

// One explicit first pair, then rules from index 2.
CFSpec headed_cf(const Rational& b0, const Rational& a1, const Rational& b1, const Polynomial& a,
                 const Polynomial& b) {
  CFSpec cf;
  cf.b0 = b0;
  cf.head = {{a1, b1}};
  cf.a_rule = CoeffRule(a, 2);
  cf.b_rule = CoeffRule(b, 2);
  return cf;
}

Target exact(const ConstExpr& e) { return Target{e.to_string(), e, {}}; }

Target oracle(std::string text, std::function<HPReal(long)> f) { return Target{std::move(text), std::nullopt, std::move(f)}; }

const Rational& param(const ParamValues& p, const std::string& name) {
  for (const auto& [k, v] : p)
    if (k == name) return v;
  throw DomainError("missing parameter " + name);
}

long int_param(const ParamValues& p, const std::string& name) { return param(p, name).get_num().get_si(); }

ParamSpec int_spec(std::string name, long lower, long fallback) {
  return {std::move(name), true, Rational(lower), false, Rational(fallback), "integer >= " + std::to_string(lower)};
}

ParamSpec real_spec(std::string name, const Rational& above, const Rational& fallback) {
  return {std::move(name), false, above, true, fallback, "rational > " + to_string(above)};
}

std::vector<ParamValues> int_sweep(const std::string& name, long from, long to) {
  std::vector<ParamValues> out;
  for (long v = from; v <= to; ++v) out.push_back({{name, Rational(v)}});
  return out;
}

Instance make(const std::string& id, const ParamValues& p, CFSpec cf, Target t, Tier tier) {
  Instance inst;
  inst.id = id;
  inst.params = p;
  inst.cf = std::move(cf);
  inst.target = std::move(t);
  inst.tier = tier;
  return inst;
}

// Σ_{k≥0} (-1)^k a(k) for completely monotone a, to `digits` decimals.
HPReal alternating_oracle(const std::function<Rational(long)>& a, long digits) {
  return accelerated_alternating_sum(a, working_scale(digits));
}

bool is_nonpositive_integer(const Rational& z) { return z.get_den() == 1 && z <= 0; }

// Γ(z) for non-integer z < 0 through Γ(z) = Γ(z+k) / (z(z+1)…(z+k-1)).
HPReal gamma_any(const Rational& z, long digits) {
  if (z > 0) return gamma_hp(z, digits);
  long k = 0;
  Rational shifted = z;
  Rational prod = 1;
  while (shifted <= 0) {
    prod *= shifted;
    shifted += 1;
    ++k;
  }
  long s = working_scale(digits);
  return gamma_hp(shifted, digits + ceil_log10(BigInt(abs(prod.get_den())) + 1) + 2) / HPReal::from_rational(prod, s);
}

HPReal gamma_quotient_value(const Rational& x, const Rational& y, long digits) {
  Rational top1 = (x + 3 + y) / 4, top2 = (x + 3 - y) / 4;
  Rational bot1 = (x + 1 + y) / 4, bot2 = (x + 1 - y) / 4;
  long s = working_scale(digits);
  // 1/Γ vanishes at the poles, so the quotient is zero there.
  if (is_nonpositive_integer(bot1) || is_nonpositive_integer(bot2)) return HPReal::from_integer(0, s);
  for (long guard = 10;; guard += 10) {
    long g = digits + guard;
    HPReal v = HPReal::from_integer(4, 0) * gamma_any(top1, g) * gamma_any(top2, g) /
               (gamma_any(bot1, g) * gamma_any(bot2, g));
    if (v.digits() >= digits) return v.rescaled(std::min(v.scale(), s));
    if (guard > 4 * digits + 200) throw EvaluationError("gamma quotient did not reach the requested precision");
  }
}

std::vector<CatalogEntry> build_registry() {
  std::vector<CatalogEntry> r;
  const Polynomial odd = lin(2, -1);

  r.push_back({"brouncker", "4/pi = 1 + K (2n-1)^2/2", "Brouncker (1655), converting Wallis's product for 4/pi",
               {}, {{}}, [odd](const ParamValues& p) {
                 return make("brouncker", p, simple_cf(1, odd.pow(2), Polynomial(2)),
                             exact(ConstExpr(4) / ConstExpr::pi()), Tier::Slow);
               }});

  r.push_back({"euler_integral", "int_0^1 x^(n-1)/(1+x^m) dx = 1/(n + n^2/(m + (m+n)^2/(m + ...)))",
               "Euler, E123: the integral formula",
               {real_spec("m", 0, 4), real_spec("n", 0, 2)},
               {{{"m", 4}, {"n", 2}}, {{"m", 1}, {"n", 1}}, {{"m", 2}, {"n", 1}}},
               [](const ParamValues& p) {
                 Rational m = param(p, "m"), n = param(p, "n");
                 // a_k = ((k-2)m + n)^2 for k >= 2
                 CFSpec cf = headed_cf(0, 1, n, lin(m, n - 2 * m).pow(2), Polynomial(m));
                 Target t = oracle("sum_{k>=0} (-1)^k/(" + to_string(n) + " + " + to_string(m) + "k)",
                                   [m, n](long d) {
                                     return alternating_oracle([m, n](long k) -> Rational { return 1 / (n + m * k); }, d);
                                   });
                 return make("euler_integral", p, cf, t, Tier::Slow);
               }});

  r.push_back({"pi8_disguise", "pi/8 = 1/(2 + 2^2/(4 + 6^2/(4 + ...)))",
               "Euler, E123: the integral formula at m = 4, n = 2 (Brouncker's fraction in disguise)", {}, {{}},
               [](const ParamValues& p) {
                 return make("pi8_disguise", p, headed_cf(0, 1, 2, lin(4, -6).pow(2), Polynomial(4)),
                             exact(ConstExpr::pi(Rational(1, 8))), Tier::Slow);
               }});

  auto half_pi_cf = [](const Rational& b0, const Rational& b) {
    return headed_cf(b0, 2, 3, lin(2, -3) * lin(2, -1), Polynomial(b));
  };
  r.push_back({"pi_over2_minus1", "pi/2 - 1 = 2/(3 + 1*3/(4 + 3*5/(4 + ...)))",
               "Euler, E593 Theorem II applied to sum (-1)^(n-1)/((2n-1)(2n+1))", {}, {{}},
               [half_pi_cf](const ParamValues& p) {
                 return make("pi_over2_minus1", p, half_pi_cf(0, 4), exact(ConstExpr::pi(Rational(1, 2)) - ConstExpr(1)),
                             Tier::Slow);
               }});

  r.push_back({"convergent_relation", "pi/2 = 1 + 2/(3 + 1*3/(4 + ...)), approximants p_n/q_n with q_n = (2n+1)!!",
               "Euler's pi/2 - 1 fraction; recurrence for its convergents", {}, {{}},
               [half_pi_cf](const ParamValues& p) {
                 return make("convergent_relation", p, half_pi_cf(1, 4), exact(ConstExpr::pi(Rational(1, 2))),
                             Tier::Slow);
               }});

  r.push_back({"general_formula", "pi/(4 P_n) - 1 = (-1)^(n+1) 2/(4(n+2) + (-1)^n + 1*3/(4(n+2) + 3*5/(...)))",
               "Ramanujan's general formula (via Perron), Wallis partial products P_n",
               {int_spec("n", -1, 4)}, int_sweep("n", -1, 6), [](const ParamValues& p) {
                 long n = int_param(p, "n");
                 Rational sign = n % 2 == 0 ? -1 : 1;  // (-1)^(n+1)
                 Rational b = 4 * (n + 2);
                 CFSpec cf = headed_cf(0, 2 * sign, b - sign, lin(2, -3) * lin(2, -1), Polynomial(b));
                 Rational P = ramanujan_P(n);
                 Instance inst = make("general_formula", p, cf,
                                      exact(ConstExpr::pi(1 / (4 * P)) - ConstExpr(1)),
                                      n >= 1 ? Tier::Fast : n == 0 ? Tier::Moderate : Tier::Slow);
                 inst.product_form = ProductForm{P, 1, ConstExpr::pi(Rational(1, 4)),
                                                 "pi/4 = " + to_string(P) + "*(1 + CF)"};
                 return inst;
               }});

  r.push_back({"euler_s31", "pi/2 = 1 + 1/(1 + 1*2/(1 + 2*3/(1 + ...)))", "Euler, E123", {}, {{}},
               [](const ParamValues& p) {
                 return make("euler_s31", p, headed_cf(1, 1, 1, lin(1, -1) * lin(1, 0), Polynomial(1)),
                             exact(ConstExpr::pi(Rational(1, 2))), Tier::Slow);
               }});

  r.push_back({"euler_s33", "pi/2 = 2 - 1/(2 + 1^2/(2 + 2^2/(2 + ...)))", "Euler, E123", {}, {{}},
               [](const ParamValues& p) {
                 return make("euler_s33", p, headed_cf(2, -1, 2, lin(1, -1).pow(2), Polynomial(2)),
                             exact(ConstExpr::pi(Rational(1, 2))), Tier::Slow);
               }});

  r.push_back({"six_sqrt3_over_pi", "6 sqrt3/pi = 3 + 3*1^2/(8 + 3*3^2/(12 + ...))",
               "Euler, E522 and E593: partial denominators 4n + 4", {}, {{}}, [odd](const ParamValues& p) {
                 return make("six_sqrt3_over_pi", p, simple_cf(3, odd.pow(2) * Polynomial(3), lin(4, 4)),
                             exact(ConstExpr::sqrt3(6) / ConstExpr::pi()), Tier::Fast);
               }});

  r.push_back({"glaisher_2_over_pi", "2/pi = 1 - 1*1/(4 - 2*3/(7 - 3*5/(10 - ...)))",
               "Glaisher (1873/1876), partial denominators 3n + 1", {}, {{}}, [odd](const ParamValues& p) {
                 return make("glaisher_2_over_pi", p, simple_cf(1, lin(-1, 0) * odd, lin(3, 1)),
                             exact(ConstExpr(2) / ConstExpr::pi()), Tier::Fast);
               }});

  r.push_back({"glaisher_3sqrt3_over_pi", "3 sqrt3/pi = 2 - 2(1*1)/(7 - 2(2*3)/(12 - ...))",
               "Glaisher (1873/1876), partial denominators 5n + 2", {}, {{}}, [odd](const ParamValues& p) {
                 return make("glaisher_3sqrt3_over_pi", p, simple_cf(2, lin(-2, 0) * odd, lin(5, 2)),
                             exact(ConstExpr::sqrt3(3) / ConstExpr::pi()), Tier::Fast);
               }});

  r.push_back({"thm3_family", "1/((2f-3)!! y_f) = (2f-1) + K (2n-1)(2n+2f-3)/(2f), f linear factors",
               "Euler's Theorem I applied to the linear-factor series y_f",
               {int_spec("f", 1, 4)}, int_sweep("f", 2, 8), [odd](const ParamValues& p) {
                 long f = int_param(p, "f");
                 CFSpec cf = simple_cf(2 * f - 1, odd * lin(2, 2 * f - 3), Polynomial(2 * f));
                 ConstExpr t = (linear_y_closed(f) * ConstExpr(Rational(double_factorial(2 * f - 3)))).reciprocal();
                 return make("thm3_family", p, cf, exact(t), f >= 7 ? Tier::Fast : f >= 5 ? Tier::Moderate : Tier::Slow);
               }});

  r.push_back({"lange", "1/(pi-3) = 6 + 3^2/(6 + 5^2/(6 + ...))",
               "Lange (1999); earlier Castellanos (1988), after Euler", {}, {{}}, [](const ParamValues& p) {
                 return make("lange", p, simple_cf(6, lin(2, 1).pow(2), Polynomial(6)),
                             exact((ConstExpr::pi() - ConstExpr(3)).reciprocal()), Tier::Slow);
               }});

  r.push_back({"ten_cf", "6/(10-3pi) = 10 + 1*5/(10 + 3*7/(10 + ...))",
               "Euler's method applied to the series for (10-3pi)/72", {}, {{}}, [odd](const ParamValues& p) {
                 return make("ten_cf", p, simple_cf(10, odd * lin(2, 3), Polynomial(10)),
                             exact(ConstExpr(6) / (ConstExpr(10) - ConstExpr::pi(3))), Tier::Moderate);
               }});

  r.push_back({"sixteen_over_pi", "16/pi = 5 + 1^2/(10 + 3^2/(10 + ...))", "Euler, E745; Osler", {}, {{}},
               [odd](const ParamValues& p) {
                 return make("sixteen_over_pi", p, simple_cf(5, odd.pow(2), Polynomial(10)),
                             exact(ConstExpr(16) / ConstExpr::pi()), Tier::Moderate);
               }});

  r.push_back({"osler_class1", "(4n+1) + K (2k-1)^2/(2(4n+1)) = (2n+1)/P_n * 4/pi",
               "Osler; also in Perron; known to Wallis", {int_spec("n", 0, 0)}, int_sweep("n", 0, 5),
               [odd](const ParamValues& p) {
                 long n = int_param(p, "n");
                 CFSpec cf = simple_cf(4 * n + 1, odd.pow(2), Polynomial(2 * (4 * n + 1)));
                 ConstExpr t = ConstExpr(4 * (2 * n + 1) / wallis_P(n)) / ConstExpr::pi();
                 return make("osler_class1", p, cf, exact(t), n >= 2 ? Tier::Fast : n == 1 ? Tier::Moderate : Tier::Slow);
               }});

  r.push_back({"osler_class2", "(4n+3) + K (2k-1)^2/(2(4n+3)) = (2n+1) P_n pi",
               "Osler; also in Perron; known to Wallis", {int_spec("n", 0, 0)}, int_sweep("n", 0, 5),
               [odd](const ParamValues& p) {
                 long n = int_param(p, "n");
                 CFSpec cf = simple_cf(4 * n + 3, odd.pow(2), Polynomial(2 * (4 * n + 3)));
                 return make("osler_class2", p, cf, exact(ConstExpr::pi((2 * n + 1) * wallis_P(n))),
                             n >= 1 ? Tier::Fast : Tier::Slow);
               }});

  {
    std::vector<ParamValues> grid;
    const Rational xs[] = {Rational(1, 2), 1, Rational(3, 2), 2, 3};
    for (long y : {1, 3, 5})
      for (const Rational& x : xs) {
        // skip points where a numerator gamma sits on a pole
        if (is_nonpositive_integer((x + 3 - y) / 4)) continue;
        grid.push_back({{"x", x}, {"y", Rational(y)}});
      }
    ParamSpec y_spec{"y", false, std::nullopt, false, 1, "rational"};
    r.push_back({"gamma_quotient",
                 "4 G((x+3+y)/4) G((x+3-y)/4) / (G((x+1+y)/4) G((x+1-y)/4)) = x + K ((2k-1)^2 - y^2)/(2x)",
                 "Euler, E123; inverted form in Berndt's edition of Ramanujan's notebooks",
                 {real_spec("x", 0, 2), y_spec}, grid, [odd](const ParamValues& p) {
                   Rational x = param(p, "x"), y = param(p, "y");
                   if (is_nonpositive_integer((x + 3 + y) / 4) || is_nonpositive_integer((x + 3 - y) / 4))
                     throw DomainError("gamma_quotient target has a pole at x=" + to_string(x) + ", y=" + to_string(y));
                   CFSpec cf = simple_cf(x, odd.pow(2) - Polynomial(y * y), Polynomial(2 * x));
                   Target t = oracle("4*Gamma((x+3+y)/4)*Gamma((x+3-y)/4)/(Gamma((x+1+y)/4)*Gamma((x+1-y)/4))",
                                     [x, y](long d) { return gamma_quotient_value(x, y, d); });
                   return make("gamma_quotient", p, cf, t, Tier::Fast);
                 }});
  }

  r.push_back({"ramanujan_2G_a", "2G = 2 - 1/(3 + 2^2/(1 + 2^2/(3 + 4^2/(1 + 4^2/(3 + ...)))))",
               "Ramanujan, Notebook II (Berndt)", {}, {{}}, [](const ParamValues& p) {
                 CFSpec cf;
                 cf.b0 = 2;
                 cf.head = {{-1, 3}};
                 // index 2, 4, ...: a = k^2, b = 1; index 3, 5, ...: a = (k-1)^2, b = 3
                 cf.a_rule = CoeffRule({Branch{poly({0, 0, 1})}, Branch{lin(1, -1).pow(2)}}, 2);
                 cf.b_rule = CoeffRule({Branch{Polynomial(1)}, Branch{Polynomial(3)}}, 2);
                 return make("ramanujan_2G_a", p, cf, exact(ConstExpr::catalan(2)), Tier::Slow);
               }});

  r.push_back({"ramanujan_2G_b", "2G = 1 + 1^2/(1/2 + 1*2/(1/2 + 2^2/(1/2 + 2*3/(1/2 + ...))))",
               "Ramanujan, Notebook II (Berndt)", {}, {{}}, [](const ParamValues& p) {
                 CFSpec cf;
                 cf.b0 = 1;
                 // odd k: ((k+1)/2)^2; even k: (k/2)(k/2 + 1)
                 cf.a_rule = CoeffRule({Branch{poly({1, 2, 1}), Polynomial(4)}, Branch{poly({0, 2, 1}), Polynomial(4)}}, 1);
                 cf.b_rule = CoeffRule(Polynomial(Rational(1, 2)));
                 return make("ramanujan_2G_b", p, cf, exact(ConstExpr::catalan(2)), Tier::Slow);
               }});

  {
    std::vector<ParamValues> grid;
    const Rational vals[] = {0, Rational(1, 2), 1, Rational(3, 2)};
    for (const Rational& m : vals)
      for (const Rational& n : vals) grid.push_back({{"m", m}, {"n", n}});
    r.push_back({"entry16", "sum_{k>=1} (-1)^(k+1)/((m+k)(n+k)) = 1/(m+n+1+mn + (m+1)^2(n+1)^2/(m+n+3 + ...))",
                 "Ramanujan, Manuscript Book 1, entry 14 (Berndt, entry 16)",
                 {real_spec("m", -1, 0), real_spec("n", -1, 0)}, grid, [](const ParamValues& p) {
                   Rational m = param(p, "m"), n = param(p, "n");
                   CFSpec cf = headed_cf(0, 1, m + n + 1 + m * n, lin(1, m - 1).pow(2) * lin(1, n - 1).pow(2),
                                         lin(2, m + n - 1));
                   Target t = oracle("sum_{k>=1} (-1)^(k+1)/((m+k)(n+k))", [m, n](long d) {
                     return alternating_oracle([m, n](long k) -> Rational { return 1 / ((m + k + 1) * (n + k + 1)); }, d);
                   });
                   return make("entry16", p, cf, t, Tier::Slow);
                 }});
  }

  r.push_back({"bowman", "G = 1/(1 + 1^4/(8 + 3^4/(16 + 5^4/(24 + ...))))",
               "Bowman and Mc Laughlin; Ramanujan's entry at m = n = -1/2", {}, {{}}, [](const ParamValues& p) {
                 return make("bowman", p, headed_cf(0, 1, 1, lin(2, -3).pow(4), lin(8, -8)),
                             exact(ConstExpr::catalan()), Tier::Slow);
               }});

  r.push_back({"thm4_family",
               "1/((2k-1)!!^2 y_(k+1)) = (2k+1)^2 + K (2n-1)^2(2k+2n-1)^2/((2k+2n+1)^2 - (2n-1)^2)",
               "Euler's Theorem I applied to the squared-factor series y_(k+1)",
               {int_spec("k", 0, 0)}, int_sweep("k", 0, 5), [odd](const ParamValues& p) {
                 long k = int_param(p, "k");
                 CFSpec cf = simple_cf((2 * k + 1) * (2 * k + 1), odd.pow(2) * lin(2, 2 * k - 1).pow(2),
                                       lin(2, 2 * k + 1).pow(2) - odd.pow(2));
                 BigInt df = double_factorial(2 * k - 1);
                 ConstExpr t = (quadratic_y_closed(k + 1) * ConstExpr(Rational(df * df))).reciprocal();
                 return make("thm4_family", p, cf, exact(t), k >= 2 ? Tier::Fast : k == 1 ? Tier::Moderate : Tier::Slow);
               }});

  struct Sec5 {
    const char* id;
    long b0, a1, mult;
    ConstExpr target;
    const char* title;
  };
  const Sec5 sec5[] = {
      {"sec5_cf1", 7, 3, 3, ConstExpr(32) / (ConstExpr::catalan(6) - ConstExpr(1)),
       "2^5/(6G-1) = 7 + 3*1^4/(3(3^2-1^2) + 3^4/(3(5^2-3^2) + ...))"},
      {"sec5_cf2", 145, 41, 5, ConstExpr(8192) / (ConstExpr::catalan(82) - ConstExpr(19)),
       "2^13/(82G-19) = 145 + 41*1^4/(5(3^2-1^2) + 3^4/(5(5^2-3^2) + ...))"},
      {"sec5_cf3", 229, 49, 7, ConstExpr(131072) / (ConstExpr::catalan(882) - ConstExpr(Rational(713, 3))),
       "2^17/(882G-713/3) = 229 + 49*1^4/(7(3^2-1^2) + 3^4/(7(5^2-3^2) + ...))"},
  };
  for (const Sec5& s : sec5) {
    r.push_back({s.id, s.title, "Euler's Theorem I on a telescoped series with polynomial weights (G)", {}, {{}},
                 [s, odd](const ParamValues& p) {
                   // b_k = mult((2k+1)^2 - (2k-1)^2) = 8 mult k
                   CFSpec cf = headed_cf(s.b0, s.a1, 8 * s.mult, odd.pow(4), lin(8 * s.mult, 0));
                   return make(s.id, p, cf, exact(s.target), Tier::Fast);
                 }});
  }

  std::sort(r.begin(), r.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
  return r;
}

ParamValues complete_params(const CatalogEntry& e, const ParamValues& given) {
  for (const auto& [name, value] : given) {
    (void)value;
    bool known = std::any_of(e.params.begin(), e.params.end(), [&](const ParamSpec& s) { return s.name == name; });
    if (!known) throw DomainError(e.id + " has no parameter '" + name + "'");
  }
  ParamValues out;
  for (const ParamSpec& s : e.params) {
    Rational v = s.fallback;
    for (const auto& [name, value] : given)
      if (name == s.name) v = value;
    if (s.integer && v.get_den() != 1) throw DomainError(e.id + ": " + s.name + " must be an integer");
    if (s.lower && (v < *s.lower || (s.lower_strict && v == *s.lower)))
      throw DomainError(e.id + ": " + s.name + " = " + to_string(v) + " is outside the range " + s.range);
    out.emplace_back(s.name, v);
  }
  return out;
}

json rational_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& q : v) a.push_back(to_string(q));
  return a;
}

json rule_json(const CoeffRule& rule) {
  json j;
  j["start"] = rule.start_index();
  j["period"] = rule.period();
  json branches = json::array();
  for (const Branch& b : rule.branches())
    branches.push_back({{"num", rational_list(b.num.coeffs())}, {"den", rational_list(b.den.coeffs())}});
  j["branches"] = branches;
  return j;
}

json cf_object(const CFSpec& cf) {
  json j;
  j["b0"] = to_string(cf.b0);
  json head = json::array();
  for (const auto& [a, b] : cf.head) head.push_back({to_string(a), to_string(b)});
  j["head"] = head;
  j["a_rule"] = cf.a_rule ? rule_json(*cf.a_rule) : json(nullptr);
  j["b_rule"] = cf.b_rule ? rule_json(*cf.b_rule) : json(nullptr);
  return j;
}

json target_object(const Target& t) {
  json j;
  j["text"] = t.text;
  if (t.expr) {
    j["kind"] = "closed_form";
    std::vector<Rational> num(t.expr->num().c.begin(), t.expr->num().c.end());
    std::vector<Rational> den(t.expr->den().c.begin(), t.expr->den().c.end());
    j["basis"] = {"1", "pi", "G", "sqrt3"};
    j["num"] = rational_list(num);
    j["den"] = rational_list(den);
  } else {
    j["kind"] = "oracle";
  }
  return j;
}

}  // namespace

std::string to_string(Tier t) {
  switch (t) {
    case Tier::Fast: return "fast";
    case Tier::Moderate: return "moderate";
    default: return "slow";
  }
}

std::optional<Tier> parse_tier(const std::string& s) {
  if (s == "fast") return Tier::Fast;
  if (s == "moderate") return Tier::Moderate;
  if (s == "slow") return Tier::Slow;
  return std::nullopt;
}

long tier_digits(Tier t) {
  switch (t) {
    case Tier::Fast: return 30;
    case Tier::Moderate: return 20;
    default: return 10;
  }
}

std::string format_params(const ParamValues& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ",";
    out += k + "=" + to_string(v);
  }
  return out;
}

ParamValues parse_params(const std::string& text) {
  ParamValues out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t eq = item.find('=');
    std::string name = eq == std::string::npos ? "" : trim(item.substr(0, eq));
    if (name.empty()) throw DomainError("parameter '" + item + "' is not of the form name=value");
    out.emplace_back(name, parse_rational(trim(item.substr(eq + 1))));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

HPReal Target::eval(long digits, const AtomOffsets& offsets) const {
  if (expr) return const_expr_eval(*expr, digits, offsets);
  if (!oracle) throw EvaluationError("target '" + text + "' has no evaluator");
  return oracle(digits);
}

std::string Instance::label() const {
  std::string p = format_params(params);
  return p.empty() ? id : id + "(" + p + ")";
}

const std::vector<CatalogEntry>& list_entries() {
  static const std::vector<CatalogEntry> registry = build_registry();
  return registry;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const CatalogEntry& e : list_entries())
    if (e.id == id) return &e;
  return nullptr;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

std::vector<const CatalogEntry*> select_entries(const std::string& filter) {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : list_entries())
    if (glob_match(filter, e.id)) out.push_back(&e);
  return out;
}

Instance instantiate(const std::string& id, const ParamValues& params) {
  const CatalogEntry* e = find_entry(id);
  if (!e) throw DomainError("unknown catalog entry '" + id + "'");
  Instance inst = e->build(complete_params(*e, params));
  inst.cf.validate();
  return inst;
}

std::vector<Instance> default_instances(const std::string& filter) {
  std::vector<Instance> out;
  for (const CatalogEntry* e : select_entries(filter))
    for (const ParamValues& p : e->sweep) out.push_back(instantiate(e->id, p));
  return out;
}

Rational wallis_P(long n) {
  if (n < 0) throw DomainError("wallis_P needs n >= 0");
  Rational p = 1;
  for (long k = 1; k <= n; ++k) p *= Rational((2 * k - 1) * (2 * k + 1), 4 * k * k);
  return p;
}

Rational ramanujan_P(long n) {
  if (n < -1) throw DomainError("ramanujan_P needs n >= -1");
  if (n == -1) return Rational(1, 2);
  long m = n / 2;
  Rational p = 1;
  for (long k = 1; k <= m; ++k) p *= Rational(2 * k * (2 * k + 2), (2 * k + 1) * (2 * k + 1));
  if (n % 2 == 1) p *= Rational(2 * m + 2, 2 * m + 3);
  return p;
}

RelationReport convergent_relation_check(long N) {
  if (N < 2) throw DomainError("convergent_relation_check needs N >= 2");
  // p_n/q_n for n = 0..N
  std::vector<Rational> rec;
  BigInt p = 1;
  for (long n = 0; n <= N; ++n) {
    rec.push_back(make_rational(p, double_factorial(2 * n + 1)));
    BigInt step = 2 * double_factorial(2 * n - 1);
    p = (2 * n + 3) * p + (n % 2 == 0 ? step : BigInt(-step));
  }
  CFSpec cf = instantiate("pi_over2_minus1").cf;
  std::vector<RawConvergent> raw = raw_convergents(cf, N + 1);
  auto approximant = [&](long j) -> Rational { return raw[static_cast<size_t>(j)].p / raw[static_cast<size_t>(j)].q; };

  RelationReport best;
  best.first_mismatch = 0;
  for (int offset : {-1, 0, 1}) {
    for (int shift : {0, 1}) {
      long n = 1;
      for (; n <= N; ++n) {
        long j = n + offset;
        if (j < 0 || j >= static_cast<long>(raw.size())) break;
        if (rec[static_cast<size_t>(n)] != shift + approximant(j)) break;
      }
      long matched = n - 1;
      if (matched == N) {
        RelationReport ok{true, N, offset, shift, -1, ""};
        ok.detail = "p_n/q_n = " + std::to_string(shift) + " + c_(n" +
                    (offset == 0 ? std::string() : (offset > 0 ? "+" : "") + std::to_string(offset)) +
                    ") exactly for n = 1.." + std::to_string(N);
        return ok;
      }
      if (matched + 1 > best.first_mismatch) {
        best.first_mismatch = matched + 1;
        best.offset = offset;
        best.shift = shift;
        best.checked = matched;
      }
    }
  }
  best.detail = "no offset in {-1,0,1} and shift in {0,1} matches; best candidate offset " +
                std::to_string(best.offset) + ", shift " + std::to_string(best.shift) + " fails at n = " +
                std::to_string(best.first_mismatch);
  return best;
}

std::string cf_json(const CFSpec& cf, int indent) { return cf_object(cf).dump(indent); }

std::string registry_json(const std::string& filter, int indent) {
  json out = json::array();
  for (const CatalogEntry* e : select_entries(filter)) {
    json j;
    j["id"] = e->id;
    j["title"] = e->title;
    j["provenance"] = e->provenance;
    json params = json::array();
    for (const ParamSpec& s : e->params)
      params.push_back({{"name", s.name}, {"integer", s.integer}, {"range", s.range}, {"default", to_string(s.fallback)}});
    j["params"] = params;
    json instances = json::array();
    for (const ParamValues& p : e->sweep) {
      Instance inst = instantiate(e->id, p);
      json pj = json::object();
      for (const auto& [k, v] : inst.params) pj[k] = to_string(v);
      instances.push_back({{"params", pj},
                           {"tier", to_string(inst.tier)},
                           {"cf", cf_object(inst.cf)},
                           {"target", target_object(inst.target)}});
    }
    j["instances"] = instances;
    out.push_back(j);
  }
  return out.dump(indent);
}

}  // namespace cflab
