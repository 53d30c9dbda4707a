#include "cflab/euler.hpp"

#include "cflab/errors.hpp"

namespace cflab {

namespace {

// The sequence as a rule indexed by k = 1, 2, ...
CoeffRule indexed(const AltSeries& s) { return s.rule.shifted(s.start - 1).restarted(1); }

void require_nonzero(const AltSeries& s, long upto_extra) {
  if (s.length) {
    for (long k = 1; k <= *s.length + upto_extra; ++k)
      if (s.element(k) == 0) throw DomainError("series element vanishes at k = " + std::to_string(k));
  } else if (indexed(s).has_zero_from(1)) {
    throw DomainError("series element vanishes");
  }
}

}  // namespace

std::string to_string(AltSeries::Kind kind) {
  switch (kind) {
    case AltSeries::Kind::Reciprocal: return "reciprocal";
    case AltSeries::Kind::Biproduct: return "biproduct";
    default: return "general";
  }
}

Rational AltSeries::term(long k) const {
  switch (kind) {
    case Kind::Reciprocal: return 1 / element(k);
    case Kind::Biproduct: return 1 / (element(k) * element(k + 1));
    default: return element(k);
  }
}

Rational partial_sum(const AltSeries& s, long n) {
  if (n < 1) throw DomainError("partial sums start at n = 1");
  if (s.length) n = std::min(n, *s.length);
  Rational sum = 0;
  for (long k = 1; k <= n; ++k) {
    if (k % 2 == 1) sum += s.term(k);
    else sum -= s.term(k);
  }
  return sum;
}

CFSpec theorem1_transform(const AltSeries& s) {
  if (s.kind != AltSeries::Kind::Reciprocal)
    throw DomainError("Theorem I needs a reciprocal series, got " + to_string(s.kind));
  require_nonzero(s, 0);
  CFSpec cf;
  cf.b0 = s.element(1);
  if (s.length) {
    for (long n = 1; n < *s.length; ++n) cf.head.emplace_back(s.element(n) * s.element(n), s.element(n + 1) - s.element(n));
    return cf;
  }
  CoeffRule alpha = indexed(s);
  cf.a_rule = (alpha * alpha).restarted(1);
  cf.b_rule = (alpha.shifted(1) - alpha).restarted(1);
  return cf;
}

CFSpec theorem2_transform(const AltSeries& s) {
  if (s.kind != AltSeries::Kind::Biproduct)
    throw DomainError("Theorem II needs a biproduct series, got " + to_string(s.kind));
  require_nonzero(s, 1);
  CFSpec cf;
  cf.b0 = s.element(2);
  if (s.length) {
    for (long n = 1; n < *s.length; ++n)
      cf.head.emplace_back(s.element(n) * s.element(n + 1), s.element(n + 2) - s.element(n));
    return cf;
  }
  CoeffRule c = indexed(s);
  cf.a_rule = (c * c.shifted(1)).restarted(1);
  cf.b_rule = (c.shifted(2) - c).restarted(1);
  return cf;
}

IdentityReport check_partial_sum_identity(const AltSeries& s, const CFSpec& cf, long N) {
  IdentityReport report;
  Rational scale = 1;
  if (s.kind == AltSeries::Kind::Reciprocal) {
    report.relation = "c_(n-1) = 1/s_n";
  } else if (s.kind == AltSeries::Kind::Biproduct) {
    report.relation = "c_(n-1) = 1/(c_1 s_n)";
    scale = s.element(1);
  } else {
    throw DomainError("no continued fraction identity for a general series");
  }
  if (s.length) N = std::min(N, *s.length);
  std::vector<Convergent> cs = convergents(cf, N - 1);
  for (long n = 1; n <= N; ++n) {
    ++report.checked;
    Rational sn = partial_sum(s, n);
    bool equal = static_cast<long>(cs.size()) >= n && sn != 0 && cs[static_cast<size_t>(n - 1)].value() * scale * sn == 1;
    if (!equal) {
      report.ok = false;
      report.first_failure = n;
      break;
    }
  }
  return report;
}

}  // namespace cflab
