#include "cflab/const_expr.hpp"

#include "cflab/constants.hpp"
#include "cflab/errors.hpp"

#include <algorithm>

namespace cflab {

namespace {

constexpr Atom kAtoms[] = {Atom::One, Atom::Pi, Atom::G, Atom::Sqrt3};

// Coordinates over {1, π, G, √3, π², πG, π√3, G², G√3}; √3·√3 folds into 1.
using Quadratic = std::array<Rational, 9>;

Quadratic product(const Affine& a, const Affine& b) {
  static const int slot[4][4] = {{0, 1, 2, 3}, {1, 4, 5, 6}, {2, 5, 7, 8}, {3, 6, 8, 0}};
  Quadratic out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Rational t = a.c[i] * b.c[j];
      if (i == 3 && j == 3) t *= 3;
      out[slot[i][j]] += t;
    }
  }
  return out;
}

// λ with b = λ·a, if one exists.
bool proportional(const Affine& a, const Affine& b, Rational& lambda) {
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] != 0) {
      lambda = b.c[i] / a.c[i];
      return a.scaled(lambda) == b;
    }
  }
  return false;
}

std::string affine_string(const Affine& a) {
  static const char* names[] = {"", "pi", "G", "sqrt3"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const Rational& c = a.c[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string term;
    if (i == 0) term = cflab::to_string(mag);
    else if (mag == 1) term = names[i];
    else term = cflab::to_string(mag) + "*" + names[i];
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

bool Affine::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; });
}

bool Affine::is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

Affine Affine::scaled(const Rational& q) const {
  Affine r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] * q;
  return r;
}

Affine operator+(const Affine& a, const Affine& b) {
  Affine r;
  for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

ConstExpr::ConstExpr(const Rational& q) { num_.c[0] = q; den_.c[0] = 1; }

ConstExpr::ConstExpr(Affine num, Affine den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("ConstExpr denominator is identically zero");
  if (den_.is_rational() && den_.c[0] != 1) {
    num_ = num_.scaled(1 / den_.c[0]);
    den_.c[0] = 1;
  }
}

ConstExpr ConstExpr::atom(Atom a, const Rational& coeff) {
  Affine num, den;
  num[a] = coeff;
  den[Atom::One] = 1;
  return ConstExpr(num, den);
}

Rational ConstExpr::coefficient(Atom a) const {
  if (!is_affine()) throw DomainError("coefficient of a non-affine ConstExpr: " + to_string());
  return num_[a] / den_[Atom::One];
}

bool ConstExpr::depends_on(Atom a) const { return num_[a] != 0 || den_[a] != 0; }

ConstExpr ConstExpr::reciprocal() const {
  if (num_.is_zero()) throw DomainError("reciprocal of zero");
  return ConstExpr(den_, num_);
}

ConstExpr ConstExpr::operator-() const { return ConstExpr(num_.scaled(-1), den_); }

ConstExpr operator+(const ConstExpr& a, const ConstExpr& b) {
  Rational lambda;
  if (!proportional(a.den_, b.den_, lambda))
    throw DomainError("sum of ConstExprs with unrelated denominators");
  return ConstExpr(a.num_ + b.num_.scaled(1 / lambda), a.den_);
}

ConstExpr operator-(const ConstExpr& a, const ConstExpr& b) { return a + (-b); }

ConstExpr operator*(const ConstExpr& a, const ConstExpr& b) {
  if (a.is_rational()) return ConstExpr(b.num_.scaled(a.num_.c[0] / a.den_.c[0]), b.den_);
  if (b.is_rational()) return b * a;
  throw DomainError("product of two irrational ConstExprs");
}

ConstExpr operator/(const ConstExpr& a, const ConstExpr& b) {
  if (b.is_rational()) return a * b.reciprocal();
  if (a.is_rational()) return a * b.reciprocal();
  if (a.is_affine() && b.is_affine()) return ConstExpr(a.num_, b.num_);
  throw DomainError("quotient of two non-affine ConstExprs");
}

bool ConstExpr::equals(const ConstExpr& o) const { return product(num_, o.den_) == product(o.num_, den_); }

std::string ConstExpr::to_string() const {
  if (is_affine()) return affine_string(num_);
  auto terms = std::count_if(num_.c.begin(), num_.c.end(), [](const Rational& q) { return q != 0; });
  std::string top = affine_string(num_);
  if (terms > 1 || num_.c[0] < 0) top = "(" + top + ")";
  return top + "/(" + affine_string(den_) + ")";
}

HPReal const_expr_eval(const ConstExpr& e, long digits, const AtomOffsets& offsets) {
  if (digits < 1) throw DomainError("digits must be positive");
  if (e.is_rational()) return HPReal::from_rational(e.num()[Atom::One] / e.den()[Atom::One], working_scale(digits));

  long w = working_scale(digits);
  const long limit = 4 * digits + 200;
  while (true) {
    auto value = [&](Atom a) {
      switch (a) {
        case Atom::Pi: return pi_at_scale(w) + HPReal::from_rational(offsets.pi, w);
        case Atom::G: return catalan_at_scale(w) + HPReal::from_rational(offsets.catalan, w);
        case Atom::Sqrt3: return sqrt3_at_scale(w);
        default: return HPReal::from_integer(1, w);
      }
    };
    auto eval_affine = [&](const Affine& a) {
      HPReal sum = HPReal::from_integer(0, w);
      for (Atom atom : kAtoms) {
        if (a[atom] == 0) continue;
        HPReal coeff = HPReal::from_rational(a[atom], w);
        sum += atom == Atom::One ? coeff : coeff * value(atom);
      }
      return sum;
    };
    HPReal num = eval_affine(e.num());
    HPReal den = eval_affine(e.den());
    long shortfall = 0;
    if (den.certain_sign()) {
      HPReal q = num / den;
      if (q.digits() > digits) return q;
      shortfall = digits + 1 - q.digits();
    } else {
      shortfall = digits;
    }
    if (w >= limit) throw EvaluationError("denominator of " + e.to_string() + " indistinguishable from zero");
    w = std::min(limit, w + shortfall + 10);
  }
}

}  // namespace cflab
