#pragma once

#include "cflab/hpreal.hpp"
#include "cflab/rational.hpp"

#include <array>
#include <string>

namespace cflab {

enum class Atom { One = 0, Pi = 1, G = 2, Sqrt3 = 3 };

/// c0 + c_pi·π + c_G·G + c_sqrt3·√3 with rational coefficients.
struct Affine {
  std::array<Rational, 4> c{};

  Rational& operator[](Atom a) { return c[static_cast<size_t>(a)]; }
  const Rational& operator[](Atom a) const { return c[static_cast<size_t>(a)]; }
  bool is_zero() const;
  bool is_rational() const;
  Affine scaled(const Rational& q) const;
  friend Affine operator+(const Affine& a, const Affine& b);
  friend bool operator==(const Affine& a, const Affine& b) { return a.c == b.c; }
};

/// Quotient of two affine combinations over {1, π, G, √3}.
class ConstExpr {
 public:
  ConstExpr() : ConstExpr(Rational(0)) {}
  ConstExpr(const Rational& q);
  ConstExpr(Affine num, Affine den);

  static ConstExpr atom(Atom a, const Rational& coeff = 1);
  static ConstExpr pi(const Rational& coeff = 1) { return atom(Atom::Pi, coeff); }
  static ConstExpr catalan(const Rational& coeff = 1) { return atom(Atom::G, coeff); }
  static ConstExpr sqrt3(const Rational& coeff = 1) { return atom(Atom::Sqrt3, coeff); }

  const Affine& num() const { return num_; }
  const Affine& den() const { return den_; }

  bool is_rational() const { return num_.is_rational() && den_.is_rational(); }
  /// True when the denominator is a rational constant.
  bool is_affine() const { return den_.is_rational(); }
  /// Coefficient of `a` after dividing through by a constant denominator.
  /// Throws DomainError unless is_affine().
  Rational coefficient(Atom a) const;
  bool depends_on(Atom a) const;

  ConstExpr reciprocal() const;
  ConstExpr operator-() const;

  /// Sums need proportional denominators (always true for affine values);
  /// products need one rational factor; quotients need a rational operand or
  /// two affine operands. Other cases throw DomainError.
  friend ConstExpr operator+(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator-(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator*(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator/(const ConstExpr& a, const ConstExpr& b);

  /// Cross-multiplied comparison treating π, G and √3 as independent.
  bool equals(const ConstExpr& o) const;
  friend bool operator==(const ConstExpr& a, const ConstExpr& b) { return a.equals(b); }

  /// Readable form such as "1/8*pi - 1/3" or "(64)/(19 - 18*G)".
  std::string to_string() const;

 private:
  Affine num_, den_;
};

/// Additive offsets applied to the reference constants during evaluation.
/// Used to check that verification is sensitive to the oracle values.
struct AtomOffsets {
  Rational pi = 0;
  Rational catalan = 0;
};

/// Value of e with at least `digits` correct decimals. Throws
/// EvaluationError when the denominator cannot be separated from zero.
HPReal const_expr_eval(const ConstExpr& e, long digits, const AtomOffsets& offsets = {});

}  // namespace cflab
