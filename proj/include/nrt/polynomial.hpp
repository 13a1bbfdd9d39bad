#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace nrt {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

int sign(const Integer& v);
int sign(const Rational& v);

/// Dense univariate polynomial over Q, coefficients stored low -> high with
/// no trailing zeros (the zero polynomial has no coefficients).
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(std::initializer_list<long> coeffs);

  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;
  int sign_at_pos_infinity() const;
  int sign_at_neg_infinity() const;

  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& c, UPoly a);

  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

UPoly squarefree_part(const UPoly& p);

/// Integer strictly larger than the modulus of every complex root of p.
Integer root_bound(const UPoly& p);

/// Sturm chain of the squarefree part of a polynomial, stored as primitive
/// integer polynomials (positive rescaling leaves every sign unchanged).
class SturmSequence {
public:
  explicit SturmSequence(const UPoly& p);

  int variations_at(const Rational& x) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;

  /// Distinct real roots in the half-open interval (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  int count_real_roots() const;

  std::size_t length() const noexcept { return chain_.size(); }

private:
  std::vector<std::vector<Integer>> chain_;
};

/// Sign variations of the generalized chain f0, f1, -rem(f0, f1), ...; the
/// Cauchy index of f1/f0 over (a, b) is V(a) - V(b).
int cauchy_index(const UPoly& numerator, const UPoly& denominator);

/// An open interval (lo, hi) with rational endpoints that are not roots.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// One isolating interval per distinct real root, ascending.
std::vector<RootInterval> isolate_real_roots(const UPoly& p);

/// A rational strictly inside (a, b) at which none of the given polynomials
/// vanish. Tries the midpoint first.
Rational split_point(const Rational& a, const Rational& b, std::initializer_list<const UPoly*> avoid);

}  // namespace nrt
