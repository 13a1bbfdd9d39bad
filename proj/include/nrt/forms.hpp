#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nrt/algebra.hpp"
#include "nrt/polynomial.hpp"

namespace nrt {

/// Homogeneous a_0 x^d + a_1 x^(d-1) y + ... + a_d y^d with exact integer
/// coefficients. The degree is fixed by the coefficient count, so leading
/// zeros are meaningful (they are root lines at y = 0 resp. x = 0).
class BinaryForm {
public:
  /// Throws std::invalid_argument on an empty coefficient list.
  explicit BinaryForm(std::vector<Integer> coeffs);
  BinaryForm(std::initializer_list<long> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;

  Rational eval(const Rational& x, const Rational& y) const;

  /// f(1, t) as a polynomial in t.
  UPoly dehomogenize() const;

  /// Multiplicity of the root line x = 0 (number of trailing zero
  /// coefficients).
  int x_line_multiplicity() const noexcept;

  /// f(X(t), Y(t)).
  UPoly compose(const UPoly& x, const UPoly& y) const;

  /// "x^3 - 3*x*y^2".
  std::string to_string() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

private:
  std::vector<Integer> coeffs_;
};

BinaryForm form_mul(const BinaryForm& a, const BinaryForm& b);
BinaryForm form_scale(const BinaryForm& f, const Integer& c);
/// Throws DegreeMismatch.
BinaryForm form_add(const BinaryForm& a, const BinaryForm& b);
BinaryForm form_pow(const BinaryForm& f, int exponent);

/// (x^2 + y^2)^k, positive off the origin.
BinaryForm radius_power(int k);

/// Rational value; the sign is projectively meaningful for even degree.
Rational eval(const BinaryForm& f, const Rational& x, const Rational& y);

/// A system (f_1, ..., f_n), ordered by non-increasing degree.
struct PolySystem {
  std::vector<BinaryForm> forms;

  DegreeProfile profile() const;
  friend bool operator==(const PolySystem&, const PolySystem&) = default;
};

/// Determinant of the Sylvester matrix of the coefficient sequences (f-block
/// rows first). Zero exactly when f and g share a complex root line.
/// Throws ZeroForm.
Integer sylvester_resultant(const BinaryForm& f, const BinaryForm& g);

/// True when all forms share a real root line. Identically zero forms
/// impose no condition; an all-zero system is a member.
bool in_resultant_variety(const PolySystem& system);

/// Distinct real root lines of form, optionally only those where predicate is
/// positive. The predicate must have even degree.
/// Throws ZeroForm, NonSquarefree (a repeated real root line),
/// PredicateVanishesAtRoot, ParityMismatch (odd-degree predicate).
int real_root_count(const BinaryForm& form, const BinaryForm* predicate = nullptr);

/// Degree of the map S^1 -> R^2 \ 0 given by v -> (f1(v), f2(v)), counted
/// counterclockwise. Throws ParityMismatch if deg f1 - deg f2 is odd and
/// OnResultantVariety if f1, f2 share a real root line.
int winding_index(const BinaryForm& f1, const BinaryForm& f2);

/// (Re h * (x^2+y^2)^((d1-d2)/2), Im h) with h = (x+iy)^a (x-iy)^b,
/// a + b = d2, a - b = k; its winding index is k. Throws IllegalIndex.
PolySystem witness_system(int d1, int d2, int k);

}  // namespace nrt
