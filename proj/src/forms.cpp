#include "nrt/forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nrt/error.hpp"

namespace nrt {

BinaryForm::BinaryForm(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a binary form needs at least one coefficient");
}

BinaryForm::BinaryForm(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  if (coeffs_.empty()) throw std::invalid_argument("a binary form needs at least one coefficient");
}

bool BinaryForm::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

Rational BinaryForm::eval(const Rational& x, const Rational& y) const {
  // Homogeneous Horner in (x, y): sum a_j x^(d-j) y^j.
  Rational acc = 0;
  Rational x_power = 1;
  std::vector<Rational> y_powers(coeffs_.size());
  y_powers[0] = 1;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) y_powers[j] = y_powers[j - 1] * y;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    acc += Rational(coeffs_[j]) * x_power * y_powers[j];
    x_power *= x;
  }
  return acc;
}

UPoly BinaryForm::dehomogenize() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c);
  return UPoly(std::move(out));
}

int BinaryForm::x_line_multiplicity() const noexcept {
  int m = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend() && *it == 0; ++it) ++m;
  return m;
}

UPoly BinaryForm::compose(const UPoly& x, const UPoly& y) const {
  const std::size_t n = coeffs_.size();
  std::vector<UPoly> x_powers(n), y_powers(n);
  x_powers[0] = y_powers[0] = UPoly::constant(1);
  for (std::size_t j = 1; j < n; ++j) {
    x_powers[j] = x_powers[j - 1] * x;
    y_powers[j] = y_powers[j - 1] * y;
  }
  UPoly out;
  for (std::size_t j = 0; j < n; ++j) {
    if (coeffs_[j] == 0) continue;
    out += Rational(coeffs_[j]) * (x_powers[n - 1 - j] * y_powers[j]);
  }
  return out;
}

std::string BinaryForm::to_string() const {
  std::ostringstream out;
  const int d = degree();
  bool first = true;
  for (int j = 0; j <= d; ++j) {
    const Integer& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    const Integer mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    std::string monomial;
    auto append = [&](const char* var, int power) {
      if (power == 0) return;
      if (!monomial.empty()) monomial += '*';
      monomial += var;
      if (power > 1) monomial += '^' + std::to_string(power);
    };
    append("x", d - j);
    append("y", j);
    if (monomial.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << monomial;
    }
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

BinaryForm form_mul(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Integer> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return BinaryForm(std::move(out));
}

BinaryForm form_scale(const BinaryForm& f, const Integer& c) {
  std::vector<Integer> out = f.coeffs();
  for (auto& v : out) v *= c;
  return BinaryForm(std::move(out));
}

BinaryForm form_add(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "cannot add forms of degree " +
                                               std::to_string(a.degree()) + " and " +
                                               std::to_string(b.degree()));
  }
  std::vector<Integer> out = a.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs()[i];
  return BinaryForm(std::move(out));
}

BinaryForm form_pow(const BinaryForm& f, int exponent) {
  BinaryForm out{1};
  for (int i = 0; i < exponent; ++i) out = form_mul(out, f);
  return out;
}

BinaryForm radius_power(int k) { return form_pow(BinaryForm{1, 0, 1}, k); }

Rational eval(const BinaryForm& f, const Rational& x, const Rational& y) { return f.eval(x, y); }

DegreeProfile PolySystem::profile() const {
  std::vector<int> degrees;
  for (const auto& f : forms) degrees.push_back(f.degree());
  return DegreeProfile(degrees);
}

Integer sylvester_resultant(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroForm, "resultant of a zero form");
  const int d = f.degree();
  const int e = g.degree();
  const int size = d + e;
  if (size == 0) return Integer(1);

  std::vector<std::vector<Integer>> m(static_cast<std::size_t>(size),
                                      std::vector<Integer>(static_cast<std::size_t>(size)));
  for (int row = 0; row < e; ++row) {
    for (int j = 0; j <= d; ++j) m[row][row + j] = f.coeffs()[j];
  }
  for (int row = 0; row < d; ++row) {
    for (int j = 0; j <= e; ++j) m[e + row][row + j] = g.coeffs()[j];
  }

  // Bareiss fraction-free elimination.
  int sign_flip = 1;
  Integer prev = 1;
  for (int k = 0; k + 1 < size; ++k) {
    if (m[k][k] == 0) {
      int pivot = k + 1;
      while (pivot < size && m[pivot][k] == 0) ++pivot;
      if (pivot == size) return Integer(0);
      std::swap(m[k], m[pivot]);
      sign_flip = -sign_flip;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign_flip * m[size - 1][size - 1];
}

bool in_resultant_variety(const PolySystem& system) {
  std::vector<const BinaryForm*> live;
  for (const auto& f : system.forms) {
    if (!f.is_zero()) live.push_back(&f);
  }
  if (live.empty()) return true;

  const bool all_vanish_on_x_line = std::all_of(
      live.begin(), live.end(), [](const BinaryForm* f) { return f->x_line_multiplicity() > 0; });
  if (all_vanish_on_x_line) return true;

  UPoly common = live.front()->dehomogenize();
  for (std::size_t i = 1; i < live.size() && common.degree() >= 1; ++i) {
    common = gcd(common, live[i]->dehomogenize());
  }
  if (common.degree() < 1) return false;
  return SturmSequence(common).count_real_roots() > 0;
}

namespace {

void require_squarefree_real_roots(const BinaryForm& form, const UPoly& affine) {
  if (form.x_line_multiplicity() >= 2) {
    throw Error(ErrorCode::NonSquarefree, "repeated root line x = 0 in " + form.to_string());
  }
  const UPoly repeated = gcd(affine, affine.derivative());
  if (repeated.degree() >= 1 && SturmSequence(repeated).count_real_roots() > 0) {
    throw Error(ErrorCode::NonSquarefree, "repeated real root line in " + form.to_string());
  }
}

// Sign of the predicate at the unique root of `affine` in (lo, hi), where
// `affine` changes sign across the interval.
int predicate_sign_at_root(const UPoly& affine, const UPoly& predicate, const SturmSequence& predicate_sturm,
                           Rational lo, Rational hi) {
  int sign_lo = affine.sign_at(lo);
  while (predicate_sturm.count_roots(lo, hi) > 0 || predicate.sign_at(hi) == 0) {
    const Rational mid = (lo + hi) / 2;
    const int sign_mid = affine.sign_at(mid);
    if (sign_mid == 0) return predicate.sign_at(mid);
    if (sign_mid == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
    sign_lo = affine.sign_at(lo);
  }
  // No predicate root in (lo, hi]: its sign at the root equals its sign at hi.
  return predicate.sign_at(hi);
}

}  // namespace

int real_root_count(const BinaryForm& form, const BinaryForm* predicate) {
  if (form.is_zero()) throw Error(ErrorCode::ZeroForm, "root count of the zero form");
  const UPoly affine = form.dehomogenize();
  require_squarefree_real_roots(form, affine);
  const bool on_x_line = form.x_line_multiplicity() == 1;

  if (predicate == nullptr) {
    return (affine.degree() >= 1 ? SturmSequence(affine).count_real_roots() : 0) + (on_x_line ? 1 : 0);
  }

  if (predicate->is_zero()) throw Error(ErrorCode::ZeroForm, "zero predicate form");
  if (predicate->degree() % 2 != 0) {
    throw Error(ErrorCode::ParityMismatch, "predicate sign is only defined on RP^1 for even degree");
  }
  const UPoly affine_predicate = predicate->dehomogenize();
  int count = 0;
  if (on_x_line) {
    const int s = predicate->coeffs().back().sign();
    if (s == 0) throw Error(ErrorCode::PredicateVanishesAtRoot, "predicate vanishes on x = 0");
    if (s > 0) ++count;
  }
  if (affine.degree() < 1) return count;

  const UPoly shared = gcd(affine, affine_predicate);
  if (shared.degree() >= 1 && SturmSequence(shared).count_real_roots() > 0) {
    throw Error(ErrorCode::PredicateVanishesAtRoot, "predicate shares a real root line with the form");
  }
  const SturmSequence predicate_sturm(affine_predicate);
  for (const RootInterval& root : isolate_real_roots(affine)) {
    if (predicate_sign_at_root(affine, affine_predicate, predicate_sturm, root.lo, root.hi) > 0) ++count;
  }
  return count;
}

namespace {

// Quadrant of a point with both coordinates non-zero: I=0, II=1, III=2, IV=3.
int quadrant(int sx, int sy) {
  if (sx > 0) return sy > 0 ? 0 : 3;
  return sy > 0 ? 1 : 2;
}

// Signed quarter turns between two adjacent quadrants.
int quarter_turns(int from, int to) {
  switch ((to - from + 4) % 4) {
    case 0: return 0;
    case 1: return 1;
    case 3: return -1;
    default: throw std::logic_error("winding step jumped across two axes");
  }
}

}  // namespace

int winding_index(const BinaryForm& f1, const BinaryForm& f2) {
  if ((f1.degree() - f2.degree()) % 2 != 0) {
    throw Error(ErrorCode::ParityMismatch,
                "degrees " + std::to_string(f1.degree()) + " and " + std::to_string(f2.degree()) +
                    " differ in parity");
  }
  if (in_resultant_variety(PolySystem{{f1, f2}})) {
    throw Error(ErrorCode::OnResultantVariety, "the forms share a real root line");
  }
  // Off the variety a zero partner forces the other form to be rootless, so
  // the circle lands on a single half-axis.
  if (f1.is_zero() || f2.is_zero()) return 0;

  // (1 - t^2, 2t) runs counterclockwise around a scaled unit circle, missing
  // only (-1, 0) at t = +-infinity. Positive rescaling keeps every sign.
  const UPoly circle_x{1, 0, -1};
  const UPoly circle_y{0, 2};
  const UPoly g1 = f1.compose(circle_x, circle_y);
  const UPoly g2 = f2.compose(circle_x, circle_y);
  const SturmSequence sturm1(g1);
  const SturmSequence sturm2(g2);
  const Rational bound(std::max(root_bound(g1), root_bound(g2)));

  struct Probe {
    Rational t;
    int v1, v2, quadrant;
  };
  auto probe = [&](const Rational& t) {
    return Probe{t, sturm1.variations_at(t), sturm2.variations_at(t), quadrant(g1.sign_at(t), g2.sign_at(t))};
  };

  const Probe left = probe(-bound);
  const Probe right = probe(bound);
  // Past the root bound only the point (-1, 0) can be a root, of at most one
  // of the two forms, so the closing arc crosses at most one axis.
  int turns = quarter_turns(right.quadrant, left.quadrant);

  std::vector<std::pair<Probe, Probe>> stack{{left, right}};
  while (!stack.empty()) {
    auto [a, b] = std::move(stack.back());
    stack.pop_back();
    const int roots = (a.v1 - b.v1) + (a.v2 - b.v2);
    if (roots <= 1) {
      turns += quarter_turns(a.quadrant, b.quadrant);
      continue;
    }
    Probe mid = probe(split_point(a.t, b.t, {&g1, &g2}));
    stack.emplace_back(mid, b);
    stack.emplace_back(a, std::move(mid));
  }
  if (turns % 4 != 0) throw std::logic_error("winding count is not a whole number of turns");
  return turns / 4;
}

namespace {

struct Gaussian {
  Integer re = 0;
  Integer im = 0;
};

// Coefficients of (x + i y)^a (x - i y)^b in the basis x^(d-j) y^j.
std::vector<Gaussian> gaussian_power(int a, int b) {
  std::vector<Gaussian> coeffs{{1, 0}};
  auto multiply = [&](int i_sign) {
    std::vector<Gaussian> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j].re += coeffs[j].re;
      next[j].im += coeffs[j].im;
      // (re + i im) * (i_sign * i) = -i_sign * im + i * i_sign * re
      next[j + 1].re -= i_sign * coeffs[j].im;
      next[j + 1].im += i_sign * coeffs[j].re;
    }
    coeffs = std::move(next);
  };
  for (int i = 0; i < a; ++i) multiply(1);
  for (int i = 0; i < b; ++i) multiply(-1);
  return coeffs;
}

}  // namespace

PolySystem witness_system(int d1, int d2, int k) {
  const bool legal = d2 >= 1 && d1 >= d2 && (d1 - d2) % 2 == 0 && std::abs(k) <= d2 && (d2 - k) % 2 == 0;
  if (!legal) {
    throw Error(ErrorCode::IllegalIndex, "no witness for degrees (" + std::to_string(d1) + "," +
                                             std::to_string(d2) + ") with index " + std::to_string(k));
  }
  const int a = (d2 + k) / 2;
  const int b = (d2 - k) / 2;
  std::vector<Integer> re, im;
  for (const Gaussian& g : gaussian_power(a, b)) {
    re.push_back(g.re);
    im.push_back(g.im);
  }
  BinaryForm f1 = form_mul(BinaryForm(std::move(re)), radius_power((d1 - d2) / 2));
  return PolySystem{{std::move(f1), BinaryForm(std::move(im))}};
}

}  // namespace nrt
