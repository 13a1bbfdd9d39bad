#include "nrt/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace nrt {

int sign(const Integer& v) { return v.sign(); }
int sign(const Rational& v) { return v.sign(); }

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return UPoly(std::move(coeffs));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UPoly::sign_at(const Rational& x) const { return sign(eval(x)); }

int UPoly::sign_at_pos_infinity() const { return is_zero() ? 0 : sign(leading()); }

int UPoly::sign_at_neg_infinity() const {
  if (is_zero()) return 0;
  return degree() % 2 == 0 ? sign(leading()) : -sign(leading());
}

UPoly UPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading();
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c /= lc;
  return UPoly(std::move(out));
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly operator-(UPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

UPoly operator*(const Rational& c, UPoly a) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || i == 0) out << mag;
    if (i > 0) out << (mag != 1 ? "*" : "") << var;
    if (i > 1) out << '^' << i;
    first = false;
  }
  return out.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational lc = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k + db)] / lc;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() < 1) return p;
  return divmod(p, gcd(p, p.derivative())).first;
}

Integer root_bound(const UPoly& p) {
  if (p.degree() < 1) return Integer(1);
  Rational worst = 0;
  const Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational ratio = abs(p.coeffs()[static_cast<std::size_t>(i)]) / lc;
    if (ratio > worst) worst = ratio;
  }
  // Cauchy: every root has modulus <= 1 + max |c_i / c_n|.
  Integer floor_worst = numerator(worst) / denominator(worst);
  return floor_worst + 2;
}

namespace {

std::vector<Integer> primitive_integer(const UPoly& p) {
  Integer common_den = 1;
  for (const auto& c : p.coeffs()) common_den = lcm(common_den, Integer(denominator(c)));
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = numerator(c) * (common_den / denominator(c));
    content = gcd(content, v);
    out.push_back(std::move(v));
  }
  if (content > 1) {
    for (auto& v : out) v /= content;
  }
  return out;
}

// Sign of b^deg * P(a / b) for b > 0, which is the sign of P(a / b).
int sign_at(const std::vector<Integer>& coeffs, const Integer& num, const Integer& den) {
  if (coeffs.empty()) return 0;
  Integer acc = coeffs.back();
  Integer den_power = 1;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    den_power *= den;
    acc = acc * num + coeffs[i] * den_power;
  }
  return acc.sign();
}

template <typename SignFn>
int count_variations(std::size_t n, SignFn&& sign_of) {
  int variations = 0;
  int last = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int s = sign_of(i);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  UPoly prev = squarefree_part(p);
  UPoly cur = prev.derivative();
  chain_.push_back(primitive_integer(prev));
  while (!cur.is_zero()) {
    chain_.push_back(primitive_integer(cur));
    UPoly next = -divmod(prev, cur).second;
    prev = std::move(cur);
    cur = std::move(next);
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  const Integer num = numerator(x);
  const Integer den = denominator(x);
  return count_variations(chain_.size(), [&](std::size_t i) { return sign_at(chain_[i], num, den); });
}

int SturmSequence::variations_at_pos_infinity() const {
  return count_variations(chain_.size(), [&](std::size_t i) { return chain_[i].back().sign(); });
}

int SturmSequence::variations_at_neg_infinity() const {
  return count_variations(chain_.size(), [&](std::size_t i) {
    const int s = chain_[i].back().sign();
    return (chain_[i].size() - 1) % 2 == 0 ? s : -s;
  });
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_real_roots() const {
  return variations_at_neg_infinity() - variations_at_pos_infinity();
}

int cauchy_index(const UPoly& numerator, const UPoly& denominator) {
  if (denominator.is_zero()) throw std::domain_error("Cauchy index with zero denominator");
  std::vector<UPoly> chain{denominator};
  UPoly prev = denominator;
  UPoly cur = numerator;
  while (!cur.is_zero()) {
    chain.push_back(cur);
    UPoly next = -divmod(prev, cur).second;
    prev = std::move(cur);
    cur = std::move(next);
  }
  auto at_neg = count_variations(chain.size(), [&](std::size_t i) { return chain[i].sign_at_neg_infinity(); });
  auto at_pos = count_variations(chain.size(), [&](std::size_t i) { return chain[i].sign_at_pos_infinity(); });
  return at_neg - at_pos;
}

Rational split_point(const Rational& a, const Rational& b, std::initializer_list<const UPoly*> avoid) {
  const Rational width = b - a;
  for (long den = 2;; ++den) {
    for (long num = 1; num < den; ++num) {
      const Rational m = a + width * Rational(num, den);
      bool clear = true;
      for (const UPoly* p : avoid) {
        if (p->sign_at(m) == 0) {
          clear = false;
          break;
        }
      }
      if (clear) return m;
    }
  }
}

std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const SturmSequence sturm(p);
  const Rational bound(root_bound(p));

  struct Pending {
    Rational lo, hi;
    int v_lo, v_hi;
  };
  // Depth-first, right half pushed first, so intervals come out ascending.
  std::vector<Pending> stack{{-bound, bound, sturm.variations_at(-bound), sturm.variations_at(bound)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    const int roots = cur.v_lo - cur.v_hi;
    if (roots == 0) continue;
    if (roots == 1) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    const Rational mid = split_point(cur.lo, cur.hi, {&p});
    const int v_mid = sturm.variations_at(mid);
    stack.push_back({mid, cur.hi, v_mid, cur.v_hi});
    stack.push_back({cur.lo, mid, cur.v_lo, v_mid});
  }
  return out;
}

}  // namespace nrt
