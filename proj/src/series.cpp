#include "series.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace apav {

Polynomial::Polynomial(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.emplace_back(v);
  trim();
}

void Polynomial::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Int> out(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Int> out(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Int> out(a.c);
  for (Int& v : out) v = -v;
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Int> out(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
  }
  return Polynomial(std::move(out));
}

bool try_divide(const Polynomial& a, const Polynomial& b, Polynomial* quotient) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    if (quotient) *quotient = Polynomial();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Int> rem = a.c;
  std::vector<Int> q(a.degree() - b.degree() + 1, Int(0));
  const Int& lead = b.c.back();
  for (int d = a.degree(); d >= b.degree(); --d) {
    Int& top = rem[d];
    if (top == 0) continue;
    if (top % lead != 0) return false;
    Int f = top / lead;
    q[d - b.degree()] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[d - b.degree() + j] -= f * b.c[j];
  }
  for (const Int& v : rem)
    if (v != 0) return false;
  if (quotient) *quotient = Polynomial(std::move(q));
  return true;
}

namespace {

Int content(const Polynomial& p) {
  Int g = 0;
  for (const Int& v : p.c) g = gcd(g, v);
  return g;  // zero for the zero polynomial
}

Polynomial divide_content(const Polynomial& p, const Int& g) {
  if (g == 0 || g == 1) return p;
  std::vector<Int> out(p.c);
  for (Int& v : out) v /= g;
  return Polynomial(std::move(out));
}

Polynomial primitive_part(const Polynomial& p) {
  Int g = content(p);
  Polynomial out = divide_content(p, g);
  if (!out.is_zero() && out.c.back() < 0) out = -out;
  return out;
}

// Pseudo-remainder of a by b (lead(b)^(deg a - deg b + 1) * a mod b).
Polynomial pseudo_rem(Polynomial a, const Polynomial& b) {
  const Int& lead = b.c.back();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    Int f = a.c.back();
    std::vector<Int> next(a.c.size(), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) next[i] = a.c[i] * lead;
    for (int j = 0; j <= b.degree(); ++j) next[shift + j] -= f * b.c[j];
    a = Polynomial(std::move(next));
  }
  return a;
}

}  // namespace

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero()) return primitive_part(b).is_zero() ? Polynomial() : divide_content(b, b.c.back() < 0 ? Int(-1) : Int(1));
  if (b.is_zero()) return a.c.back() < 0 ? -a : a;
  Int cont = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = primitive_part(pseudo_rem(a, b));
    a = b;
    b = r;
  }
  Polynomial g = a * Polynomial(std::vector<Int>{cont});
  if (!g.is_zero() && g.c.back() < 0) g = -g;
  return g;
}

const Polynomial& cyclotomic(int d) {
  static std::map<int, Polynomial> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // x^d - 1 over the product of cyclotomic(e) for proper divisors e of d.
  std::vector<Int> xd(d + 1, Int(0));
  xd[0] = -1;
  xd[d] = 1;
  Polynomial rem{std::vector<Int>(std::move(xd))};
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    const Polynomial& fe = cyclotomic(e);
    Polynomial q;
    if (!try_divide(rem, fe, &q)) throw std::logic_error("cyclotomic recursion failed");
    rem = q;
  }
  return cache.emplace(d, std::move(rem)).first->second;
}

RationalFunction rf(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return RationalFunction{Polynomial(), Polynomial{1}};
  Polynomial g = poly_gcd(num, den);
  if (g.degree() > 0 || (g.degree() == 0 && g.c[0] != 1)) {
    Polynomial qn, qd;
    if (!try_divide(num, g, &qn) || !try_divide(den, g, &qd))
      throw std::logic_error("gcd division failed");
    num = std::move(qn);
    den = std::move(qd);
  }
  Int cg = gcd(content(num), content(den));
  num = divide_content(num, cg);
  den = divide_content(den, cg);
  if (den.at(0) == 0) throw std::domain_error("denominator vanishes at 0");
  if (den.at(0) < 0) {
    num = -num;
    den = -den;
  }
  return RationalFunction{std::move(num), std::move(den)};
}

RationalFunction rf_const(long long v) { return RationalFunction{Polynomial{v}, Polynomial{1}}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return rf(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return rf(a.num * b.den - b.num * a.den, a.den * b.den);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return rf(a.num * b.num, a.den * b.den);
}

std::vector<Int> expand(const RationalFunction& r, int L) {
  if (r.den.at(0) != 1) throw std::domain_error("expand requires denominator with constant term 1");
  std::vector<Int> a(L + 1, Int(0));
  for (int l = 0; l <= L; ++l) {
    Int v = r.num.at(l);
    int top = std::min(l, r.den.degree());
    for (int j = 1; j <= top; ++j) v -= r.den.c[j] * a[l - j];
    a[l] = v;
  }
  return a;
}

RationalFunction fit_rational(const std::vector<Int>& coeffs,
                              const Polynomial& denominator_bound, int margin) {
  if (denominator_bound.at(0) != 1)
    throw std::invalid_argument("denominator bound must have constant term 1");
  if (margin < 0) throw std::invalid_argument("negative margin");
  int L = static_cast<int>(coeffs.size()) - 1;
  int d = denominator_bound.degree();
  if (L < d + margin)
    throw std::invalid_argument("need at least deg(bound) + margin + 1 coefficients");
  // Convolve the series with the bound; the product must be a polynomial of
  // degree <= L - margin, so the margin window certifies the fit.
  std::vector<Int> conv(L + 1, Int(0));
  for (int j = 0; j <= L; ++j) {
    Int v = 0;
    int top = std::min(j, d);
    for (int i = 0; i <= top; ++i) v += denominator_bound.c[i] * coeffs[j - i];
    conv[j] = v;
  }
  for (int j = L - margin + 1; j <= L; ++j) {
    if (conv[j] != 0)
      throw FitError("fit verification failed at coefficient " + std::to_string(j) +
                     "; raise the expansion length or the denominator bound");
  }
  conv.resize(L - margin + 1);
  return rf(Polynomial(std::move(conv)), denominator_bound);
}

const char* behavior_name(Behavior b) {
  switch (b) {
    case Behavior::EventuallyZero: return "EventuallyZero";
    case Behavior::EventuallyPeriodic: return "EventuallyPeriodic";
    case Behavior::Unbounded: return "Unbounded";
  }
  return "?";
}

BehaviorReport classify_behavior(const RationalFunction& r) {
  {  // nonnegativity precondition, checked on a prefix
    int probe = r.num.degree() + r.den.degree() + 32;
    for (const Int& v : expand(r, probe))
      if (v < 0) throw std::invalid_argument("classify_behavior requires nonnegative coefficients");
  }
  BehaviorReport rep;
  if (r.den.degree() == 0) {
    rep.kind = Behavior::EventuallyZero;
    rep.preperiod = r.num.degree() + 1;
    return rep;
  }
  // Strip distinct cyclotomic factors; periodic iff nothing else remains.
  Polynomial rest = r.den;
  long long period = 1;
  int dmax = 2 * r.den.degree() * r.den.degree() + 2;
  for (int d = 1; d <= dmax && rest.degree() > 0; ++d) {
    const Polynomial& phi = cyclotomic(d);
    if (phi.degree() > rest.degree()) continue;
    Polynomial q;
    if (try_divide(rest, phi, &q)) {
      period = to_longlong(lcm(Int(period), Int(d)));
      rest = q;
    }
  }
  if (rest.degree() != 0) {
    rep.kind = Behavior::Unbounded;
    return rep;
  }
  rep.kind = Behavior::EventuallyPeriodic;
  rep.period = period;
  // (1 - x^period) * r is a polynomial; a_i = a_{i-period} exactly beyond its degree.
  std::vector<Int> cycle(period + 1, Int(0));
  cycle[0] = 1;
  cycle[period] = -1;
  RationalFunction q = rf(Polynomial(std::move(cycle)) * r.num, r.den);
  if (q.den.degree() != 0 || q.den.at(0) != 1)
    throw std::logic_error("periodic denominator did not divide 1 - x^d");
  long long pre = std::max(0, q.num.degree() - static_cast<int>(period) + 1);
  int L = static_cast<int>(pre + 5 * period);
  std::vector<Int> a = expand(r, L);
  while (pre > 0 && a[pre - 1 + period] == a[pre - 1]) --pre;
  for (int i = static_cast<int>(pre + period); i <= L; ++i)
    if (a[i] != a[i - period]) throw std::logic_error("periodicity verification failed");
  rep.preperiod = pre;
  rep.repeating_values.assign(a.begin() + pre, a.begin() + pre + period);
  return rep;
}

}  // namespace apav
