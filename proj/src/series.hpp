#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "ints.hpp"

namespace apav {

/// Dense univariate polynomial over Z, coefficient of x^i at index i.
/// Trailing zero coefficients are always trimmed.
struct Polynomial {
  std::vector<Int> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs);
  Polynomial(std::initializer_list<long long> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  Int at(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Int(0); }
  void trim();

  bool operator==(const Polynomial& o) const { return c == o.c; }
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);

/// Exact division in Z[x]; returns false when b does not divide a.
bool try_divide(const Polynomial& a, const Polynomial& b, Polynomial* quotient);

/// Polynomial gcd over Z via primitive pseudo-remainder sequences.
/// Result has positive leading coefficient.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// x^d - 1 divided by all lower-order cyclotomic factors. Cached.
const Polynomial& cyclotomic(int d);

/// Rational function num/den over Z with den(0) > 0, gcd(num, den) = 1,
/// and gcd of all integer contents equal to 1.
struct RationalFunction {
  Polynomial num;
  Polynomial den;

  bool operator==(const RationalFunction& o) const { return num == o.num && den == o.den; }
};

/// Normalizes; throws std::domain_error when den is zero or den(0) = 0.
RationalFunction rf(Polynomial num, Polynomial den);
RationalFunction rf_const(long long v);

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

/// First L+1 power-series coefficients of r; requires den(0) = 1.
std::vector<Int> expand(const RationalFunction& r, int L);

struct FitError : std::runtime_error {
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

/// Recovers the unique rational function with denominator dividing
/// `denominator_bound` that matches every supplied coefficient. The last
/// `margin` coefficients are reserved for verification; a mismatch there
/// throws FitError (the bound or the expansion length is too small).
RationalFunction fit_rational(const std::vector<Int>& coeffs,
                              const Polynomial& denominator_bound, int margin);

enum class Behavior { EventuallyZero, EventuallyPeriodic, Unbounded };

struct BehaviorReport {
  Behavior kind = Behavior::Unbounded;
  long long period = 0;     // minimal d with den | 1 - x^d, when periodic
  long long preperiod = 0;  // smallest s with a_i = a_{i-period} for all i >= s + period
  std::vector<Int> repeating_values;
};

const char* behavior_name(Behavior b);

/// Coefficient-behavior trichotomy. Eventually zero iff r is a polynomial;
/// eventually periodic iff the reduced denominator is a product of distinct
/// cyclotomic polynomials; unbounded otherwise. Requires a nonnegative
/// expansion (checked on a prefix).
BehaviorReport classify_behavior(const RationalFunction& r);

}  // namespace apav
