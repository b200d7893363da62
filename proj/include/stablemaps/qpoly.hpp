#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace stablemaps {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial in q with exact rational coefficients.
///
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector. coeff(i) is the coefficient of q^i. All
/// arithmetic is exact.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly monomial(int exponent, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  QPoly operator+(const QPoly& other) const;
  QPoly operator-(const QPoly& other) const;
  QPoly operator*(const QPoly& other) const;
  QPoly& operator+=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  bool operator==(const QPoly& other) const = default;

  QPoly scale(const Rational& c) const;
  /// q -> q^j, monomial-wise.
  QPoly substitute_power(int j) const;
  Rational evaluate(const Rational& x) const;

  bool has_integer_coeffs() const;
  bool has_nonnegative_integer_coeffs() const;
  /// Throws ComputationError unless every coefficient is an integer.
  void require_integer_coeffs(const std::string& context) const;
  std::vector<Integer> integer_coeffs(const std::string& context) const;

  /// Ascending-power display, e.g. "1 + 3q + q^2".
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

/// Exact quotient num/den; throws ComputationError on a nonzero remainder or
/// zero divisor.
QPoly divide_exact(const QPoly& num, const QPoly& den);

/// q-integer [k]_q = 1 + q + ... + q^{k-1}; q_int(0) = 0. Requires k >= 0.
QPoly q_int(int k);

/// Gaussian binomial [top choose i]_q via exact division of the expanded
/// numerator product by the expanded denominator product. 0 when top < i.
QPoly gaussian_binomial(int top, int i);

/// Generating polynomial of size-i multisets of the weighted objects counted
/// by f (which must have non-negative integer coefficients). Newton
/// recurrence: i*S^i(f) = sum_{j=1..i} f(q^j) * S^{i-j}(f).
QPoly sym_power(const QPoly& f, int i);

/// Memoized degree-indexed family d -> QPoly with fill-once discipline: a
/// second set() of the same key must carry the identical value.
class GFTable {
 public:
  bool has(int d) const { return entries_.contains(d); }
  const QPoly& at(int d) const;
  void set(int d, QPoly value);

 private:
  std::map<int, QPoly> entries_;
};

/// Degree convolution (P * Q)(d) = sum_{e=0..d} P(e) Q(d-e).
QPoly star(const GFTable& P, const GFTable& Q, int d);

}  // namespace stablemaps
