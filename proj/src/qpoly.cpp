#include "stablemaps/qpoly.hpp"

#include <sstream>

#include "stablemaps/errors.hpp"

namespace stablemaps {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& c) {
  QPoly p;
  if (c != 0) p.coeffs_.push_back(c);
  return p;
}

QPoly QPoly::monomial(int exponent, const Rational& c) {
  if (exponent < 0) throw InvalidQuery("monomial exponent must be non-negative");
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<size_t>(exponent) + 1, Rational(0));
    p.coeffs_.back() = c;
  }
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

QPoly QPoly::operator+(const QPoly& other) const {
  QPoly r = *this;
  r += other;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly QPoly::operator-(const QPoly& other) const { return *this + other.scale(-1); }

QPoly QPoly::operator*(const QPoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& other) {
  *this = *this * other;
  return *this;
}

QPoly QPoly::scale(const Rational& c) const {
  if (c == 0) return {};
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return QPoly(std::move(out));
}

QPoly QPoly::substitute_power(int j) const {
  if (j < 1) throw InvalidQuery("substitute_power requires a positive exponent");
  if (is_zero()) return {};
  std::vector<Rational> out(static_cast<size_t>(degree()) * j + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i * j] = coeffs_[i];
  return QPoly(std::move(out));
}

Rational QPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool QPoly::has_integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (denominator(c) != 1) return false;
  return true;
}

bool QPoly::has_nonnegative_integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (denominator(c) != 1 || c < 0) return false;
  return true;
}

void QPoly::require_integer_coeffs(const std::string& context) const {
  if (!has_integer_coeffs())
    throw ComputationError(context + ": non-integral coefficient in " + to_string());
}

std::vector<Integer> QPoly::integer_coeffs(const std::string& context) const {
  require_integer_coeffs(context);
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(numerator(c));
  return out;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool unit = (a == 1);
    if (i == 0) {
      os << a;
    } else {
      if (!unit) os << a;
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

QPoly divide_exact(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw ComputationError("divide_exact: division by zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree())
    throw ComputationError("divide_exact: " + num.to_string() + " not divisible by " +
                           den.to_string());
  std::vector<Rational> rem = num.coeffs();
  std::vector<Rational> quot(static_cast<size_t>(num.degree() - den.degree()) + 1, Rational(0));
  const auto& d = den.coeffs();
  const Rational lead = d.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Rational c = rem[static_cast<size_t>(k) + d.size() - 1] / lead;
    quot[static_cast<size_t>(k)] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < d.size(); ++j) rem[static_cast<size_t>(k) + j] -= c * d[j];
  }
  for (const auto& r : rem)
    if (r != 0)
      throw ComputationError("divide_exact: nonzero remainder dividing " + num.to_string() +
                             " by " + den.to_string());
  return QPoly(std::move(quot));
}

QPoly q_int(int k) {
  if (k < 0) throw InvalidQuery("q_int requires k >= 0");
  return QPoly(std::vector<Rational>(static_cast<size_t>(k), Rational(1)));
}

QPoly gaussian_binomial(int top, int i) {
  if (i < 0) throw InvalidQuery("gaussian_binomial requires i >= 0");
  if (i == 0) return QPoly::constant(1);
  if (top < i) return {};
  QPoly num = QPoly::constant(1);
  QPoly den = QPoly::constant(1);
  for (int j = 1; j <= i; ++j) {
    num *= QPoly::monomial(top - i + j) - QPoly::constant(1);
    den *= QPoly::monomial(j) - QPoly::constant(1);
  }
  return divide_exact(num, den);
}

QPoly sym_power(const QPoly& f, int i) {
  if (i < 0) throw InvalidQuery("sym_power requires i >= 0");
  if (!f.has_nonnegative_integer_coeffs())
    throw InvalidQuery("sym_power input must count a finite multiset: " + f.to_string());
  std::vector<QPoly> s(static_cast<size_t>(i) + 1);
  s[0] = QPoly::constant(1);
  // Power sums f(q^j) reused across the recurrence.
  std::vector<QPoly> powers(static_cast<size_t>(i) + 1);
  for (int j = 1; j <= i; ++j) powers[static_cast<size_t>(j)] = f.substitute_power(j);
  for (int k = 1; k <= i; ++k) {
    QPoly acc;
    for (int j = 1; j <= k; ++j)
      acc += powers[static_cast<size_t>(j)] * s[static_cast<size_t>(k - j)];
    s[static_cast<size_t>(k)] = acc.scale(Rational(1, k));
  }
  s[static_cast<size_t>(i)].require_integer_coeffs("sym_power");
  return s[static_cast<size_t>(i)];
}

const QPoly& GFTable::at(int d) const {
  auto it = entries_.find(d);
  if (it == entries_.end())
    throw InvalidQuery("GFTable: no entry at degree " + std::to_string(d));
  return it->second;
}

void GFTable::set(int d, QPoly value) {
  auto it = entries_.find(d);
  if (it != entries_.end()) {
    if (!(it->second == value))
      throw ComputationError("GFTable: conflicting refill at degree " + std::to_string(d));
    return;
  }
  entries_.emplace(d, std::move(value));
}

QPoly star(const GFTable& P, const GFTable& Q, int d) {
  if (d < 0) throw InvalidQuery("star requires d >= 0");
  QPoly acc;
  for (int e = 0; e <= d; ++e) acc += P.at(e) * Q.at(d - e);
  return acc;
}

}  // namespace stablemaps
