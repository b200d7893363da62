#pragma once

#include <map>
#include <string>
#include <vector>

#include "stablemaps/partitions.hpp"
#include "stablemaps/qpoly.hpp"

namespace stablemaps {

/// Power product H^h psi^p * prod T_key^e, with an optional formal slot t^aux
/// used while assembling expressions that substitute a generator for t.
struct Monomial {
  int h = 0;
  int psi = 0;
  int aux = 0;
  std::map<std::vector<Label>, int> t;

  int total_degree() const;
  bool operator==(const Monomial& other) const = default;
  bool operator<(const Monomial& other) const;
};

/// Sparse multivariate polynomial over the divisor generators with exact
/// rational coefficients and canonical term ordering.
class RingExpression {
 public:
  RingExpression() = default;
  static RingExpression constant(const Rational& c);
  static RingExpression h_class();
  static RingExpression psi_class();
  static RingExpression t_class(const std::vector<Label>& key);
  static RingExpression t_class(const TwoPartition& part);
  static RingExpression aux_t();
  static RingExpression from_term(const Monomial& mono, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  RingExpression operator+(const RingExpression& other) const;
  RingExpression operator-(const RingExpression& other) const;
  RingExpression operator*(const RingExpression& other) const;
  RingExpression& operator+=(const RingExpression& other);
  RingExpression scale(const Rational& c) const;
  RingExpression pow(int e) const;
  bool operator==(const RingExpression& other) const = default;

  /// Replaces the formal t by the generator T_key (or by 0 when key is null).
  RingExpression substitute_aux(const std::vector<Label>* key) const;

  /// All terms share one total degree (true for the zero polynomial).
  bool is_homogeneous() const;

  std::string to_string() const;
  /// JSON array with one {"coeff","H","psi","T"} object per term.
  std::string to_json() const;

 private:
  std::map<Monomial, Rational> terms_;
  void add_term(const Monomial& mono, const Rational& c);
};

}  // namespace stablemaps
