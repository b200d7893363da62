#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "stablemaps/qpoly.hpp"

namespace stablemaps {

struct PoincareQuery {
  int n = 0;  // projective dimension
  int d = 0;  // map degree
  int m = 0;  // marked points

  void validate() const;  // n >= 1, d >= 1, m >= 1
};

/// Memoized evaluator, for a fixed projective dimension n, of the
/// degree-indexed families behind the recursive Betti algorithm:
///
///   p_l_m(l, m, d)  — weighted count of rooted stable trees with m labeled
///                     leaves of which the first l sit at the root;
///   s_p00(i, d)     — weighted count of unordered i-tuples of leafless
///                     rooted trees of total map degree d each.
///
/// Descent in l splits off the branch leading to the l-th root leaf (one
/// convolution term per way of sharing the remaining leaves); the diagonal
/// l = m trades a unit of root degree for n+1 fresh root leaves or, at root
/// degree zero, severs all root edges into a leafless forest graded by a
/// partition of d.
class PoincareEngine {
 public:
  explicit PoincareEngine(int n);

  int n() const { return n_; }
  const QPoly& p_l_m(int l, int m, int d);
  const QPoly& s_p00(int i, int d);

  /// Pre-computed entries keyed "P:l,m,d,n" / "S:i,d,n" with integer
  /// coefficient arrays; used by the persistent CLI cache.
  std::map<std::string, std::vector<long long>> export_entries() const;
  void import_entries(const std::map<std::string, std::vector<long long>>& entries);

 private:
  int n_;
  std::map<std::tuple<int, int, int>, QPoly> p_;
  std::map<std::pair<int, int>, QPoly> s_;

  QPoly compute_p(int l, int m, int d);
  QPoly compute_diagonal(int m, int d);
};

/// Corollary formula: [n+1]_q times the sum of tree contributions over all
/// isomorphism classes of rooted stable trees.
QPoly poincare_direct(const PoincareQuery& q);

/// Recursive formula: [n+1]_q * p_l_m(1, m, d).
QPoly poincare_recursive(const PoincareQuery& q);
QPoly poincare_recursive(const PoincareQuery& q, PoincareEngine& engine);

QPoly p_l_m(int l, int m, int d, int n);
QPoly s_p00(int i, int d, int n);

/// Coefficient list of the Poincaré polynomial; checks that the degree equals
/// dim = (n+1)(d+1)+m-4 and that all coefficients are positive integers.
std::vector<long long> betti_table(const PoincareQuery& q);
std::vector<long long> betti_coefficients(const PoincareQuery& q, const QPoly& poly);

}  // namespace stablemaps
