#include "stablemaps/poincare.hpp"

#include <limits>
#include <sstream>

#include "stablemaps/errors.hpp"
#include "stablemaps/trees.hpp"

namespace stablemaps {

namespace {

QPoly q_int_or_zero(int k) { return k <= 0 ? QPoly() : q_int(k); }

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out = 1;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

// Partitions of d into parts >= 1, each as (part value, multiplicity) with
// values descending.
void partitions_of(int d, int max_part, std::vector<std::pair<int, int>>& cur,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = std::min(d, max_part); v >= 1; --v) {
    for (int mult = 1; mult * v <= d; ++mult) {
      cur.emplace_back(v, mult);
      partitions_of(d - mult * v, v - 1, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

void PoincareQuery::validate() const {
  if (n < 1 || d < 1 || m < 1)
    throw InvalidQuery("query requires n >= 1, d >= 1, m >= 1");
}

PoincareEngine::PoincareEngine(int n) : n_(n) {
  if (n < 1) throw InvalidQuery("PoincareEngine: n >= 1 required");
}

const QPoly& PoincareEngine::p_l_m(int l, int m, int d) {
  if (l < 0 || m < l || d < 0)
    throw InvalidQuery("p_l_m requires 0 <= l <= m and d >= 0");
  auto key = std::make_tuple(l, m, d);
  auto it = p_.find(key);
  if (it != p_.end()) return it->second;
  QPoly value = compute_p(l, m, d);
  value.require_integer_coeffs("p_l_m");
  return p_.emplace(key, std::move(value)).first->second;
}

QPoly PoincareEngine::compute_p(int l, int m, int d) {
  if (l == m) return compute_diagonal(m, d);
  // One step of the descent that un-pins leaf l+1 from the root: a tree
  // counted with only l pinned leaves either already has leaf l+1 at the
  // root, or splits along the root edge towards it into a leafless-rooted
  // branch carrying leaf l+1 plus j free leaves, and a remainder where the
  // severed edge acts as a fresh pinned root leaf. The factor q restores the
  // branch root's weight range.
  QPoly acc = p_l_m(l + 1, m, d);
  QPoly split;
  for (int j = 0; j <= m - l - 1; ++j) {
    const Integer ways = binomial(m - l - 1, j);
    QPoly conv;
    for (int e = 0; e <= d; ++e) {
      const QPoly& right = p_l_m(l + 1, m - j, d - e);
      if (right.is_zero()) continue;
      conv += p_l_m(0, j + 1, e) * right;
    }
    split += conv.scale(Rational(ways));
  }
  acc += QPoly::monomial(1) * split;
  return acc;
}

QPoly PoincareEngine::compute_diagonal(int m, int d) {
  // All m leaves at the root. A single vertex is the only shape at d = 0.
  if (d == 0) return q_int_or_zero(m - 2);
  // Root of positive degree: swap one unit of degree for n+1 root leaves.
  QPoly acc = p_l_m(m + n_ + 1, m + n_ + 1, d - 1);
  // Root of degree zero: severing the root edges leaves an unordered forest
  // of leafless trees, grouped by equal degrees, and a bare root vertex whose
  // weight range is that of a degree-zero vertex with m leaves and one stub
  // per severed edge.
  std::vector<std::vector<std::pair<int, int>>> parts;
  std::vector<std::pair<int, int>> cur;
  partitions_of(d, d, cur, parts);
  for (const auto& partition : parts) {
    int components = 0;
    QPoly forests = QPoly::constant(1);
    for (const auto& [value, mult] : partition) {
      components += mult;
      forests *= s_p00(mult, value);
    }
    const QPoly root_factor = q_int_or_zero(m + components - 2);
    if (root_factor.is_zero() || forests.is_zero()) continue;
    acc += QPoly::monomial(components) * forests * root_factor;
  }
  return acc;
}

const QPoly& PoincareEngine::s_p00(int i, int d) {
  if (i < 1 || d < 0) throw InvalidQuery("s_p00 requires i >= 1 and d >= 0");
  auto key = std::make_pair(i, d);
  auto it = s_.find(key);
  if (it != s_.end()) return it->second;
  QPoly value = sym_power(p_l_m(0, 0, d), i);
  return s_.emplace(key, std::move(value)).first->second;
}

namespace {

std::vector<long long> to_ll(const QPoly& p, const std::string& context) {
  std::vector<long long> out;
  for (const Integer& c : p.integer_coeffs(context)) {
    if (c < std::numeric_limits<long long>::min() || c > std::numeric_limits<long long>::max())
      throw ComputationError(context + ": coefficient out of range");
    out.push_back(static_cast<long long>(c));
  }
  return out;
}

}  // namespace

std::map<std::string, std::vector<long long>> PoincareEngine::export_entries() const {
  std::map<std::string, std::vector<long long>> out;
  for (const auto& [key, poly] : p_) {
    std::ostringstream os;
    os << "P:" << std::get<0>(key) << "," << std::get<1>(key) << "," << std::get<2>(key) << ","
       << n_;
    out[os.str()] = to_ll(poly, "cache export");
  }
  for (const auto& [key, poly] : s_) {
    std::ostringstream os;
    os << "S:" << key.first << "," << key.second << "," << n_;
    out[os.str()] = to_ll(poly, "cache export");
  }
  return out;
}

void PoincareEngine::import_entries(
    const std::map<std::string, std::vector<long long>>& entries) {
  for (const auto& [key, coeffs] : entries) {
    if (key.size() < 3 || key[1] != ':') continue;
    std::vector<int> nums;
    std::istringstream is(key.substr(2));
    std::string field;
    bool ok = true;
    while (std::getline(is, field, ',')) {
      try {
        nums.push_back(std::stoi(field));
      } catch (const std::exception&) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Rational> rs(coeffs.begin(), coeffs.end());
    QPoly poly{std::move(rs)};
    if (key[0] == 'P' && nums.size() == 4 && nums[3] == n_)
      p_.emplace(std::make_tuple(nums[0], nums[1], nums[2]), std::move(poly));
    else if (key[0] == 'S' && nums.size() == 3 && nums[2] == n_)
      s_.emplace(std::make_pair(nums[0], nums[1]), std::move(poly));
  }
}

QPoly poincare_direct(const PoincareQuery& q) {
  q.validate();
  QPoly sum;
  for (const auto& tree : enumerate_stable_trees(q.m, q.d)) sum += tree_contribution(tree, q.n);
  QPoly out = q_int(q.n + 1) * sum;
  out.require_integer_coeffs("poincare_direct");
  return out;
}

QPoly poincare_recursive(const PoincareQuery& q, PoincareEngine& engine) {
  q.validate();
  if (engine.n() != q.n) throw InvalidQuery("poincare_recursive: engine built for different n");
  return q_int(q.n + 1) * engine.p_l_m(1, q.m, q.d);
}

QPoly poincare_recursive(const PoincareQuery& q) {
  q.validate();
  PoincareEngine engine(q.n);
  return poincare_recursive(q, engine);
}

QPoly p_l_m(int l, int m, int d, int n) {
  PoincareEngine engine(n);
  return engine.p_l_m(l, m, d);
}

QPoly s_p00(int i, int d, int n) {
  PoincareEngine engine(n);
  return engine.s_p00(i, d);
}

std::vector<long long> betti_coefficients(const PoincareQuery& q, const QPoly& poly) {
  const int dim = (q.n + 1) * (q.d + 1) + q.m - 4;
  if (poly.degree() != dim)
    throw ComputationError("betti_table: polynomial degree " + std::to_string(poly.degree()) +
                           " does not match dim " + std::to_string(dim));
  auto out = to_ll(poly, "betti_table");
  for (long long c : out)
    if (c <= 0) throw ComputationError("betti_table: non-positive coefficient");
  return out;
}

std::vector<long long> betti_table(const PoincareQuery& q) {
  return betti_coefficients(q, poincare_direct(q));
}

}  // namespace stablemaps
