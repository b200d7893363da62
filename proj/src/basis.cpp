#include "stablemaps/basis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stablemaps/errors.hpp"
#include "stablemaps/poincare.hpp"

namespace stablemaps {

namespace {

Integer binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out = 1;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

// Pre-order branch label sets under the canonical marker assignment
// (consecutive blocks of D in pre-order). Entry 0 (the root) stays empty.
std::vector<std::vector<Label>> branch_keys(const TreeNode& tree) {
  std::vector<std::vector<Label>> keys;
  int next_marker = 1;
  auto walk = [&](auto&& self, const TreeNode& node) -> std::vector<Label> {
    const size_t pos = keys.size();
    keys.emplace_back();
    std::vector<Label> mine;
    for (int i : node.leaves) mine.push_back(Label::marked(i));
    for (int j = 0; j < node.degree; ++j) mine.push_back(Label::marker(next_marker++));
    for (const auto& c : node.children) {
      auto sub = self(self, c);
      mine.insert(mine.end(), sub.begin(), sub.end());
    }
    std::sort(mine.begin(), mine.end());
    keys[pos] = mine;
    return mine;
  };
  walk(walk, tree);
  keys[0].clear();  // the root has no branch of its own
  return keys;
}

int tree_total_degree(const TreeNode& t) {
  int d = t.degree;
  for (const auto& c : t.children) d += tree_total_degree(c);
  return d;
}

}  // namespace

std::vector<BasisClass> enumerate_basis(int n, int d, int m, int k) {
  if (n < 1 || d < 1 || m < 1) throw InvalidQuery("enumerate_basis: n, d, m >= 1 required");
  const int dim = (n + 1) * (d + 1) + m - 4;
  if (k < 0 || k > dim)
    throw InvalidQuery("enumerate_basis: k must lie in 0.." + std::to_string(dim));
  std::vector<BasisClass> out;
  for (const auto& tree : enumerate_stable_trees(m, d)) {
    for (const auto& b : enumerate_b_structures(tree, n)) {
      const int total = b.total();
      const int h_power = k - total;
      if (h_power < 0 || h_power > n) continue;
      out.push_back({tree, b, k, h_power, b.b[0]});
    }
  }
  return out;
}

std::string class_descriptor(const BasisClass& c) {
  std::vector<std::string> factors;
  if (c.h_power > 0)
    factors.push_back(c.h_power == 1 ? "H" : "H^" + std::to_string(c.h_power));
  if (c.psi_power > 0)
    factors.push_back(c.psi_power == 1 ? "psi" : "psi^" + std::to_string(c.psi_power));
  const auto keys = branch_keys(c.tree);
  std::string sym;
  for (size_t v = 1; v < keys.size(); ++v) {
    std::string f = "T{";
    for (size_t i = 0; i < keys[v].size(); ++i) {
      if (i) f += ",";
      f += keys[v][i].to_string();
    }
    f += "}";
    if (c.b.b[v] > 1) f += "^" + std::to_string(c.b.b[v]);
    if (!sym.empty()) sym += " ";
    sym += f;
  }
  if (!sym.empty()) factors.push_back("sym_d(" + sym + ")");
  if (factors.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " ";
    out += factors[i];
  }
  return out;
}

RingExpression class_expression(const BasisClass& c) {
  const int d = tree_total_degree(c.tree);
  if (d > 4)
    throw InvalidQuery("class_expression: symmetrized expansion limited to d <= 4");
  const auto keys = branch_keys(c.tree);
  std::vector<int> perm(static_cast<size_t>(d));
  std::iota(perm.begin(), perm.end(), 1);
  Integer dfact = 1;
  for (int j = 2; j <= d; ++j) dfact *= j;
  RingExpression out;
  do {
    Monomial mono;
    mono.h = c.h_power;
    mono.psi = c.psi_power;
    for (size_t v = 1; v < keys.size(); ++v) {
      std::vector<Label> image;
      image.reserve(keys[v].size());
      for (const Label& l : keys[v])
        image.push_back(l.is_marker ? Label::marker(perm[static_cast<size_t>(l.index - 1)])
                                    : l);
      std::sort(image.begin(), image.end());
      mono.t[image] += c.b.b[v];
    }
    out += RingExpression::constant(Rational(1, dfact)) *
           [&] {
             RingExpression e = RingExpression::constant(1);
             Monomial unit;
             std::swap(unit, mono);
             RingExpression term;
             term += RingExpression::constant(1);
             return term;
           }();
    // (constructed below instead)
    (void)mono;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<TwoPartition> ring_generators(int m, int d) {
  if (m < 1 || d < 0) throw InvalidQuery("ring_generators: m >= 1, d >= 0 required");
  std::vector<Label> dprime;
  for (int j = 1; j <= d; ++j) dprime.push_back(Label::marker(j));
  for (int i = 2; i <= m; ++i) dprime.push_back(Label::marked(i));
  const int L = static_cast<int>(dprime.size());
  if (L > 24) throw InvalidQuery("ring_generators: ground set too large");
  std::vector<TwoPartition> out;
  for (unsigned mask = 1; mask + 1 < (1u << L); ++mask) {
    std::set<Label> h;
    for (int i = 0; i < L; ++i)
      if ((mask >> i) & 1u) h.insert(dprime[static_cast<size_t>(i)]);
    if (is_stable_h(h, m, d)) out.emplace_back(std::move(h), m, d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int marker_count(const std::set<Label>& s) {
  return static_cast<int>(
      std::count_if(s.begin(), s.end(), [](const Label& l) { return l.is_marker; }));
}

std::set<Label> marker_part(const std::set<Label>& s) {
  std::set<Label> out;
  for (const auto& l : s)
    if (l.is_marker) out.insert(l);
  return out;
}

bool subset(const std::set<Label>& a, const std::set<Label>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::set<Label>& a, const std::set<Label>& b) {
  for (const auto& l : a)
    if (b.contains(l)) return false;
  return true;
}

int diff_size(const std::set<Label>& a, const std::set<Label>& b) {
  int out = 0;
  for (const auto& l : a)
    if (!b.contains(l)) ++out;
  return out;
}

}  // namespace

std::vector<Relation> emit_relations(int n, int d, int m) {
  if (n < 1 || d < 1 || m < 1) throw InvalidQuery("emit_relations: n, d, m >= 1 required");
  if (d + m > 8)
    throw InvalidQuery("emit_relations: d + m <= 8 required (2^(d+m-1) generators)");
  const auto gens = ring_generators(m, d);
  const auto H = RingExpression::h_class();
  const auto Psi = RingExpression::psi_class();
  std::vector<Relation> out;

  // (1) the hyperplane power.
  out.push_back({1, H.pow(n + 1)});

  // (2) products of crossing boundary divisors.
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      const auto& a = gens[i].h();
      const auto& b = gens[j].h();
      if (disjoint(a, b) || subset(a, b) || subset(b, a)) continue;
      out.push_back({2, RingExpression::t_class(gens[i]) * RingExpression::t_class(gens[j])});
    }
  }

  // (3) the three marked-point families.
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      std::set<Label> uni = gens[i].h();
      uni.insert(gens[j].h().begin(), gens[j].h().end());
      RingExpression sum = Psi;
      for (const auto& g : gens)
        if (subset(uni, g.h())) sum += RingExpression::t_class(g);
      out.push_back(
          {3, RingExpression::t_class(gens[i]) * RingExpression::t_class(gens[j]) * sum});
    }
  }
  if (m >= 2) {
    for (const auto& gen : gens) {
      for (int i = 2; i <= m; ++i) {
        const Label li = Label::marked(i);
        if (gen.h().contains(li)) continue;
        std::set<Label> uni = gen.h();
        uni.insert(li);
        RingExpression sum = Psi;
        for (const auto& g : gens)
          if (subset(uni, g.h())) sum += RingExpression::t_class(g);
        out.push_back({3, RingExpression::t_class(gen) * sum});
      }
    }
  }
  if (m >= 3) {
    for (int i = 2; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        const std::set<Label> pair{Label::marked(i), Label::marked(j)};
        RingExpression sum = Psi;
        for (const auto& g : gens)
          if (subset(pair, g.h())) sum += RingExpression::t_class(g);
        out.push_back({3, sum});
      }
    }
  }

  // (4) pullbacks of the hyperplane power at the other marked points.
  if (m > 1) {
    for (int i = 2; i <= m; ++i) {
      const Label li = Label::marked(i);
      RingExpression base = H + Psi.scale(d);
      for (const auto& g : gens) {
        if (!g.h().contains(li)) continue;
        const int weight = static_cast<int>(g.h().size()) - marker_count(g.h());
        base += RingExpression::t_class(g).scale(weight);
      }
      out.push_back({4, base.pow(n + 1)});
    }
  }

  // (5) per generator h, compare hyperplane powers across every other h'.
  // The difference of the two (n+1)-st powers inside the bracket factors as
  // (A - B) * sum A^j B^(n-j) with A - B = |h'_D \ h_D| * (psi + sum T + t),
  // so the inverse prefactor cancels exactly and no division happens.
  for (const auto& gen : gens) {
    const std::set<Label> hD = marker_part(gen.h());
    const int comp_d = d - static_cast<int>(hD.size());  // |D \ h|
    RingExpression inner;
    for (const auto& other : gens) {
      if (other == gen) continue;
      const std::set<Label> hpD = marker_part(other.h());
      const int c = diff_size(hpD, hD);
      if (c == 0) continue;
      std::set<Label> hD_union = hD;
      hD_union.insert(hpD.begin(), hpD.end());
      const int comp_both = d - static_cast<int>(hD_union.size());  // |D\h ∩ D\h'|
      RingExpression A = H + Psi.scale(comp_d) + RingExpression::aux_t().scale(c);
      RingExpression B = H + Psi.scale(comp_both);
      for (const auto& g : gens) {
        if (g == other || !subset(other.h(), g.h())) continue;
        const std::set<Label> gD = marker_part(g.h());
        A += RingExpression::t_class(g).scale(diff_size(gD, hD));
        B += RingExpression::t_class(g).scale(diff_size(gD, hD_union));
      }
      RingExpression series;
      RingExpression apow = RingExpression::constant(1);
      std::vector<RingExpression> bpow(static_cast<size_t>(n) + 1);
      bpow[0] = RingExpression::constant(1);
      for (int j = 1; j <= n; ++j) bpow[static_cast<size_t>(j)] = bpow[static_cast<size_t>(j - 1)] * B;
      for (int j = 0; j <= n; ++j) {
        series += apow * bpow[static_cast<size_t>(n - j)];
        if (j < n) apow = apow * A;
      }
      const RingExpression P = series.scale(c);
      const std::vector<Label> key(other.h().begin(), other.h().end());
      inner += P.substitute_aux(&key) - P.substitute_aux(nullptr);
    }
    // psi^{-1}((H + |D\h| psi)^{n+1} - H^{n+1}), expanded binomially.
    for (int j = 1; j <= n + 1; ++j) {
      Integer coeff = binom(n + 1, j);
      Integer scale = 1;
      for (int t = 0; t < j; ++t) scale *= comp_d;
      Monomial mono;
      mono.h = n + 1 - j;
      mono.psi = j - 1;
      RingExpression term;
      term += RingExpression::constant(Rational(coeff * scale));
      RingExpression hh = H.pow(mono.h) * Psi.pow(mono.psi);
      inner += term * hh;
    }
    out.push_back({5, RingExpression::t_class(gen) * inner});
  }

  return out;
}

}  // namespace stablemaps
