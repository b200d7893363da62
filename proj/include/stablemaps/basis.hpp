#pragma once

#include <string>
#include <vector>

#include "stablemaps/ring.hpp"
#include "stablemaps/trees.hpp"

namespace stablemaps {

/// One additive basis class of A^k: a rooted stable tree with vertex weights
/// whose monomial is H^{h_power} psi^{psi_power} sym_d(prod T_v^{b(v)}).
struct BasisClass {
  TreeNode tree;
  BStructure b;
  int k = 0;
  int h_power = 0;    // k - sum b(v), within 0..n
  int psi_power = 0;  // b(root)
};

/// All basis classes of cohomological degree k for (n, d, m): weighted trees
/// with sum b <= k and residual H-exponent k - sum b between 0 and n.
std::vector<BasisClass> enumerate_basis(int n, int d, int m, int k);

/// Compact descriptor like "H^2 psi sym_d(T{2_M,2_D})"; "1" for the
/// fundamental class.
std::string class_descriptor(const BasisClass& c);

/// Full S_d-averaged expansion of the descriptor (guard: d <= 4).
RingExpression class_expression(const BasisClass& c);

/// Ring generators for (m, d): every stable h, sorted.
std::vector<TwoPartition> ring_generators(int m, int d);

struct Relation {
  int family = 0;  // 1..5, matching the presentation's five generator families
  RingExpression expr;
};

/// The complete relation list of the divisor presentation:
///   (1) H^{n+1};
///   (2) T_h T_h' for crossing pairs;
///   (3) the three marked-point families;
///   (4) (H + d psi + sum_{i_M in h} |h ∩ M'| T_h)^{n+1} per i_M;
///   (5) per h, the split-and-compare family, division-free.
/// Guard: d + m <= 8.
std::vector<Relation> emit_relations(int n, int d, int m);

}  // namespace stablemaps
