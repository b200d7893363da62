#pragma once

#include <string>
#include <vector>

#include "stablemaps/qpoly.hpp"

namespace stablemaps {

/// One vertex of a rooted tree with labeled leaves and a per-vertex map
/// degree. Canonical form: `leaves` sorted ascending and `children` sorted by
/// their canonical encodings, so two trees are isomorphic as leaf-labeled
/// rooted trees exactly when their encodings coincide.
struct TreeNode {
  int degree = 0;
  std::vector<int> leaves;  // marked-point labels carried by this vertex
  std::vector<TreeNode> children;

  int vertex_count() const;
  bool operator==(const TreeNode& other) const = default;
};

/// Recursive tuple encoding (degree | leaves | sorted child encodings).
std::string encoding(const TreeNode& node);
/// Restores canonical form after manual construction or shuffling.
void canonicalize(TreeNode& node);

/// Number of flags at the root of `node` within a larger tree: leaves plus
/// child edges plus the parent edge when the vertex is not the tree root.
int flag_count(const TreeNode& node, bool is_root);

/// Whether some vertex has two identical child subtrees (the only source of
/// automorphisms of a leaf-labeled rooted tree).
bool has_automorphism(const TreeNode& node);

/// All isomorphism classes of rooted stable trees with m labeled leaves and
/// total map degree d, rooted at the vertex carrying leaf 1. Sorted by
/// encoding. Throws InvalidQuery when no stable tree exists (m < 1, d < 0, or
/// d = 0 with m < 3).
std::vector<TreeNode> enumerate_stable_trees(int m, int d);

/// Rooted stable trees with no leaves at all (root an unlabeled distinguished
/// vertex), total degree d >= 1. Building block for forest counts and tests.
std::vector<TreeNode> enumerate_leafless_trees(int d);

/// Vertex weights b indexed by pre-order position (root first, children in
/// canonical order). Bounds: 0 <= b(root) < (n+1)d(root)+n(root)-2 and
/// 0 < b(v) < (n+1)d(v)+n(v)-2 elsewhere.
struct BStructure {
  std::vector<int> b;
  int n = 0;
  int total() const;
};

/// One representative per orbit of the tree's automorphism group acting on
/// valid b-assignments; deterministic order.
std::vector<BStructure> enumerate_b_structures(const TreeNode& tree, int n);

/// Sum of q^{sum_v b(v)} over b-structure orbits, computed bottom-up with
/// sym_power over groups of identical child subtrees.
QPoly tree_contribution(const TreeNode& tree, int n);

/// A rooted tree together with a partition of the degree markers {1..d}
/// assigning d(v) markers to each vertex; `dlabels` indexed by pre-order
/// position, each block sorted. Children are ordered by the marker-aware
/// encoding (such trees are rigid, so that order is unambiguous).
struct MDTree {
  TreeNode tree;
  std::vector<std::vector<int>> dlabels;

  bool operator==(const MDTree& other) const = default;
};

std::string md_encoding(const MDTree& t);
void md_canonicalize(MDTree& t);

/// Canonical marker assignment: vertices visited in pre-order receive
/// consecutive blocks of {1..d}.
MDTree assign_D_labels(const TreeNode& tree);

/// Stable JSON form {"d": int, "leaves": [...], "children": [...]}.
std::string tree_to_json(const TreeNode& node, int indent = -1);
TreeNode tree_from_json(const std::string& text);

}  // namespace stablemaps
