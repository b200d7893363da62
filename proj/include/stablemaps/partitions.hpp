#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "stablemaps/trees.hpp"

namespace stablemaps {

/// Element of the marked set M (is_marker = false, "i_M") or of the degree
/// marker set D (is_marker = true, "j_D"). Markers order before marked points.
struct Label {
  int index = 0;
  bool is_marker = false;

  static Label marked(int i) { return {i, false}; }
  static Label marker(int j) { return {j, true}; }
  std::string to_string() const;
  static Label parse(const std::string& s);

  auto operator<=>(const Label& other) const {
    if (auto c = (other.is_marker <=> is_marker); c != 0) return c;  // D before M
    return index <=> other.index;
  }
  bool operator==(const Label& other) const = default;
};

/// Stable 2-partition of M ⊔ D, keyed by the side h that does not contain the
/// marked point 1_M; the complement is implicit. Valid h: a nonempty proper
/// subset of D' = (M \ {1_M}) ⊔ D with h ∩ D nonempty or |h| >= 2.
class TwoPartition {
 public:
  TwoPartition(std::set<Label> h, int m, int d);

  const std::set<Label>& h() const { return h_; }
  int m() const { return m_; }
  int d() const { return d_; }
  std::set<Label> complement() const;  // the side containing 1_M

  std::string to_string() const;
  /// Sorted JSON array of label strings.
  std::string to_json() const;

  auto operator<=>(const TwoPartition& other) const = default;

 private:
  std::set<Label> h_;
  int m_ = 0;
  int d_ = 0;
};

/// Whether h names a stable 2-partition for (m, d); screens candidate
/// generator indices without throwing.
bool is_stable_h(const std::set<Label>& h, int m, int d);

/// Exactly three of the four pairwise side intersections are nonempty and
/// those three are pairwise distinct.
bool are_compatible(const TwoPartition& s1, const TwoPartition& s2);

using GoodFamily = std::set<TwoPartition>;

/// Pairwise compatibility; the empty and singleton families are good.
bool is_good_family(const GoodFamily& parts);

/// One 2-partition per edge: the h-side collects every label in the branch
/// hanging below that edge.
GoodFamily tree_to_good_family(const MDTree& t);

/// Inverse of tree_to_good_family: the h-sides of a good family are pairwise
/// nested or disjoint, and the tree is the Hasse diagram of that containment
/// order with a root above the maximal sets. Throws InvalidQuery when the
/// family is not good or reconstruction yields an unstable tree.
MDTree good_family_to_tree(const GoodFamily& f, int m, int d);

/// Contracts the edge above the vertex at pre-order position `child_pos`
/// (1-based positions are the non-root vertices; the root cannot be chosen).
/// The merged vertex carries the union of labels and the sum of degrees.
MDTree contract_edge(const MDTree& t, int child_pos);

/// Number of edges (= vertices - 1).
int edge_count(const MDTree& t);

}  // namespace stablemaps
