#include "stablemaps/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "stablemaps/errors.hpp"

namespace stablemaps {

std::string Label::to_string() const {
  return std::to_string(index) + (is_marker ? "_D" : "_M");
}

Label Label::parse(const std::string& s) {
  auto sep = s.rfind('_');
  if (sep == std::string::npos || sep == 0 || sep + 2 != s.size())
    throw InvalidQuery("bad label: " + s);
  const char kind = s[sep + 1];
  if (kind != 'M' && kind != 'D') throw InvalidQuery("bad label kind: " + s);
  return {std::stoi(s.substr(0, sep)), kind == 'D'};
}

namespace {

std::set<Label> ground_set(int m, int d) {
  std::set<Label> g;
  for (int i = 1; i <= m; ++i) g.insert(Label::marked(i));
  for (int j = 1; j <= d; ++j) g.insert(Label::marker(j));
  return g;
}

bool side_stable(const std::set<Label>& side) {
  if (side.size() >= 2) return true;
  return std::any_of(side.begin(), side.end(), [](const Label& l) { return l.is_marker; });
}

std::set<Label> intersect(const std::set<Label>& a, const std::set<Label>& b) {
  std::set<Label> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

}  // namespace

bool is_stable_h(const std::set<Label>& h, int m, int d) {
  if (h.empty()) return false;
  for (const auto& l : h) {
    if (l == Label::marked(1)) return false;
    if (l.is_marker ? (l.index < 1 || l.index > d) : (l.index < 1 || l.index > m)) return false;
  }
  if (static_cast<int>(h.size()) >= m - 1 + d) return false;  // h = D' leaves {1_M} alone
  return side_stable(h);
}

TwoPartition::TwoPartition(std::set<Label> h, int m, int d) : h_(std::move(h)), m_(m), d_(d) {
  if (m_ < 1 || d_ < 0) throw InvalidQuery("TwoPartition: need m >= 1, d >= 0");
  if (!is_stable_h(h_, m_, d_))
    throw InvalidQuery("TwoPartition: not a stable 2-partition side: " + to_string());
}

std::set<Label> TwoPartition::complement() const {
  std::set<Label> out = ground_set(m_, d_);
  for (const auto& l : h_) out.erase(l);
  return out;
}

std::string TwoPartition::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& l : h_) {
    if (!first) os << ",";
    first = false;
    os << l.to_string();
  }
  os << "}";
  return os.str();
}

std::string TwoPartition::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : h_) arr.push_back(l.to_string());
  return arr.dump();
}

bool are_compatible(const TwoPartition& s1, const TwoPartition& s2) {
  if (s1.m() != s2.m() || s1.d() != s2.d())
    throw InvalidQuery("are_compatible: partitions of different ground sets");
  const std::set<Label> sides1[2] = {s1.h(), s1.complement()};
  const std::set<Label> sides2[2] = {s2.h(), s2.complement()};
  std::vector<std::set<Label>> nonempty;
  for (const auto& a : sides1)
    for (const auto& b : sides2) {
      auto cap = intersect(a, b);
      if (!cap.empty()) nonempty.push_back(std::move(cap));
    }
  if (nonempty.size() != 3) return false;
  for (size_t i = 0; i < nonempty.size(); ++i)
    for (size_t j = i + 1; j < nonempty.size(); ++j)
      if (nonempty[i] == nonempty[j]) return false;
  return true;
}

bool is_good_family(const GoodFamily& parts) {
  for (auto it = parts.begin(); it != parts.end(); ++it)
    for (auto jt = std::next(it); jt != parts.end(); ++jt)
      if (!are_compatible(*it, *jt)) return false;
  return true;
}

namespace {

// Nested view of an MDTree (pre-order aligned marker blocks).
struct MNode {
  int degree = 0;
  std::vector<int> leaves;
  std::vector<int> dl;
  std::vector<MNode> kids;
};

MNode to_mnode(const TreeNode& t, const std::vector<std::vector<int>>& dls, size_t& pos) {
  MNode n;
  n.degree = t.degree;
  n.leaves = t.leaves;
  n.dl = dls.at(pos++);
  for (const auto& c : t.children) n.kids.push_back(to_mnode(c, dls, pos));
  return n;
}

MNode to_mnode(const MDTree& t) {
  size_t pos = 0;
  return to_mnode(t.tree, t.dlabels, pos);
}

void flatten(const MNode& n, TreeNode& t, std::vector<std::vector<int>>& dls) {
  t.degree = n.degree;
  t.leaves = n.leaves;
  dls.push_back(n.dl);
  t.children.resize(n.kids.size());
  for (size_t i = 0; i < n.kids.size(); ++i) flatten(n.kids[i], t.children[i], dls);
}

MDTree from_mnode(const MNode& n) {
  MDTree out;
  flatten(n, out.tree, out.dlabels);
  md_canonicalize(out);
  return out;
}

void gather_branch(const MNode& n, std::set<Label>& out) {
  for (int i : n.leaves) out.insert(Label::marked(i));
  for (int j : n.dl) out.insert(Label::marker(j));
  for (const auto& k : n.kids) gather_branch(k, out);
}

void collect_partitions(const MNode& n, bool is_root, int m, int d, GoodFamily& out) {
  if (!is_root) {
    std::set<Label> h;
    gather_branch(n, h);
    out.emplace(std::move(h), m, d);
  }
  for (const auto& k : n.kids) collect_partitions(k, false, m, d, out);
}

void md_totals(const MNode& n, int& m, int& d) {
  m += static_cast<int>(n.leaves.size());
  d += n.degree;
  for (const auto& k : n.kids) md_totals(k, m, d);
}

}  // namespace

GoodFamily tree_to_good_family(const MDTree& t) {
  MNode root = to_mnode(t);
  int m = 0, d = 0;
  md_totals(root, m, d);
  GoodFamily out;
  collect_partitions(root, true, m, d, out);
  return out;
}

MDTree good_family_to_tree(const GoodFamily& f, int m, int d) {
  for (const auto& p : f)
    if (p.m() != m || p.d() != d)
      throw InvalidQuery("good_family_to_tree: partition for a different ground set");
  if (!is_good_family(f)) throw InvalidQuery("good_family_to_tree: family is not good");

  std::vector<const TwoPartition*> parts;
  for (const auto& p : f) parts.push_back(&p);
  std::sort(parts.begin(), parts.end(), [](const TwoPartition* a, const TwoPartition* b) {
    return a->h().size() < b->h().size();
  });

  // parent[i]: index of the minimal strict superset, or -1 for the root.
  const int k = static_cast<int>(parts.size());
  std::vector<int> parent(static_cast<size_t>(k), -1);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const auto& hi = parts[static_cast<size_t>(i)]->h();
      const auto& hj = parts[static_cast<size_t>(j)]->h();
      if (hi.size() < hj.size() &&
          std::includes(hj.begin(), hj.end(), hi.begin(), hi.end())) {
        parent[static_cast<size_t>(i)] = j;
        break;  // size-sorted, so the first superset is minimal
      }
    }
  }

  std::vector<MNode> nodes(static_cast<size_t>(k) + 1);  // nodes[k] = root
  for (int i = 0; i < k; ++i) {
    std::set<Label> direct = parts[static_cast<size_t>(i)]->h();
    for (int c = 0; c < i; ++c)
      if (parent[static_cast<size_t>(c)] == i)
        for (const auto& l : parts[static_cast<size_t>(c)]->h()) direct.erase(l);
    for (const auto& l : direct)
      (l.is_marker ? nodes[static_cast<size_t>(i)].dl : nodes[static_cast<size_t>(i)].leaves)
          .push_back(l.index);
    nodes[static_cast<size_t>(i)].degree = static_cast<int>(nodes[static_cast<size_t>(i)].dl.size());
  }
  std::set<Label> root_direct = ground_set(m, d);
  for (int i = 0; i < k; ++i)
    if (parent[static_cast<size_t>(i)] == -1)
      for (const auto& l : parts[static_cast<size_t>(i)]->h()) root_direct.erase(l);
  for (const auto& l : root_direct)
    (l.is_marker ? nodes[static_cast<size_t>(k)].dl : nodes[static_cast<size_t>(k)].leaves)
        .push_back(l.index);
  nodes[static_cast<size_t>(k)].degree = static_cast<int>(nodes[static_cast<size_t>(k)].dl.size());

  // Assemble children before parents (parts are size-sorted, so children of
  // any node come earlier in `parts`).
  for (int i = 0; i < k; ++i) {
    const int p = parent[static_cast<size_t>(i)] == -1 ? k : parent[static_cast<size_t>(i)];
    nodes[static_cast<size_t>(p)].kids.push_back(std::move(nodes[static_cast<size_t>(i)]));
  }

  // Stability of every vertex of the reconstruction.
  auto check = [](auto&& self, const MNode& n, bool is_root) -> void {
    const int flags =
        static_cast<int>(n.leaves.size() + n.kids.size()) + (is_root ? 0 : 1);
    if (!(flags > 2 || n.degree > 0))
      throw InvalidQuery("good_family_to_tree: reconstruction yields an unstable tree");
    for (const auto& c : n.kids) self(self, c, false);
  };
  check(check, nodes[static_cast<size_t>(k)], true);

  return from_mnode(nodes[static_cast<size_t>(k)]);
}

namespace {

bool contract_below(MNode& node, int& counter, int target) {
  for (size_t i = 0; i < node.kids.size(); ++i) {
    ++counter;
    if (counter == target) {
      MNode child = std::move(node.kids[i]);
      node.kids.erase(node.kids.begin() + static_cast<std::ptrdiff_t>(i));
      node.degree += child.degree;
      node.leaves.insert(node.leaves.end(), child.leaves.begin(), child.leaves.end());
      node.dl.insert(node.dl.end(), child.dl.begin(), child.dl.end());
      for (auto& k : child.kids) node.kids.push_back(std::move(k));
      return true;
    }
    if (contract_below(node.kids[i], counter, target)) return true;
  }
  return false;
}

}  // namespace

int edge_count(const MDTree& t) { return t.tree.vertex_count() - 1; }

MDTree contract_edge(const MDTree& t, int child_pos) {
  if (child_pos < 1 || child_pos >= t.tree.vertex_count())
    throw InvalidQuery("contract_edge: no vertex at pre-order position " +
                       std::to_string(child_pos));
  MNode root = to_mnode(t);
  int counter = 0;
  contract_below(root, counter, child_pos);
  return from_mnode(root);
}

}  // namespace stablemaps
