#include "stablemaps/trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "stablemaps/errors.hpp"

namespace stablemaps {

namespace {

QPoly q_int_or_zero(int k) { return k <= 0 ? QPoly() : q_int(k); }

void preorder_collect(const TreeNode& node, std::vector<const TreeNode*>& out) {
  out.push_back(&node);
  for (const auto& c : node.children) preorder_collect(c, out);
}

}  // namespace

int TreeNode::vertex_count() const {
  int n = 1;
  for (const auto& c : children) n += c.vertex_count();
  return n;
}

std::string encoding(const TreeNode& node) {
  std::ostringstream os;
  os << "(" << node.degree << "|";
  for (size_t i = 0; i < node.leaves.size(); ++i) {
    if (i) os << ",";
    os << node.leaves[i];
  }
  os << "|";
  for (const auto& c : node.children) os << encoding(c);
  os << ")";
  return os.str();
}

void canonicalize(TreeNode& node) {
  std::sort(node.leaves.begin(), node.leaves.end());
  for (auto& c : node.children) canonicalize(c);
  std::sort(node.children.begin(), node.children.end(),
            [](const TreeNode& a, const TreeNode& b) { return encoding(a) < encoding(b); });
}

int flag_count(const TreeNode& node, bool is_root) {
  return static_cast<int>(node.leaves.size() + node.children.size()) + (is_root ? 0 : 1);
}

bool has_automorphism(const TreeNode& node) {
  for (size_t i = 0; i + 1 < node.children.size(); ++i)
    if (encoding(node.children[i]) == encoding(node.children[i + 1])) return true;
  for (const auto& c : node.children)
    if (has_automorphism(c)) return true;
  return false;
}

namespace {

// Recursive generator for stable subtrees. Key: (leaf set, degree budget,
// whether the subtree hangs off a parent edge). Children multisets are built
// by anchoring on the smallest remaining label; leafless children are chosen
// as non-decreasing sequences in encoding order, so every multiset appears
// exactly once.
class TreeEnumerator {
 public:
  const std::vector<TreeNode>& subtrees(const std::vector<int>& labels, int d, bool has_parent) {
    auto key = std::make_tuple(labels, d, has_parent);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::map<std::string, TreeNode> found;
    expand(labels, d, has_parent, /*pinned_first=*/false, found);
    std::vector<TreeNode> out;
    out.reserve(found.size());
    for (auto& [enc, t] : found) out.push_back(std::move(t));
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  // Whole-tree variants: no parent edge; when pinned_first, the first label in
  // `labels` is forced onto the root.
  std::vector<TreeNode> whole_trees(const std::vector<int>& labels, int d, bool pinned_first) {
    std::map<std::string, TreeNode> found;
    expand(labels, d, /*has_parent=*/false, pinned_first, found);
    std::vector<TreeNode> out;
    out.reserve(found.size());
    for (auto& [enc, t] : found) out.push_back(std::move(t));
    return out;
  }

 private:
  std::map<std::tuple<std::vector<int>, int, bool>, std::vector<TreeNode>> memo_;

  void expand(const std::vector<int>& labels, int d, bool has_parent, bool pinned_first,
              std::map<std::string, TreeNode>& found) {
    const int L = static_cast<int>(labels.size());
    for (int e = 0; e <= d; ++e) {
      for (unsigned mask = 0; mask < (1u << L); ++mask) {
        if (pinned_first && !(mask & 1u)) continue;
        std::vector<int> own, rest;
        for (int i = 0; i < L; ++i) ((mask >> i) & 1u ? own : rest).push_back(labels[i]);
        for (auto& kids : child_multisets(rest, d - e)) {
          const int flags = static_cast<int>(own.size() + kids.size()) + (has_parent ? 1 : 0);
          if (!(flags > 2 || e > 0)) continue;
          TreeNode node{e, own, std::move(kids)};
          std::sort(node.children.begin(), node.children.end(),
                    [](const TreeNode& a, const TreeNode& b) { return encoding(a) < encoding(b); });
          std::string enc = encoding(node);
          found.emplace(std::move(enc), std::move(node));
        }
      }
    }
  }

  std::vector<std::vector<TreeNode>> child_multisets(const std::vector<int>& rest, int rd) {
    if (rest.empty()) return leafless_multisets(rd);
    std::vector<std::vector<TreeNode>> out;
    const int L = static_cast<int>(rest.size());
    // The child containing rest[0] is chosen first; 1 << (L-1) subsets of the
    // remaining labels may join it.
    for (unsigned mask = 0; mask < (1u << (L - 1)); ++mask) {
      std::vector<int> sub{rest[0]}, others;
      for (int i = 1; i < L; ++i) ((mask >> (i - 1)) & 1u ? sub : others).push_back(rest[i]);
      for (int e = 0; e <= rd; ++e) {
        const auto& first = subtrees(sub, e, true);
        if (first.empty()) continue;
        for (auto& tail : child_multisets(others, rd - e)) {
          for (const auto& t : first) {
            auto kids = tail;
            kids.push_back(t);
            out.push_back(std::move(kids));
          }
        }
      }
    }
    return out;
  }

  std::vector<std::vector<TreeNode>> leafless_multisets(int rd) {
    std::vector<std::vector<TreeNode>> out;
    if (rd == 0) {
      out.emplace_back();
      return out;
    }
    struct Item {
      std::string enc;
      const TreeNode* tree;
      int degree;
    };
    std::vector<Item> pool;
    for (int e = 1; e <= rd; ++e)
      for (const auto& t : subtrees({}, e, true)) pool.push_back({encoding(t), &t, e});
    std::sort(pool.begin(), pool.end(), [](const Item& a, const Item& b) { return a.enc < b.enc; });
    std::vector<TreeNode> cur;
    auto rec = [&](auto&& self, size_t start, int rem) -> void {
      if (rem == 0) {
        out.push_back(cur);
        return;
      }
      for (size_t j = start; j < pool.size(); ++j) {
        if (pool[j].degree > rem) continue;
        cur.push_back(*pool[j].tree);
        self(self, j, rem - pool[j].degree);
        cur.pop_back();
      }
    };
    rec(rec, 0, rd);
    return out;
  }
};

}  // namespace

std::vector<TreeNode> enumerate_stable_trees(int m, int d) {
  if (m < 1) throw InvalidQuery("enumerate_stable_trees: m >= 1 required");
  if (d < 0) throw InvalidQuery("enumerate_stable_trees: d >= 0 required");
  if (d == 0 && m < 3)
    throw InvalidQuery("enumerate_stable_trees: no stable tree with d = 0 and m < 3");
  std::vector<int> labels(static_cast<size_t>(m));
  std::iota(labels.begin(), labels.end(), 1);
  TreeEnumerator gen;
  return gen.whole_trees(labels, d, /*pinned_first=*/true);
}

std::vector<TreeNode> enumerate_leafless_trees(int d) {
  if (d < 1) throw InvalidQuery("enumerate_leafless_trees: d >= 1 required");
  TreeEnumerator gen;
  return gen.whole_trees({}, d, /*pinned_first=*/false);
}

int BStructure::total() const { return std::accumulate(b.begin(), b.end(), 0); }

namespace {

struct BDecorated {
  const TreeNode* node;
  int b = 0;
  std::vector<BDecorated> kids;
};

BDecorated decorate(const TreeNode& node, const std::vector<int>& b, size_t& pos) {
  BDecorated out;
  out.node = &node;
  out.b = b[pos++];
  out.kids.reserve(node.children.size());
  for (const auto& c : node.children) out.kids.push_back(decorate(c, b, pos));
  return out;
}

std::string b_encoding(const BDecorated& d) {
  std::ostringstream os;
  os << "(" << d.node->degree << "|";
  for (size_t i = 0; i < d.node->leaves.size(); ++i) {
    if (i) os << ",";
    os << d.node->leaves[i];
  }
  os << "|" << d.b << "|";
  std::vector<std::string> kid_encs;
  kid_encs.reserve(d.kids.size());
  for (const auto& k : d.kids) kid_encs.push_back(b_encoding(k));
  std::sort(kid_encs.begin(), kid_encs.end());
  for (const auto& s : kid_encs) os << s;
  os << ")";
  return os.str();
}

}  // namespace

std::vector<BStructure> enumerate_b_structures(const TreeNode& tree, int n) {
  if (n < 1) throw InvalidQuery("enumerate_b_structures: n >= 1 required");
  std::vector<const TreeNode*> order;
  preorder_collect(tree, order);
  std::vector<int> lo(order.size()), hi(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    const bool is_root = (i == 0);
    const int bound = (n + 1) * order[i]->degree + flag_count(*order[i], is_root) - 2;
    lo[i] = is_root ? 0 : 1;
    hi[i] = bound - 1;
    if (lo[i] > hi[i]) return {};
  }
  std::vector<BStructure> out;
  std::set<std::string> seen;
  std::vector<int> b = lo;
  while (true) {
    size_t pos = 0;
    if (seen.insert(b_encoding(decorate(tree, b, pos))).second) out.push_back({b, n});
    size_t i = b.size();
    while (i > 0) {
      --i;
      if (b[i] < hi[i]) {
        ++b[i];
        for (size_t j = i + 1; j < b.size(); ++j) b[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

namespace {

QPoly vertex_weight(const TreeNode& node, bool is_root, int n) {
  const int bound = (n + 1) * node.degree + flag_count(node, is_root) - 2;
  QPoly w = is_root ? q_int_or_zero(bound)
                    : QPoly::monomial(1) * q_int_or_zero(bound - 1);
  // Children arrive sorted by encoding; identical subtrees are consecutive.
  size_t i = 0;
  while (i < node.children.size()) {
    size_t j = i + 1;
    const std::string enc = encoding(node.children[i]);
    while (j < node.children.size() && encoding(node.children[j]) == enc) ++j;
    w *= sym_power(vertex_weight(node.children[i], false, n), static_cast<int>(j - i));
    i = j;
  }
  return w;
}

}  // namespace

QPoly tree_contribution(const TreeNode& tree, int n) {
  if (n < 1) throw InvalidQuery("tree_contribution: n >= 1 required");
  QPoly w = vertex_weight(tree, true, n);
  w.require_integer_coeffs("tree_contribution");
  return w;
}

namespace {

// Nested view of an MDTree used for marker-aware canonical ordering.
struct LNode {
  int degree = 0;
  std::vector<int> leaves;
  std::vector<int> dl;
  std::vector<LNode> kids;
};

LNode to_lnode(const TreeNode& node, const std::vector<std::vector<int>>& dlabels, size_t& pos) {
  LNode out;
  out.degree = node.degree;
  out.leaves = node.leaves;
  out.dl = dlabels[pos++];
  for (const auto& c : node.children) out.kids.push_back(to_lnode(c, dlabels, pos));
  return out;
}

std::string lnode_encoding(const LNode& n) {
  std::ostringstream os;
  os << "(" << n.degree << "|";
  for (size_t i = 0; i < n.leaves.size(); ++i) {
    if (i) os << ",";
    os << n.leaves[i];
  }
  os << "|";
  for (size_t i = 0; i < n.dl.size(); ++i) {
    if (i) os << ",";
    os << n.dl[i];
  }
  os << "|";
  for (const auto& k : n.kids) os << lnode_encoding(k);
  os << ")";
  return os.str();
}

void lnode_sort(LNode& n) {
  std::sort(n.leaves.begin(), n.leaves.end());
  std::sort(n.dl.begin(), n.dl.end());
  for (auto& k : n.kids) lnode_sort(k);
  std::sort(n.kids.begin(), n.kids.end(),
            [](const LNode& a, const LNode& b) { return lnode_encoding(a) < lnode_encoding(b); });
}

void from_lnode(const LNode& n, TreeNode& node, std::vector<std::vector<int>>& dlabels) {
  node.degree = n.degree;
  node.leaves = n.leaves;
  dlabels.push_back(n.dl);
  node.children.resize(n.kids.size());
  for (size_t i = 0; i < n.kids.size(); ++i) from_lnode(n.kids[i], node.children[i], dlabels);
}

}  // namespace

std::string md_encoding(const MDTree& t) {
  size_t pos = 0;
  return lnode_encoding(to_lnode(t.tree, t.dlabels, pos));
}

void md_canonicalize(MDTree& t) {
  size_t pos = 0;
  LNode ln = to_lnode(t.tree, t.dlabels, pos);
  lnode_sort(ln);
  MDTree out;
  from_lnode(ln, out.tree, out.dlabels);
  t = std::move(out);
}

MDTree assign_D_labels(const TreeNode& tree) {
  std::vector<const TreeNode*> order;
  preorder_collect(tree, order);
  MDTree out;
  out.tree = tree;
  int next = 1;
  for (const auto* v : order) {
    std::vector<int> block(static_cast<size_t>(v->degree));
    std::iota(block.begin(), block.end(), next);
    next += v->degree;
    out.dlabels.push_back(std::move(block));
  }
  md_canonicalize(out);
  return out;
}

namespace {

nlohmann::json tree_json(const TreeNode& node) {
  nlohmann::json j;
  j["d"] = node.degree;
  j["leaves"] = node.leaves;
  auto kids = nlohmann::json::array();
  for (const auto& c : node.children) kids.push_back(tree_json(c));
  j["children"] = std::move(kids);
  return j;
}

TreeNode tree_unjson(const nlohmann::json& j) {
  TreeNode node;
  node.degree = j.at("d").get<int>();
  node.leaves = j.at("leaves").get<std::vector<int>>();
  for (const auto& c : j.at("children")) node.children.push_back(tree_unjson(c));
  return node;
}

}  // namespace

std::string tree_to_json(const TreeNode& node, int indent) {
  return tree_json(node).dump(indent);
}

TreeNode tree_from_json(const std::string& text) {
  TreeNode t = tree_unjson(nlohmann::json::parse(text));
  canonicalize(t);
  return t;
}

}  // namespace stablemaps
