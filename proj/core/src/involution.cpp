#include "hooklen/involution.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace hooklen {

namespace {

// Flat preorder view of a shape: parent pointers, child lists, and subtree
// sizes, all by preorder index.
struct FlatTree {
  std::vector<int> parent;             // -1 for the root
  std::vector<std::vector<int>> kids;  // preorder indices, in child order
  std::vector<int> size;               // subtree sizes (the hooks)
};

int flatten_rec(const OrderedTree& t, int parent, FlatTree& f) {
  const int self = static_cast<int>(f.parent.size());
  f.parent.push_back(parent);
  f.kids.emplace_back();
  f.size.push_back(0);
  int sz = 1;
  for (const auto& c : t.children) {
    const int child = flatten_rec(c, self, f);
    f.kids[static_cast<std::size_t>(self)].push_back(child);
    sz += f.size[static_cast<std::size_t>(child)];
  }
  f.size[static_cast<std::size_t>(self)] = sz;
  return self;
}

FlatTree flatten(const OrderedTree& t) {
  FlatTree f;
  flatten_rec(t, -1, f);
  return f;
}

// Proper on its own labels: the subtree root at preorder index v must have
// size-1 children with labels increasing left to right.
bool subtree_proper(const FlatTree& f, const std::vector<int>& labels, int v) {
  const auto& kids = f.kids[static_cast<std::size_t>(v)];
  if (static_cast<int>(kids.size()) != f.size[static_cast<std::size_t>(v)] - 1)
    return false;
  for (std::size_t i = 1; i < kids.size(); ++i)
    if (labels[static_cast<std::size_t>(kids[i - 1])] >=
        labels[static_cast<std::size_t>(kids[i])])
      return false;
  return true;
}

int max_label_in_subtree(const FlatTree& f, const std::vector<int>& labels, int v) {
  int best = 0;
  const int end = v + f.size[static_cast<std::size_t>(v)];
  for (int i = v; i < end; ++i) best = std::max(best, labels[static_cast<std::size_t>(i)]);
  return best;
}

}  // namespace

IncreasingTree make_increasing(OrderedTree shape, std::vector<int> labels) {
  const FlatTree f = flatten(shape);
  const int n = static_cast<int>(f.parent.size());
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("IncreasingTree: label count does not match shape");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int lbl : labels) {
    if (lbl < 1 || lbl > n || seen[static_cast<std::size_t>(lbl)])
      throw std::invalid_argument("IncreasingTree: labels must be a permutation of 1..n");
    seen[static_cast<std::size_t>(lbl)] = true;
  }
  for (int v = 1; v < n; ++v)
    if (labels[static_cast<std::size_t>(f.parent[static_cast<std::size_t>(v)])] >=
        labels[static_cast<std::size_t>(v)])
      throw std::invalid_argument("IncreasingTree: labels must increase away from the root");
  return IncreasingTree{std::move(shape), std::move(labels)};
}

namespace {

void labelings_rec(const FlatTree& f, std::vector<int>& labels, std::vector<int>& avail,
                   int next_label, const OrderedTree& shape,
                   std::vector<IncreasingTree>& out) {
  const int n = static_cast<int>(f.parent.size());
  if (next_label > n) {
    out.push_back(IncreasingTree{shape, labels});
    return;
  }
  // Candidates are vertices whose parent is labeled; avail stays sorted so
  // choices are made in preorder.
  for (std::size_t pick = 0; pick < avail.size(); ++pick) {
    const int v = avail[pick];
    labels[static_cast<std::size_t>(v)] = next_label;
    std::vector<int> next_avail;
    next_avail.reserve(avail.size() - 1 + f.kids[static_cast<std::size_t>(v)].size());
    std::vector<int> rest;
    rest.reserve(avail.size() - 1);
    for (std::size_t i = 0; i < avail.size(); ++i)
      if (i != pick) rest.push_back(avail[i]);
    std::merge(rest.begin(), rest.end(), f.kids[static_cast<std::size_t>(v)].begin(),
               f.kids[static_cast<std::size_t>(v)].end(), std::back_inserter(next_avail));
    labelings_rec(f, labels, next_avail, next_label + 1, shape, out);
    labels[static_cast<std::size_t>(v)] = 0;
  }
}

}  // namespace

std::vector<IncreasingTree> enumerate_increasing(int n) {
  if (n < 1) throw std::domain_error("enumerate_increasing: n must be >= 1");
  std::vector<IncreasingTree> out;
  for (const OrderedTree& shape : enumerate_ordered(n)) {
    const FlatTree f = flatten(shape);
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    labels[0] = 1;
    std::vector<int> avail = f.kids[0];
    labelings_rec(f, labels, avail, 2, shape, out);
  }
  return out;
}

int sign(const IncreasingTree& t) {
  int total = 0;
  for (int h : hook_lengths(t.shape).hook) total += h;
  return (total % 2 == 0) ? 1 : -1;
}

bool is_proper(const IncreasingTree& t) {
  const FlatTree f = flatten(t.shape);
  return subtree_proper(f, t.labels, 0);
}

std::optional<IllegalLeafFinding> find_first_illegal_leaf(const IncreasingTree& t) {
  const FlatTree f = flatten(t.shape);
  // Illegal leaves are only defined for non-proper trees; in particular this
  // keeps case (b) from firing on the root of a proper tree.
  if (subtree_proper(f, t.labels, 0)) return std::nullopt;
  const int n = t.n();
  for (int v = 1; v < n; ++v) {
    if (!f.kids[static_cast<std::size_t>(v)].empty()) continue;  // not a leaf
    const int u = f.parent[static_cast<std::size_t>(v)];
    const auto& sibs = f.kids[static_cast<std::size_t>(u)];
    const std::size_t pos = static_cast<std::size_t>(
        std::find(sibs.begin(), sibs.end(), v) - sibs.begin());
    if (pos + 1 < sibs.size()) {
      const int w = sibs[pos + 1];
      if (subtree_proper(f, t.labels, w) &&
          t.labels[static_cast<std::size_t>(v)] > max_label_in_subtree(f, t.labels, w))
        return IllegalLeafFinding{IllegalCase::next_sibling_proper, v, u, w};
    } else if (subtree_proper(f, t.labels, u)) {
      return IllegalLeafFinding{IllegalCase::rightmost_of_proper, v, u, -1};
    }
  }
  return std::nullopt;
}

namespace {

// Mutable labeled tree used only while applying the involution.
struct LNode {
  int label = 0;
  std::vector<LNode> children;
};

LNode build_lnode(const OrderedTree& shape, const std::vector<int>& labels, int& next) {
  LNode node;
  node.label = labels[static_cast<std::size_t>(next++)];
  node.children.reserve(shape.children.size());
  for (const auto& c : shape.children) node.children.push_back(build_lnode(c, labels, next));
  return node;
}

void tear_down(const LNode& node, OrderedTree& shape, std::vector<int>& labels) {
  labels.push_back(node.label);
  shape.children.resize(node.children.size());
  for (std::size_t i = 0; i < node.children.size(); ++i)
    tear_down(node.children[i], shape.children[i], labels);
}

// Child-index path from the root to a preorder index.
std::vector<int> path_to(const FlatTree& f, int v) {
  std::vector<int> rev;
  while (v != 0) {
    const int u = f.parent[static_cast<std::size_t>(v)];
    const auto& sibs = f.kids[static_cast<std::size_t>(u)];
    rev.push_back(static_cast<int>(std::find(sibs.begin(), sibs.end(), v) - sibs.begin()));
    v = u;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

LNode& node_at(LNode& root, const std::vector<int>& path) {
  LNode* cur = &root;
  for (int i : path) cur = &cur->children[static_cast<std::size_t>(i)];
  return *cur;
}

}  // namespace

IncreasingTree involute(const IncreasingTree& t) {
  const auto finding = find_first_illegal_leaf(t);
  if (!finding.has_value()) return t;  // proper trees are the fixed points

  const FlatTree f = flatten(t.shape);
  int next = 0;
  LNode root = build_lnode(t.shape, t.labels, next);

  if (finding->kind == IllegalCase::next_sibling_proper) {
    LNode& u = node_at(root, path_to(f, finding->parent));
    const auto& sibs = f.kids[static_cast<std::size_t>(finding->parent)];
    const std::size_t pos = static_cast<std::size_t>(
        std::find(sibs.begin(), sibs.end(), finding->leaf) - sibs.begin());
    LNode v = std::move(u.children[pos]);
    u.children.erase(u.children.begin() + static_cast<std::ptrdiff_t>(pos));
    // w slid into v's slot
    u.children[pos].children.push_back(std::move(v));
  } else {
    const int u_idx = finding->parent;
    const int p_idx = f.parent[static_cast<std::size_t>(u_idx)];
    assert(p_idx >= 0);  // u cannot be the root of a non-proper tree
    LNode& p = node_at(root, path_to(f, p_idx));
    const auto& sibs = f.kids[static_cast<std::size_t>(p_idx)];
    const std::size_t upos = static_cast<std::size_t>(
        std::find(sibs.begin(), sibs.end(), u_idx) - sibs.begin());
    LNode& u = p.children[upos];
    LNode v = std::move(u.children.back());
    u.children.pop_back();
    p.children.insert(p.children.begin() + static_cast<std::ptrdiff_t>(upos), std::move(v));
  }

  OrderedTree shape;
  std::vector<int> labels;
  labels.reserve(t.labels.size());
  tear_down(root, shape, labels);
  return make_increasing(std::move(shape), std::move(labels));
}

long long alternate_identity_sum(int n) {
  long long total = 0;
  for (const IncreasingTree& t : enumerate_increasing(n)) total += sign(t);
  return total;
}

namespace {

void labeled_paren_rec(const LNode& node, std::string& out) {
  out += std::to_string(node.label);
  out += '(';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0) out += ' ';
    labeled_paren_rec(node.children[i], out);
  }
  out += ')';
}

}  // namespace

std::string to_labeled_paren(const IncreasingTree& t) {
  int next = 0;
  const LNode root = build_lnode(t.shape, t.labels, next);
  std::string out;
  labeled_paren_rec(root, out);
  return out;
}

std::string to_dot(const IncreasingTree& t, std::string_view name) {
  const FlatTree f = flatten(t.shape);
  const auto finding = find_first_illegal_leaf(t);
  std::string out = "digraph " + std::string(name) + " {\n";
  for (int v = 0; v < t.n(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" +
           std::to_string(t.labels[static_cast<std::size_t>(v)]) + "\"";
    if (finding.has_value() && finding->leaf == v) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (int v = 0; v < t.n(); ++v)
    for (int c : f.kids[static_cast<std::size_t>(v)])
      out += "  " + std::to_string(v) + " -> " + std::to_string(c) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace hooklen
