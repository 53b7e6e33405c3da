#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hooklen/family.hpp"
#include "hooklen/rational.hpp"

namespace hooklen {

/// Rooted tree with a significant left-to-right order on children.
/// Plain value type; trees are immutable once built and cheap to share
/// by copy at the sizes this library works at.
struct OrderedTree {
  std::vector<OrderedTree> children;

  int vertex_count() const;

  friend bool operator==(const OrderedTree&, const OrderedTree&) = default;
};

/// Per-vertex statistics in preorder (root first, then each child subtree
/// left to right).  hook[v] counts the descendants of v including v itself;
/// degree[v] is the number of children.
struct VertexStats {
  std::vector<int> hook;
  std::vector<int> degree;

  int n() const { return static_cast<int>(hook.size()); }
};

/// All ordered trees on n unlabeled vertices, each exactly once, in a fixed
/// deterministic order: root degree ascending, then compositions of n-1
/// into that many parts lexicographically, then child subtrees recursively
/// (first child varying slowest).  There are Catalan(n-1) of them.
/// Throws std::domain_error for n < 1.
std::vector<OrderedTree> enumerate_ordered(int n);

VertexStats hook_lengths(const OrderedTree& t);

/// w(T) = prod_v binom(m, d_v) * s^{d_v}.
Rational weight(const OrderedTree& t, const FamilyParams& fam);

/// Sum of weight(T, fam) over all ordered trees with n vertices.
Rational weighted_count(int n, const FamilyParams& fam);

enum class TreeFormat { paren, json, dot };

/// paren:  tree := "(" tree* ")", no whitespace
/// json:   {"children":[...]} recursively
/// dot:    digraph with vertices numbered in preorder, edges parent -> child
///         in child order
std::string serialize(const OrderedTree& t, TreeFormat format);

/// dot serialization with a caller-chosen graph name.
std::string to_dot(const OrderedTree& t, std::string_view name);

/// Inverse of serialize(t, TreeFormat::paren).  Throws std::invalid_argument
/// on unbalanced, empty, or trailing input.
OrderedTree parse_paren(std::string_view text);

}  // namespace hooklen
