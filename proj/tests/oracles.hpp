#pragma once

// Independent brute-force oracles for the tests.  Everything here is written
// against first definitions (additive recurrences, explicit enumeration)
// rather than through the library code paths it is used to check.

#include <memory>
#include <vector>

namespace oracles {

// Catalan numbers by the additive recurrence C_k = sum_i C_i C_{k-1-i}.
inline long long catalan(int k) {
  std::vector<long long> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j < i; ++j)
      c[static_cast<std::size_t>(i)] +=
          c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - 1 - j)];
  return c[static_cast<std::size_t>(k)];
}

// (2n-3)!! = 1 * 3 * ... * (2n-3); the n = 1 case is the empty product.
inline long long double_factorial_2n_minus_3(int n) {
  long long r = 1;
  for (int f = 1; f <= 2 * n - 3; f += 2) r *= f;
  return r;
}

// Pascal's triangle, rows 0..rows inclusive.
inline std::vector<std::vector<long long>> pascal(int rows) {
  std::vector<std::vector<long long>> t;
  for (int i = 0; i <= rows; ++i) {
    std::vector<long long> row(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j)
      row[static_cast<std::size_t>(j)] = t.back()[static_cast<std::size_t>(j - 1)] +
                                         t.back()[static_cast<std::size_t>(j)];
    t.push_back(std::move(row));
  }
  return t;
}

// Incomplete binary trees: each vertex has at most one left and at most one
// right child.  Used as the independent model behind the (1,2) family.
struct BinaryTree;
using BinaryTreePtr = std::shared_ptr<const BinaryTree>;
struct BinaryTree {
  BinaryTreePtr left;   // may be null
  BinaryTreePtr right;  // may be null
};

inline std::vector<BinaryTreePtr> enumerate_binary(int n) {
  if (n == 0) return {nullptr};
  std::vector<BinaryTreePtr> out;
  for (int nl = 0; nl <= n - 1; ++nl) {
    for (const auto& l : enumerate_binary(nl))
      for (const auto& r : enumerate_binary(n - 1 - nl))
        out.push_back(std::make_shared<BinaryTree>(BinaryTree{l, r}));
  }
  return out;
}

// Subtree sizes (hook lengths) of every vertex of a binary tree.
inline int binary_hooks(const BinaryTreePtr& t, std::vector<int>& hooks) {
  if (!t) return 0;
  int sz = 1;
  sz += binary_hooks(t->left, hooks);
  sz += binary_hooks(t->right, hooks);
  hooks.push_back(sz);
  return sz;
}

}  // namespace oracles
