#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hooklen/tree.hpp"

namespace hooklen {

/// Ordered tree whose vertices carry the labels 1..n, recorded in preorder,
/// with every label strictly smaller than the labels of its children (so
/// the root is labeled 1).
struct IncreasingTree {
  OrderedTree shape;
  std::vector<int> labels;  // labels[k] = label of the k-th preorder vertex

  int n() const { return static_cast<int>(labels.size()); }

  friend bool operator==(const IncreasingTree&, const IncreasingTree&) = default;
};

/// Validating constructor; throws std::invalid_argument when the labels are
/// not a permutation of 1..n increasing along root-to-leaf paths.
IncreasingTree make_increasing(OrderedTree shape, std::vector<int> labels);

/// Every increasing labeling of every ordered tree shape with n vertices,
/// shapes in enumerate_ordered order, labelings generated by assigning
/// labels 1..n ascending with candidate vertices taken in preorder.  A shape
/// with hooks h_v contributes n!/prod h_v labelings; the total over all
/// shapes is (2n-3)!! for n >= 2.
std::vector<IncreasingTree> enumerate_increasing(int n);

/// prod_v (-1)^{h_v}; depends only on the shape.
int sign(const IncreasingTree& t);

/// True iff the root has n-1 children whose labels increase left to right.
/// The single vertex is proper.
bool is_proper(const IncreasingTree& t);

enum class IllegalCase {
  next_sibling_proper,  // v precedes a sibling w whose subtree is proper and
                        // v's label beats every label in it
  rightmost_of_proper,  // v is the rightmost child of u and subtree(u) is proper
};

/// All vertex references are preorder indices into the tree.
struct IllegalLeafFinding {
  IllegalCase kind;
  int leaf = -1;     // v
  int parent = -1;   // u
  int sibling = -1;  // w; only set for next_sibling_proper
};

/// First illegal leaf in preorder, or nullopt iff the tree is proper.
/// Subtree properness is evaluated on the subtree's own labels: its root
/// must have (subtree size - 1) children with labels increasing left to
/// right.
std::optional<IllegalLeafFinding> find_first_illegal_leaf(const IncreasingTree& t);

/// The sign-reversing involution: proper trees are fixed; otherwise the
/// first illegal leaf v moves.  In the next_sibling_proper case v becomes
/// the rightmost child of its next sibling w; in the rightmost_of_proper
/// case v detaches from u and is reinserted among u's siblings immediately
/// before u.  Returns a new tree; the input is untouched.
IncreasingTree involute(const IncreasingTree& t);

/// Sum of sign(T) over all increasing ordered trees with n vertices.
/// Equals -1 for every n: the involution cancels everything except the
/// unique proper tree.
long long alternate_identity_sum(int n);

/// "label(child child ...)", e.g. "1(3() 2())".
std::string to_labeled_paren(const IncreasingTree& t);

/// DOT digraph with vertex labels; the first illegal leaf, when present,
/// is drawn as a double circle.
std::string to_dot(const IncreasingTree& t, std::string_view name = "T");

}  // namespace hooklen
