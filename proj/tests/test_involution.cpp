#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hooklen/involution.hpp"
#include "oracles.hpp"

using hooklen::IllegalCase;
using hooklen::IncreasingTree;
using hooklen::OrderedTree;
using hooklen::Rational;

namespace {

IncreasingTree tree(const std::string& paren, std::vector<int> labels) {
  return hooklen::make_increasing(hooklen::parse_paren(paren), std::move(labels));
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(HOOKLEN_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("involution") {

TEST_CASE("enumeration counts") {
  CHECK(hooklen::enumerate_increasing(2).size() == 1);
  const std::vector<std::size_t> expected = {1, 1, 3, 15, 105, 945, 10395};
  for (int n = 1; n <= 7; ++n) {
    const auto trees = hooklen::enumerate_increasing(n);
    CHECK(trees.size() == expected[static_cast<std::size_t>(n - 1)]);
    CHECK(static_cast<long long>(trees.size()) ==
          oracles::double_factorial_2n_minus_3(n));
  }
  CHECK_THROWS_AS(hooklen::enumerate_increasing(0), std::domain_error);
}

TEST_CASE("per-shape counts are n! over the hook product") {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::string, long long> by_shape;
    for (const auto& t : hooklen::enumerate_increasing(n))
      ++by_shape[serialize(t.shape, hooklen::TreeFormat::paren)];
    for (const auto& shape : hooklen::enumerate_ordered(n)) {
      Rational expected = hooklen::factorial(static_cast<unsigned>(n));
      for (int h : hooklen::hook_lengths(shape).hook) expected /= Rational(h);
      CHECK(Rational(by_shape[serialize(shape, hooklen::TreeFormat::paren)]) == expected);
    }
  }
}

TEST_CASE("golden labeled enumeration for n = 4") {
  std::string got;
  for (const auto& t : hooklen::enumerate_increasing(4))
    got += hooklen::to_labeled_paren(t) + "\n";
  CHECK(got == read_golden("increasing_n4.paren"));
}

TEST_CASE("signs") {
  CHECK(hooklen::sign(tree("()", {1})) == -1);
  CHECK(hooklen::sign(tree("(((())))", {1, 2, 3, 4})) == 1);   // 4+3+2+1 even
  CHECK(hooklen::sign(tree("(()()())", {1, 2, 3, 4})) == -1);  // 4+1+1+1 odd
}

TEST_CASE("proper trees") {
  CHECK(hooklen::is_proper(tree("()", {1})));
  CHECK(hooklen::is_proper(tree("(()()())", {1, 2, 3, 4})));
  CHECK_FALSE(hooklen::is_proper(tree("(()()())", {1, 3, 2, 4})));
  CHECK_FALSE(hooklen::is_proper(tree("((()))", {1, 2, 3})));
  // children unordered in value: still a valid increasing tree
  CHECK_NOTHROW(tree("(()()())", {1, 4, 2, 3}));
}

TEST_CASE("increasing-tree validation") {
  CHECK_THROWS_AS(hooklen::make_increasing(hooklen::parse_paren("(())"), {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hooklen::make_increasing(hooklen::parse_paren("(())"), {1, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hooklen::make_increasing(hooklen::parse_paren("(())"), {2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hooklen::make_increasing(hooklen::parse_paren("(()())"), {1, 2, 2}),
                  std::invalid_argument);
}

TEST_CASE("first illegal leaf on hand-traced instances") {
  // proper trees have none
  CHECK_FALSE(hooklen::find_first_illegal_leaf(tree("(()()())", {1, 2, 3, 4})).has_value());

  // root 1 with leaf children (3, 2): leaf 3 beats the proper subtree {2}
  const auto a = hooklen::find_first_illegal_leaf(tree("(()())", {1, 3, 2}));
  REQUIRE(a.has_value());
  CHECK(a->kind == IllegalCase::next_sibling_proper);
  CHECK(a->leaf == 1);
  CHECK(a->parent == 0);
  CHECK(a->sibling == 2);

  // root 1 - child 2 - children (3,4): leaf 3 fails case (a) since 3 < 4;
  // leaf 4 is the rightmost child of the proper subtree at 2
  const auto b = hooklen::find_first_illegal_leaf(tree("((()()))", {1, 2, 3, 4}));
  REQUIRE(b.has_value());
  CHECK(b->kind == IllegalCase::rightmost_of_proper);
  CHECK(b->leaf == 3);
  CHECK(b->parent == 1);
  CHECK(b->sibling == -1);
}

TEST_CASE("involute on hand-traced instances") {
  const IncreasingTree a = tree("(()())", {1, 3, 2});
  const IncreasingTree a_image = hooklen::involute(a);
  CHECK(a_image == tree("((()))", {1, 2, 3}));
  CHECK(hooklen::sign(a) == -1);
  CHECK(hooklen::sign(a_image) == 1);
  CHECK(hooklen::involute(a_image) == a);

  const IncreasingTree b = tree("((()()))", {1, 2, 3, 4});
  const IncreasingTree b_image = hooklen::involute(b);
  CHECK(b_image == tree("(()(()))", {1, 4, 2, 3}));
  CHECK(hooklen::sign(b) == -hooklen::sign(b_image));

  const IncreasingTree proper = tree("(()()())", {1, 2, 3, 4});
  CHECK(hooklen::involute(proper) == proper);
}

TEST_CASE("sign-reversing involution with a unique proper fixed point") {
  for (int n = 1; n <= 7; ++n) {
    int fixed = 0;
    for (const auto& t : hooklen::enumerate_increasing(n)) {
      const IncreasingTree image = hooklen::involute(t);
      CHECK(hooklen::involute(image) == t);
      if (image == t) {
        ++fixed;
        CHECK(hooklen::is_proper(t));
        CHECK_FALSE(hooklen::find_first_illegal_leaf(t).has_value());
      } else {
        CHECK(hooklen::sign(image) == -hooklen::sign(t));
        // every non-proper tree yields a finding
        CHECK(hooklen::find_first_illegal_leaf(t).has_value());
      }
    }
    CHECK(fixed == 1);
  }
}

TEST_CASE("moved leaf stays the first illegal leaf") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& t : hooklen::enumerate_increasing(n)) {
      const auto before = hooklen::find_first_illegal_leaf(t);
      if (!before.has_value() || before->kind != IllegalCase::next_sibling_proper)
        continue;
      const IncreasingTree image = hooklen::involute(t);
      const auto after = hooklen::find_first_illegal_leaf(image);
      REQUIRE(after.has_value());
      CHECK(after->kind == IllegalCase::rightmost_of_proper);
      CHECK(image.labels[static_cast<std::size_t>(after->leaf)] ==
            t.labels[static_cast<std::size_t>(before->leaf)]);
    }
  }
}

TEST_CASE("alternating sum is -1") {
  CHECK(hooklen::alternate_identity_sum(1) == -1);
  CHECK(hooklen::alternate_identity_sum(4) == -1);
  for (int n = 1; n <= 7; ++n) CHECK(hooklen::alternate_identity_sum(n) == -1);
}

TEST_CASE("signed sum agrees with the weighted shape sum") {
  // n! * sum over shapes of prod 1/(h_v (-1)^{h_v}), computed through the
  // trees module, must equal the enumerated signed count.
  for (int n = 1; n <= 7; ++n) {
    Rational shape_sum;
    for (const auto& shape : hooklen::enumerate_ordered(n)) {
      Rational term(1);
      for (int h : hooklen::hook_lengths(shape).hook) {
        term /= Rational(h);
        if (h % 2 != 0) term = -term;
      }
      shape_sum += term;
    }
    shape_sum *= hooklen::factorial(static_cast<unsigned>(n));
    CHECK(shape_sum == Rational(hooklen::alternate_identity_sum(n)));
  }
}

TEST_CASE("labeled paren rendering") {
  CHECK(hooklen::to_labeled_paren(tree("(()())", {1, 3, 2})) == "1(3() 2())");
  CHECK(hooklen::to_labeled_paren(tree("()", {1})) == "1()");
  CHECK(hooklen::to_labeled_paren(tree("((()()))", {1, 2, 3, 4})) == "1(2(3() 4()))");
}

TEST_CASE("dot rendering highlights the illegal leaf") {
  const std::string dot = hooklen::to_dot(tree("(()())", {1, 3, 2}), "before");
  CHECK(dot == "digraph before {\n"
               "  0 [label=\"1\"];\n"
               "  1 [label=\"3\", shape=doublecircle];\n"
               "  2 [label=\"2\"];\n"
               "  0 -> 1;\n"
               "  0 -> 2;\n"
               "}\n");
  const std::string proper_dot = hooklen::to_dot(tree("()", {1}));
  CHECK(proper_dot.find("doublecircle") == std::string::npos);
}

}  // TEST_SUITE
