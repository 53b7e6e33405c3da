#include "hooklen/tree.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace hooklen {

int OrderedTree::vertex_count() const {
  int n = 1;
  for (const auto& c : children) n += c.vertex_count();
  return n;
}

namespace {

// Appends every way of distributing the subtree lists over the parts of one
// composition, first child varying slowest.
void cartesian(const std::vector<std::vector<OrderedTree>>& lists,
               const std::vector<int>& parts, std::size_t i, OrderedTree& partial,
               std::vector<OrderedTree>& out) {
  if (i == parts.size()) {
    out.push_back(partial);
    return;
  }
  for (const OrderedTree& sub : lists[static_cast<std::size_t>(parts[i])]) {
    partial.children.push_back(sub);
    cartesian(lists, parts, i + 1, partial, out);
    partial.children.pop_back();
  }
}

// Compositions of total into d positive parts, lexicographically ascending.
void compositions(int total, int d, std::vector<int>& parts,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (d == 1) {
    parts.push_back(total);
    emit(parts);
    parts.pop_back();
    return;
  }
  for (int first = 1; first <= total - d + 1; ++first) {
    parts.push_back(first);
    compositions(total - first, d - 1, parts, emit);
    parts.pop_back();
  }
}

}  // namespace

std::vector<OrderedTree> enumerate_ordered(int n) {
  if (n < 1) throw std::domain_error("enumerate_ordered: n must be >= 1");
  std::vector<std::vector<OrderedTree>> lists(static_cast<std::size_t>(n) + 1);
  lists[1].push_back(OrderedTree{});
  for (int k = 2; k <= n; ++k) {
    auto& out = lists[static_cast<std::size_t>(k)];
    for (int d = 1; d <= k - 1; ++d) {
      std::vector<int> parts;
      compositions(k - 1, d, parts, [&](const std::vector<int>& p) {
        OrderedTree partial;
        cartesian(lists, p, 0, partial, out);
      });
    }
  }
  return std::move(lists[static_cast<std::size_t>(n)]);
}

namespace {

int collect_stats(const OrderedTree& t, VertexStats& stats) {
  const std::size_t slot = stats.hook.size();
  stats.hook.push_back(0);
  stats.degree.push_back(static_cast<int>(t.children.size()));
  int h = 1;
  for (const auto& c : t.children) h += collect_stats(c, stats);
  stats.hook[slot] = h;
  return h;
}

}  // namespace

VertexStats hook_lengths(const OrderedTree& t) {
  VertexStats stats;
  collect_stats(t, stats);
  return stats;
}

Rational weight(const OrderedTree& t, const FamilyParams& fam) {
  const VertexStats stats = hook_lengths(t);
  Rational w(1);
  for (int d : stats.degree)
    w *= binom(fam.m, static_cast<unsigned>(d)) * pow(fam.s, static_cast<unsigned>(d));
  return w;
}

Rational weighted_count(int n, const FamilyParams& fam) {
  Rational total;
  for (const OrderedTree& t : enumerate_ordered(n)) total += weight(t, fam);
  return total;
}

namespace {

void paren_rec(const OrderedTree& t, std::string& out) {
  out += '(';
  for (const auto& c : t.children) paren_rec(c, out);
  out += ')';
}

void json_rec(const OrderedTree& t, std::string& out) {
  out += "{\"children\":[";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0) out += ',';
    json_rec(t.children[i], out);
  }
  out += "]}";
}

int dot_edges(const OrderedTree& t, int self, std::string& out) {
  int next = self + 1;
  for (const auto& c : t.children) {
    out += "  " + std::to_string(self) + " -> " + std::to_string(next) + ";\n";
    next = dot_edges(c, next, out);
  }
  return next;
}

}  // namespace

std::string to_dot(const OrderedTree& t, std::string_view name) {
  std::string out = "digraph " + std::string(name) + " {\n";
  if (t.children.empty()) {
    out += "  0;\n";
  } else {
    dot_edges(t, 0, out);
  }
  out += "}\n";
  return out;
}

std::string serialize(const OrderedTree& t, TreeFormat format) {
  std::string out;
  switch (format) {
    case TreeFormat::paren:
      paren_rec(t, out);
      return out;
    case TreeFormat::json:
      json_rec(t, out);
      return out;
    case TreeFormat::dot:
      return to_dot(t, "T");
  }
  throw std::invalid_argument("serialize: unknown format");
}

namespace {

OrderedTree parse_rec(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '(')
    throw std::invalid_argument("parse_paren: expected '(' at position " +
                                std::to_string(pos));
  ++pos;
  OrderedTree t;
  while (pos < text.size() && text[pos] == '(') t.children.push_back(parse_rec(text, pos));
  if (pos >= text.size() || text[pos] != ')')
    throw std::invalid_argument("parse_paren: expected ')' at position " +
                                std::to_string(pos));
  ++pos;
  return t;
}

}  // namespace

OrderedTree parse_paren(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_paren: empty input");
  std::size_t pos = 0;
  OrderedTree t = parse_rec(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("parse_paren: trailing input at position " +
                                std::to_string(pos));
  return t;
}

}  // namespace hooklen
