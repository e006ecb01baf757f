#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "irrdecomp/core.hpp"

namespace irrdecomp {

/// Prefix tree of height n over exponent vectors. A root-to-leaf path
/// spells (a_n, ..., a_1); siblings are kept in strictly increasing label
/// order, with infinity last.
class Trie {
 public:
  struct Node {
    Exponent label;
    std::vector<Node> children;
  };

  explicit Trie(std::size_t height = 0) : height_(height) {}

  static Trie build(std::size_t height, std::span<const ExpVector> vs);

  std::size_t height() const noexcept { return height_; }
  const Node& root() const noexcept { return root_; }
  bool empty() const noexcept { return root_.children.empty(); }

  /// Number of stored vectors (leaves).
  std::size_t size() const;

  void insert(const ExpVector& v);

  /// Adds every path of other (structural union of sorted siblings).
  void absorb(const Trie& other);

  /// Stored vectors in lex order.
  std::vector<ExpVector> paths() const;

  /// Children of the root with their subtrees; the subtree root is the
  /// child node with its label dropped. Requires height >= 2.
  std::vector<std::pair<Exponent, Trie>> slice_top() const;

  /// Siblings strictly increasing and every leaf at depth height().
  bool well_formed() const;

  /// One node per line, two spaces of indent per depth, "label depth".
  void dump(std::ostream& os) const;

  friend bool operator==(const Trie& a, const Trie& b);

 private:
  std::size_t height_;
  Node root_;
};

/// Union of the path sets; no reduction.
Trie merge(std::span<const Trie> ts);

/// The <=-minimal paths of merge(ts).
Trie min_merge(std::span<const Trie> ts, OpCounter* ops = nullptr);

/// The <=-maximal paths of merge(ts).
Trie max_merge(std::span<const Trie> ts, OpCounter* ops = nullptr);

}  // namespace irrdecomp
