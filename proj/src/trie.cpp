#include "irrdecomp/trie.hpp"

#include <algorithm>
#include <ostream>

#include "irrdecomp/errors.hpp"

namespace irrdecomp {

namespace {

using Node = Trie::Node;

std::size_t count_leaves(const Node& node, std::size_t depth_left) {
  if (depth_left == 0) return 1;
  std::size_t total = 0;
  for (const auto& c : node.children) total += count_leaves(c, depth_left - 1);
  return total;
}

void collect(const Node& node, std::size_t depth_left, ExpVector& prefix,
             std::vector<ExpVector>& out) {
  if (depth_left == 0) {
    out.push_back(prefix);
    return;
  }
  for (const auto& c : node.children) {
    prefix[depth_left - 1] = c.label;
    collect(c, depth_left - 1, prefix, out);
  }
}

// Sorted-sibling union of b into a.
void merge_into(Node& a, const Node& b) {
  for (const auto& child : b.children) {
    auto it = std::lower_bound(a.children.begin(), a.children.end(), child.label,
                               [](const Node& n, Exponent l) { return n.label < l; });
    if (it == a.children.end() || it->label != child.label) {
      a.children.insert(it, child);
    } else {
      merge_into(*it, child);
    }
  }
}

bool nodes_equal(const Node& a, const Node& b) {
  if (a.label != b.label || a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!nodes_equal(a.children[i], b.children[i])) return false;
  }
  return true;
}

bool check_node(const Node& node, std::size_t depth_left) {
  if (depth_left == 0) return node.children.empty();
  if (node.children.empty()) return false;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0 && !(node.children[i - 1].label < node.children[i].label)) return false;
    if (!check_node(node.children[i], depth_left - 1)) return false;
  }
  return true;
}

void dump_node(std::ostream& os, const Node& node, std::size_t depth) {
  for (const auto& c : node.children) {
    os << std::string(2 * (depth - 1), ' ') << c.label << ' ' << depth << '\n';
    dump_node(os, c, depth + 1);
  }
}

std::size_t common_height(std::span<const Trie> ts) {
  if (ts.empty()) throw UsageError("merge: no tries given");
  const std::size_t h = ts.front().height();
  for (const auto& t : ts) {
    if (t.height() != h) throw UsageError("merge: height mismatch");
  }
  return h;
}

std::vector<ExpVector> all_paths(std::span<const Trie> ts) {
  std::vector<ExpVector> out;
  for (const auto& t : ts) {
    auto p = t.paths();
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

}  // namespace

Trie Trie::build(std::size_t height, std::span<const ExpVector> vs) {
  Trie t(height);
  for (const auto& v : vs) t.insert(v);
  return t;
}

std::size_t Trie::size() const { return empty() ? 0 : count_leaves(root_, height_); }

void Trie::insert(const ExpVector& v) {
  if (v.size() != height_) {
    throw UsageError("trie: vector " + to_string(v) + " does not match height " +
                     std::to_string(height_));
  }
  Node* node = &root_;
  for (std::size_t i = height_; i-- > 0;) {
    auto& kids = node->children;
    auto it = std::lower_bound(kids.begin(), kids.end(), v[i],
                               [](const Node& n, Exponent l) { return n.label < l; });
    if (it == kids.end() || it->label != v[i]) it = kids.insert(it, Node{v[i], {}});
    node = &*it;
  }
}

std::vector<ExpVector> Trie::paths() const {
  std::vector<ExpVector> out;
  if (empty()) return out;
  ExpVector prefix(height_);
  collect(root_, height_, prefix, out);
  return out;
}

std::vector<std::pair<Exponent, Trie>> Trie::slice_top() const {
  if (height_ < 2) throw UsageError("slice_top: trie height must be at least 2");
  std::vector<std::pair<Exponent, Trie>> out;
  out.reserve(root_.children.size());
  for (const auto& c : root_.children) {
    Trie sub(height_ - 1);
    sub.root_.children = c.children;
    out.emplace_back(c.label, std::move(sub));
  }
  return out;
}

void Trie::absorb(const Trie& other) {
  if (other.height_ != height_) throw UsageError("merge: height mismatch");
  merge_into(root_, other.root_);
}

bool Trie::well_formed() const { return empty() || check_node(root_, height_); }

void Trie::dump(std::ostream& os) const {
  os << "root " << height_ << '\n';
  dump_node(os, root_, 1);
}

bool operator==(const Trie& a, const Trie& b) {
  return a.height_ == b.height_ && nodes_equal(a.root_, b.root_);
}

Trie merge(std::span<const Trie> ts) {
  Trie out(common_height(ts));
  for (const auto& t : ts) out.absorb(t);
  return out;
}

Trie min_merge(std::span<const Trie> ts, OpCounter* ops) {
  const std::size_t h = common_height(ts);
  const auto mins = minimalize(all_paths(ts), ops);
  return Trie::build(h, mins);
}

Trie max_merge(std::span<const Trie> ts, OpCounter* ops) {
  const std::size_t h = common_height(ts);
  const auto maxs = maximalize(all_paths(ts), ops);
  return Trie::build(h, maxs);
}

}  // namespace irrdecomp
