#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "huainf/label.hpp"

namespace huainf {

// Ordered rooted tree with inputs, every internal vertex carrying a label.
// Encoded as the preorder sequence of vertex labels (kInput for input
// leaves); the child count of a vertex is its label's arity. Two trees are
// equal iff their encodings are byte-equal.
class PlanarTree {
 public:
  PlanarTree() : code_{kInput} {}  // the one-vertex tree t1
  explicit PlanarTree(std::vector<Label> code);  // validates the encoding

  static PlanarTree unit() { return PlanarTree(); }
  static PlanarTree corolla(Label l);  // one vertex with all children inputs

  const std::vector<Label>& code() const { return code_; }
  std::size_t size() const { return code_.size(); }
  Label root_label() const { return code_.front(); }
  bool is_unit() const { return code_.size() == 1 && code_[0] == kInput; }

  int arity() const;          // number of inputs
  int degree() const;         // sum of label degrees
  int internal_count() const;

  // Internal vertices (as preorder positions) in tetris order: rows from the
  // top (farthest from the root) downwards, left to right within a row.
  std::vector<std::size_t> tetris_order() const;
  // Labels of internal vertices in tetris order.
  std::vector<Label> factors() const;

  // Grafting of (subtrees; base): the root of subtrees[q] replaces the q-th
  // input of base. Throws std::invalid_argument on an arity mismatch.
  static PlanarTree graft(std::span<const PlanarTree> subtrees, const PlanarTree& base);

  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
  // Orders by size first, then lexicographically with inputs after every
  // label; used for printing order.
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
    if (a.code_.size() != b.code_.size()) return a.code_.size() <=> b.code_.size();
    for (std::size_t k = 0; k < a.code_.size(); ++k) {
      if (a.code_[k] == b.code_[k]) continue;
      if (a.code_[k] == kInput) return std::strong_ordering::greater;
      if (b.code_[k] == kInput) return std::strong_ordering::less;
      return a.code_[k] <=> b.code_[k];
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Label> code_;
};

// Parsed view of a PlanarTree with explicit parent/child links.
struct TreeShape {
  std::vector<Label> label;
  std::vector<int> parent;  // -1 at the root
  std::vector<int> depth;
  std::vector<std::vector<int>> children;

  explicit TreeShape(const PlanarTree& t);
  std::size_t size() const { return label.size(); }
};

// Mutable tree whose internal vertices carry an explicit tensor-factor
// order. Rewrites edit the structure and the order; canonical() re-sorts
// the factors into tetris order and returns the Koszul sign of that sort.
class TreeBuilder {
 public:
  struct Node {
    Label label = kInput;
    std::vector<int> kids;
    int parent = -1;
    bool alive = true;
  };

  explicit TreeBuilder(const PlanarTree& t);

  // Lexicographic factor order IV(t_1) ... IV(t_k) IV(base).
  static TreeBuilder graft(std::span<const PlanarTree> subtrees, const PlanarTree& base);

  int root() const { return root_; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<int>& order() const { return order_; }

  // Internal vertex ids in the current factor order.
  std::vector<int> internal_ids() const { return order_; }
  // Input ids left to right.
  std::vector<int> inputs() const;

  // Replaces internal vertex `id` by `replacement`, whose inputs receive the
  // old children in order. The replacement's factors take the place of `id`
  // in the factor order (in the replacement's tetris order).
  void substitute(int id, const PlanarTree& replacement);
  // Relabels a vertex keeping arity.
  void relabel(int id, Label l);
  // Deletes a unary vertex, splicing its single child into its place.
  void splice_unary(int id);
  // Deletes vertex `id` and its whole subtree except `keep`, which takes
  // the place of `id`.
  void replace_by_child(int id, int keep);
  // Detaches the subtree rooted at `id` into a new builder, replacing it by
  // an input here. Factor order of the pieces follows the current order.
  TreeBuilder extract(int id);
  // Merges internal child `child` into `parent`: the child's children take
  // its slot among the parent's children and the parent is relabeled.
  void absorb_child(int parent, int child, Label merged);

  std::pair<PlanarTree, int> canonical() const;

 private:
  TreeBuilder() = default;
  int add_node(Label l);
  void set_child(int parent, int old_child, int new_child);
  void kill_subtree(int id);

  std::vector<Node> nodes_;
  std::vector<int> order_;
  int root_ = -1;
};

// Positions of the inputs (preorder indices) of a shape, left to right.
std::vector<std::size_t> input_positions(const TreeShape& s);

}  // namespace huainf
