#include "huainf/tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "huainf/koszul.hpp"

namespace huainf {
namespace {

// Returns one past the end of the subtree starting at pos, or throws.
std::size_t skip_subtree(const std::vector<Label>& code, std::size_t pos) {
  std::size_t pending = 1;
  while (pending > 0) {
    if (pos >= code.size()) throw std::invalid_argument("truncated tree encoding");
    pending += static_cast<std::size_t>(label_arity(code[pos])) - 1;
    ++pos;
  }
  return pos;
}

}  // namespace

PlanarTree::PlanarTree(std::vector<Label> code) : code_(std::move(code)) {
  if (code_.empty()) throw std::invalid_argument("empty tree encoding");
  if (skip_subtree(code_, 0) != code_.size()) throw std::invalid_argument("trailing symbols in tree encoding");
}

PlanarTree PlanarTree::corolla(Label l) {
  std::vector<Label> code{l};
  code.resize(1 + static_cast<std::size_t>(label_arity(l)), kInput);
  return PlanarTree(std::move(code));
}

int PlanarTree::arity() const {
  return static_cast<int>(std::count(code_.begin(), code_.end(), kInput));
}

int PlanarTree::degree() const {
  int d = 0;
  for (Label l : code_) d += label_degree(l);
  return d;
}

int PlanarTree::internal_count() const { return static_cast<int>(code_.size()) - arity(); }

std::vector<std::size_t> PlanarTree::tetris_order() const {
  TreeShape s(*this);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < s.size(); ++v)
    if (s.label[v] != kInput) out.push_back(v);
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return s.depth[a] > s.depth[b]; });
  return out;
}

std::vector<Label> PlanarTree::factors() const {
  std::vector<Label> out;
  for (std::size_t v : tetris_order()) out.push_back(code_[v]);
  return out;
}

PlanarTree PlanarTree::graft(std::span<const PlanarTree> subtrees, const PlanarTree& base) {
  if (static_cast<int>(subtrees.size()) != base.arity()) throw std::invalid_argument("graft: arity mismatch");
  std::vector<Label> code;
  std::size_t q = 0;
  for (Label l : base.code_) {
    if (l == kInput) {
      const auto& sc = subtrees[q++].code_;
      code.insert(code.end(), sc.begin(), sc.end());
    } else {
      code.push_back(l);
    }
  }
  PlanarTree t;
  t.code_ = std::move(code);
  return t;
}

TreeShape::TreeShape(const PlanarTree& t) {
  const auto& code = t.code();
  const std::size_t n = code.size();
  label = code;
  parent.assign(n, -1);
  depth.assign(n, 0);
  children.assign(n, {});
  // stack of (vertex, remaining children)
  std::vector<std::pair<int, int>> stack;
  for (std::size_t v = 0; v < n; ++v) {
    if (!stack.empty()) {
      int p = stack.back().first;
      parent[v] = p;
      depth[v] = depth[static_cast<std::size_t>(p)] + 1;
      children[static_cast<std::size_t>(p)].push_back(static_cast<int>(v));
      if (--stack.back().second == 0) stack.pop_back();
    }
    int a = label_arity(code[v]);
    if (a > 0) stack.emplace_back(static_cast<int>(v), a);
  }
}

std::vector<std::size_t> input_positions(const TreeShape& s) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < s.size(); ++v)
    if (s.label[v] == kInput) out.push_back(v);
  return out;
}

TreeBuilder::TreeBuilder(const PlanarTree& t) {
  TreeShape s(t);
  nodes_.resize(s.size());
  for (std::size_t v = 0; v < s.size(); ++v) {
    nodes_[v].label = s.label[v];
    nodes_[v].kids = s.children[v];
    nodes_[v].parent = s.parent[v];
  }
  root_ = 0;
  for (std::size_t v : t.tetris_order()) order_.push_back(static_cast<int>(v));
}

TreeBuilder TreeBuilder::graft(std::span<const PlanarTree> subtrees, const PlanarTree& base) {
  PlanarTree whole = PlanarTree::graft(subtrees, base);
  TreeBuilder b(whole);
  b.order_.clear();
  // locate blocks: preorder position of each base vertex in the grafted code
  std::vector<int> base_pos;
  std::vector<int> sub_start;
  int shift = 0;
  std::size_t q = 0;
  for (std::size_t p = 0; p < base.size(); ++p) {
    base_pos.push_back(static_cast<int>(p) + shift);
    if (base.code()[p] == kInput) {
      sub_start.push_back(static_cast<int>(p) + shift);
      shift += static_cast<int>(subtrees[q++].size()) - 1;
    }
  }
  for (std::size_t k = 0; k < subtrees.size(); ++k)
    for (std::size_t v : subtrees[k].tetris_order()) b.order_.push_back(sub_start[k] + static_cast<int>(v));
  for (std::size_t v : base.tetris_order()) b.order_.push_back(base_pos[v]);
  return b;
}

int TreeBuilder::add_node(Label l) {
  nodes_.push_back(Node{l, {}, -1, true});
  return static_cast<int>(nodes_.size()) - 1;
}

void TreeBuilder::set_child(int parent, int old_child, int new_child) {
  if (parent < 0) {
    root_ = new_child;
  } else {
    auto& kids = nodes_[static_cast<std::size_t>(parent)].kids;
    auto it = std::find(kids.begin(), kids.end(), old_child);
    if (it == kids.end()) throw std::logic_error("TreeBuilder: broken parent link");
    *it = new_child;
  }
  nodes_[static_cast<std::size_t>(new_child)].parent = parent;
}

void TreeBuilder::kill_subtree(int id) {
  std::vector<int> stack{id};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto& n = nodes_[static_cast<std::size_t>(v)];
    n.alive = false;
    for (int c : n.kids) stack.push_back(c);
  }
  std::erase_if(order_, [&](int v) { return !nodes_[static_cast<std::size_t>(v)].alive; });
}

std::vector<int> TreeBuilder::inputs() const {
  std::vector<int> out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const auto& n = nodes_[static_cast<std::size_t>(v)];
    if (n.label == kInput) out.push_back(v);
    for (auto it = n.kids.rbegin(); it != n.kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

void TreeBuilder::substitute(int id, const PlanarTree& replacement) {
  Node& target = nodes_[static_cast<std::size_t>(id)];
  if (target.label == kInput) throw std::invalid_argument("substitute: target is an input");
  const std::vector<int> old_kids = target.kids;
  const int par = target.parent;
  if (replacement.arity() != static_cast<int>(old_kids.size()))
    throw std::invalid_argument("substitute: arity mismatch");
  if (replacement.is_unit()) {
    splice_unary(id);
    return;
  }
  TreeShape s(replacement);
  std::vector<int> ids(s.size(), -1);
  std::size_t next_input = 0;
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (s.label[v] == kInput) ids[v] = old_kids[next_input++];
    else ids[v] = add_node(s.label[v]);
  }
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (s.label[v] == kInput) continue;
    auto& n = nodes_[static_cast<std::size_t>(ids[v])];
    for (int c : s.children[v]) {
      n.kids.push_back(ids[static_cast<std::size_t>(c)]);
      nodes_[static_cast<std::size_t>(ids[static_cast<std::size_t>(c)])].parent = ids[v];
    }
  }
  set_child(par, id, ids[0]);
  nodes_[static_cast<std::size_t>(id)].alive = false;
  nodes_[static_cast<std::size_t>(id)].kids.clear();
  std::vector<int> repl;
  for (std::size_t v : replacement.tetris_order()) repl.push_back(ids[v]);
  auto it = std::find(order_.begin(), order_.end(), id);
  it = order_.erase(it);
  order_.insert(it, repl.begin(), repl.end());
}

void TreeBuilder::relabel(int id, Label l) {
  Node& n = nodes_[static_cast<std::size_t>(id)];
  if (n.label == kInput || label_arity(l) != label_arity(n.label)) throw std::invalid_argument("relabel: arity mismatch");
  n.label = l;
}

void TreeBuilder::splice_unary(int id) {
  Node& n = nodes_[static_cast<std::size_t>(id)];
  if (n.kids.size() != 1) throw std::invalid_argument("splice_unary: vertex is not unary");
  int child = n.kids[0];
  set_child(n.parent, id, child);
  n.alive = false;
  n.kids.clear();
  std::erase(order_, id);
}

void TreeBuilder::replace_by_child(int id, int keep) {
  int par = nodes_[static_cast<std::size_t>(id)].parent;
  int keep_parent = nodes_[static_cast<std::size_t>(keep)].parent;
  // detach keep first so kill_subtree leaves it alone
  auto& kk = nodes_[static_cast<std::size_t>(keep_parent)].kids;
  *std::find(kk.begin(), kk.end(), keep) = -1;
  set_child(par, id, keep);
  std::vector<int> stack{id};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v < 0) continue;
    auto& n = nodes_[static_cast<std::size_t>(v)];
    n.alive = false;
    for (int c : n.kids) stack.push_back(c);
  }
  std::erase_if(order_, [&](int v) { return !nodes_[static_cast<std::size_t>(v)].alive; });
}

TreeBuilder TreeBuilder::extract(int id) {
  TreeBuilder out;
  std::vector<int> map(nodes_.size(), -1);
  std::vector<int> stack{id};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    map[static_cast<std::size_t>(v)] = out.add_node(nodes_[static_cast<std::size_t>(v)].label);
    const auto& kids = nodes_[static_cast<std::size_t>(v)].kids;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (map[v] < 0) continue;
    auto& n = out.nodes_[static_cast<std::size_t>(map[v])];
    for (int c : nodes_[v].kids) {
      n.kids.push_back(map[static_cast<std::size_t>(c)]);
      out.nodes_[static_cast<std::size_t>(map[static_cast<std::size_t>(c)])].parent = map[v];
    }
  }
  out.root_ = map[static_cast<std::size_t>(id)];
  for (int v : order_)
    if (map[static_cast<std::size_t>(v)] >= 0) out.order_.push_back(map[static_cast<std::size_t>(v)]);
  int input = add_node(kInput);
  set_child(nodes_[static_cast<std::size_t>(id)].parent, id, input);
  std::vector<int> dead{id};
  while (!dead.empty()) {
    int v = dead.back();
    dead.pop_back();
    nodes_[static_cast<std::size_t>(v)].alive = false;
    for (int c : nodes_[static_cast<std::size_t>(v)].kids) dead.push_back(c);
  }
  std::erase_if(order_, [&](int v) { return !nodes_[static_cast<std::size_t>(v)].alive; });
  return out;
}

void TreeBuilder::absorb_child(int parent, int child, Label merged) {
  auto& pk = nodes_[static_cast<std::size_t>(parent)].kids;
  auto it = std::find(pk.begin(), pk.end(), child);
  if (it == pk.end()) throw std::invalid_argument("absorb_child: not a child");
  std::vector<int> ck = nodes_[static_cast<std::size_t>(child)].kids;
  it = pk.erase(it);
  pk.insert(it, ck.begin(), ck.end());
  for (int c : ck) nodes_[static_cast<std::size_t>(c)].parent = parent;
  if (label_arity(merged) != static_cast<int>(pk.size())) throw std::invalid_argument("absorb_child: arity mismatch");
  nodes_[static_cast<std::size_t>(parent)].label = merged;
  nodes_[static_cast<std::size_t>(child)].alive = false;
  nodes_[static_cast<std::size_t>(child)].kids.clear();
  std::erase(order_, child);
}

std::pair<PlanarTree, int> TreeBuilder::canonical() const {
  std::vector<Label> code;
  std::vector<int> pos(nodes_.size(), -1);
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const auto& n = nodes_[static_cast<std::size_t>(v)];
    pos[static_cast<std::size_t>(v)] = static_cast<int>(code.size());
    code.push_back(n.label);
    for (auto it = n.kids.rbegin(); it != n.kids.rend(); ++it) stack.push_back(*it);
  }
  PlanarTree t(std::move(code));
  // index of each preorder position within the current factor order
  std::vector<std::size_t> slot(t.size(), 0);
  std::vector<int> degrees;
  for (std::size_t k = 0; k < order_.size(); ++k) {
    int p = pos[static_cast<std::size_t>(order_[k])];
    if (p < 0) throw std::logic_error("TreeBuilder: factor order lists a detached vertex");
    slot[static_cast<std::size_t>(p)] = k;
    degrees.push_back(label_degree(nodes_[static_cast<std::size_t>(order_[k])].label));
  }
  std::vector<std::size_t> perm;
  for (std::size_t p : t.tetris_order()) perm.push_back(slot[p]);
  if (perm.size() != order_.size()) throw std::logic_error("TreeBuilder: factor order out of sync");
  return {std::move(t), koszul_sign(degrees, perm)};
}

}  // namespace huainf
