#include "twocnf/implication_graph.hpp"

#include "formula/errors.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace thrcnf {

std::string node_name(LitNode v) {
  const Literal l = literal_of(v);
  return (l.negated() ? "~x" : "x") + std::to_string(l.var());
}

ImplicationGraph::ImplicationGraph(const Formula& f) : n_(f.num_vars()), succ_(2 * n_), pred_(2 * n_) {
  auto add = [&](LitNode a, LitNode b) {
    succ_[a].push_back(b);
    pred_[b].push_back(a);
  };
  for (const auto& c : f.clauses()) {
    const auto lits = c.literals();
    if (lits.size() > 2) throw InputError("implication graph needs a 2-CNF, found clause of width " +
                                          std::to_string(lits.size()));
    if (lits.size() == 1) {
      add(node_of(~lits[0]), node_of(lits[0]));
    } else {
      add(node_of(~lits[0]), node_of(lits[1]));
      add(node_of(~lits[1]), node_of(lits[0]));
    }
  }
  for (auto* adj : {&succ_, &pred_})
    for (auto& list : *adj) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

std::size_t ImplicationGraph::num_edges() const {
  std::size_t e = 0;
  for (const auto& s : succ_) e += s.size();
  return e;
}

std::vector<std::pair<LitNode, LitNode>> ImplicationGraph::edges() const {
  std::vector<std::pair<LitNode, LitNode>> out;
  for (LitNode v = 0; v < succ_.size(); ++v)
    for (LitNode w : succ_[v]) out.emplace_back(v, w);
  return out;
}

namespace {

std::vector<bool> reach(const std::vector<std::vector<LitNode>>& adj, LitNode start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<LitNode> stack(adj[start].begin(), adj[start].end());
  while (!stack.empty()) {
    const LitNode v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    for (LitNode w : adj[v])
      if (!seen[w]) stack.push_back(w);
  }
  return seen;
}

}  // namespace

std::vector<bool> ImplicationGraph::descendants(LitNode v) const { return reach(succ_, v); }
std::vector<bool> ImplicationGraph::ancestors(LitNode v) const { return reach(pred_, v); }

std::vector<std::vector<LitNode>> ImplicationGraph::sccs() const {
  const std::size_t N = succ_.size();
  std::vector<int> index(N, -1), low(N, 0);
  std::vector<bool> on_stack(N, false);
  std::vector<LitNode> stack;
  std::vector<std::vector<LitNode>> out;
  int counter = 0;

  std::function<void(LitNode)> strong = [&](LitNode v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (LitNode w : succ_[v]) {
      if (index[w] < 0) {
        strong(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<LitNode> comp;
      LitNode w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (LitNode v = 0; v < N; ++v)
    if (index[v] < 0) strong(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool ImplicationGraph::is_acyclic() const { return topological_order().has_value(); }

std::optional<std::vector<LitNode>> ImplicationGraph::topological_order() const {
  const std::size_t N = succ_.size();
  std::vector<std::size_t> indeg(N, 0);
  for (const auto& s : succ_)
    for (LitNode w : s) ++indeg[w];
  std::priority_queue<LitNode, std::vector<LitNode>, std::greater<>> ready;
  for (LitNode v = 0; v < N; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<LitNode> order;
  while (!ready.empty()) {
    const LitNode v = ready.top();
    ready.pop();
    order.push_back(v);
    for (LitNode w : succ_[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (order.size() != N) return std::nullopt;
  return order;
}

bool ImplicationGraph::closed_under_contraposition() const {
  for (LitNode v = 0; v < succ_.size(); ++v)
    for (LitNode w : succ_[v]) {
      const auto& back = succ_[negate(w)];
      if (!std::binary_search(back.begin(), back.end(), negate(v))) return false;
    }
  return true;
}

std::string ImplicationGraph::edge_list() const {
  std::string out;
  for (auto [a, b] : edges()) out += node_name(a) + " -> " + node_name(b) + "\n";
  return out;
}

}  // namespace thrcnf
