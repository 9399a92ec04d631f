#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "nashcsp/error.hpp"
#include "nashcsp/game.hpp"
#include "nashcsp/structure.hpp"

namespace nashcsp {

using NodeIndex = std::size_t;
inline constexpr NodeIndex kNoNode = std::numeric_limits< NodeIndex >::max();

/// Rooted tree over nodes 0..k-1; children are kept in ascending order.
class RootedTree {
public:
   RootedTree() = default;

   /// Builds from child lists; throws DecompositionError unless they form a
   /// single rooted tree.
   static RootedTree from_children(std::vector< std::vector< NodeIndex > > children)
   {
      RootedTree t;
      const auto k = children.size();
      if(k == 0) {
         throw DecompositionError("decomposition has no nodes");
      }
      t.parent_.assign(k, kNoNode);
      for(NodeIndex v = 0; v < k; ++v) {
         for(auto c : children[v]) {
            if(c >= k) {
               throw DecompositionError("node " + std::to_string(v) + " has a missing child " + std::to_string(c));
            }
            if(c == v or t.parent_[c] != kNoNode) {
               throw DecompositionError("node " + std::to_string(c) + " has more than one parent");
            }
            t.parent_[c] = v;
         }
         std::sort(children[v].begin(), children[v].end());
      }
      t.children_ = std::move(children);
      t.root_ = kNoNode;
      for(NodeIndex v = 0; v < k; ++v) {
         if(t.parent_[v] == kNoNode) {
            if(t.root_ != kNoNode) {
               throw DecompositionError("decomposition is not connected: nodes " + std::to_string(t.root_) + " and "
                                        + std::to_string(v) + " are both roots");
            }
            t.root_ = v;
         }
      }
      if(t.root_ == kNoNode or t.preorder().size() != k) {
         throw DecompositionError("decomposition tree contains a cycle");
      }
      return t;
   }

   /// Builds from undirected edges, rooted at `root`.
   static RootedTree from_edges(std::size_t k, std::span< const std::pair< NodeIndex, NodeIndex > > edges, NodeIndex root)
   {
      std::vector< std::vector< NodeIndex > > adjacent(k);
      for(auto [a, b] : edges) {
         adjacent[a].push_back(b);
         adjacent[b].push_back(a);
      }
      std::vector< std::vector< NodeIndex > > children(k);
      std::vector< bool > seen(k, false);
      std::vector< NodeIndex > stack{root};
      seen[root] = true;
      while(not stack.empty()) {
         auto v = stack.back();
         stack.pop_back();
         for(auto w : adjacent[v]) {
            if(not seen[w]) {
               seen[w] = true;
               children[v].push_back(w);
               stack.push_back(w);
            }
         }
      }
      return from_children(std::move(children));
   }

   std::size_t size() const { return parent_.size(); }
   NodeIndex root() const { return root_; }
   NodeIndex parent(NodeIndex v) const { return parent_[v]; }
   std::span< const NodeIndex > children(NodeIndex v) const { return children_[v]; }
   const std::vector< std::vector< NodeIndex > >& child_lists() const { return children_; }

   std::vector< std::pair< NodeIndex, NodeIndex > > edges() const
   {
      std::vector< std::pair< NodeIndex, NodeIndex > > out;
      for(NodeIndex v = 0; v < size(); ++v) {
         if(parent_[v] != kNoNode) {
            out.emplace_back(parent_[v], v);
         }
      }
      return out;
   }

   /// Same undirected tree hung from another node.
   RootedTree rerooted(NodeIndex new_root) const
   {
      if(new_root >= size()) {
         throw InputError("root node out of range");
      }
      auto e = edges();
      return from_edges(size(), e, new_root);
   }

   /// Parents before children; children in ascending order.
   std::vector< NodeIndex > preorder() const
   {
      std::vector< NodeIndex > out;
      if(root_ == kNoNode) {
         return out;
      }
      std::vector< NodeIndex > stack{root_};
      while(not stack.empty() and out.size() <= size()) {
         auto v = stack.back();
         stack.pop_back();
         out.push_back(v);
         for(auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) {
            stack.push_back(*it);
         }
      }
      return out;
   }

   std::vector< NodeIndex > postorder() const
   {
      auto order = preorder();
      std::reverse(order.begin(), order.end());
      return order;
   }

   friend bool operator==(const RootedTree&, const RootedTree&) = default;

private:
   std::vector< NodeIndex > parent_;
   std::vector< std::vector< NodeIndex > > children_;
   NodeIndex root_ = kNoNode;
};

namespace detail {

inline std::string vertex_label(std::span< const std::string > names, PlayerIndex v)
{
   return names.empty() or v >= names.size() ? "#" + std::to_string(v) : "'" + names[v] + "'";
}

inline bool sorted_subset(std::span< const PlayerIndex > a, std::span< const PlayerIndex > b)
{
   return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Every vertex's occurrence set must induce a connected subtree: at most one
/// node holding v may have a parent that lacks v.
inline void check_connected(
   const RootedTree& tree,
   std::size_t vertex_count,
   const std::function< bool(NodeIndex, PlayerIndex) >& holds,
   std::span< const std::string > names,
   const std::string& condition)
{
   std::vector< NodeIndex > top(vertex_count, kNoNode);
   for(NodeIndex v = 0; v < tree.size(); ++v) {
      for(PlayerIndex x = 0; x < vertex_count; ++x) {
         if(not holds(v, x)) {
            continue;
         }
         auto parent = tree.parent(v);
         if(parent != kNoNode and holds(parent, x)) {
            continue;
         }
         if(top[x] != kNoNode) {
            throw DecompositionError(
               condition + ": vertex " + vertex_label(names, x) + " occurs in disconnected nodes "
               + std::to_string(top[x]) + " and " + std::to_string(v));
         }
         top[x] = v;
      }
   }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Join trees
// ---------------------------------------------------------------------------

/// Join tree of a characteristic-edge hypergraph: one node per player; node
/// v carries the edge of owner(v).
struct JoinTree {
   RootedTree tree;
   std::vector< PlayerIndex > owner;

   NodeIndex node_of(PlayerIndex p) const
   {
      auto it = std::find(owner.begin(), owner.end(), p);
      if(it == owner.end()) {
         throw InputError("join tree has no node for player " + std::to_string(p));
      }
      return static_cast< NodeIndex >(it - owner.begin());
   }

   JoinTree rerooted_at_player(PlayerIndex p) const { return {tree.rerooted(node_of(p)), owner}; }

   friend bool operator==(const JoinTree&, const JoinTree&) = default;
};

/// GYO ear reduction. An active edge e is an ear when the part of e shared
/// with the other active edges lies inside one of them (its witness); ears
/// are attached below their witness and removed. The smallest ear and then
/// the smallest witness are chosen, so the result is deterministic. Returns
/// nullopt when the hypergraph is cyclic.
inline std::optional< JoinTree > join_tree(const Hypergraph& h)
{
   const auto n = h.edge_count();
   if(n == 0) {
      return std::nullopt;
   }
   std::vector< std::size_t > occurrences(h.vertex_count(), 0);
   for(const auto& e : h.edges()) {
      for(auto v : e) {
         ++occurrences[v];
      }
   }
   std::vector< bool > active(n, true);
   std::vector< std::pair< NodeIndex, NodeIndex > > links;
   std::vector< PlayerIndex > shared;
   for(std::size_t remaining = n; remaining > 1; --remaining) {
      bool found = false;
      for(PlayerIndex e = 0; e < n and not found; ++e) {
         if(not active[e]) {
            continue;
         }
         shared.clear();
         for(auto v : h.edge(e)) {
            if(occurrences[v] > 1) {
               shared.push_back(v);
            }
         }
         for(PlayerIndex f = 0; f < n and not found; ++f) {
            if(f == e or not active[f] or not detail::sorted_subset(shared, h.edge(f))) {
               continue;
            }
            links.emplace_back(f, e);
            active[e] = false;
            for(auto v : h.edge(e)) {
               --occurrences[v];
            }
            found = true;
         }
      }
      if(not found) {
         return std::nullopt;
      }
   }
   NodeIndex root = static_cast< NodeIndex >(std::find(active.begin(), active.end(), true) - active.begin());
   JoinTree jt;
   jt.tree = RootedTree::from_edges(n, links, root);
   jt.owner.resize(n);
   for(PlayerIndex p = 0; p < n; ++p) {
      jt.owner[p] = p;
   }
   return jt;
}

/// Throws DecompositionError naming the violating node or player.
inline void validate_join_tree(const Hypergraph& h, const JoinTree& jt, std::span< const std::string > names = {})
{
   if(jt.owner.size() != jt.tree.size()) {
      throw DecompositionError("join tree: every node needs exactly one owner");
   }
   if(jt.owner.size() != h.edge_count()) {
      throw DecompositionError(
         "join tree: has " + std::to_string(jt.owner.size()) + " nodes but the hypergraph has "
         + std::to_string(h.edge_count()) + " edges");
   }
   std::vector< bool > seen(h.edge_count(), false);
   for(NodeIndex v = 0; v < jt.owner.size(); ++v) {
      auto p = jt.owner[v];
      if(p >= h.edge_count()) {
         throw DecompositionError("join tree: node " + std::to_string(v) + " has an unknown owner");
      }
      if(seen[p]) {
         throw DecompositionError("join tree: player " + detail::vertex_label(names, p) + " owns two nodes");
      }
      seen[p] = true;
   }
   detail::check_connected(
      jt.tree, h.vertex_count(), [&](NodeIndex v, PlayerIndex x) { return h.edge_contains(jt.owner[v], x); }, names,
      "join tree connectedness");
}

// ---------------------------------------------------------------------------
// Tree decompositions
// ---------------------------------------------------------------------------

struct TreeDecomposition {
   RootedTree tree;
   std::vector< std::vector< PlayerIndex > > bags;

   /// max |bag| - 1
   std::size_t width() const
   {
      std::size_t w = 0;
      for(const auto& b : bags) {
         w = std::max(w, b.size());
      }
      return w == 0 ? 0 : w - 1;
   }

   friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Returns the width; throws DecompositionError naming the violated
/// condition and a witness.
inline std::size_t validate_tree_decomposition(
   const Graph& g, const TreeDecomposition& td, std::span< const std::string > names = {})
{
   if(td.bags.size() != td.tree.size()) {
      throw DecompositionError("tree decomposition: every node needs exactly one bag");
   }
   std::vector< std::vector< bool > > in_bag(td.bags.size(), std::vector< bool >(g.vertex_count(), false));
   for(NodeIndex v = 0; v < td.bags.size(); ++v) {
      if(not std::is_sorted(td.bags[v].begin(), td.bags[v].end())
         or std::adjacent_find(td.bags[v].begin(), td.bags[v].end()) != td.bags[v].end()) {
         throw DecompositionError("tree decomposition: bag of node " + std::to_string(v) + " is not a set");
      }
      for(auto x : td.bags[v]) {
         if(x >= g.vertex_count()) {
            throw DecompositionError("tree decomposition: bag of node " + std::to_string(v) + " has an unknown vertex");
         }
         in_bag[v][x] = true;
      }
   }
   for(PlayerIndex x = 0; x < g.vertex_count(); ++x) {
      bool covered = std::any_of(in_bag.begin(), in_bag.end(), [&](const auto& row) { return row[x]; });
      if(not covered) {
         throw DecompositionError("condition 1: vertex " + detail::vertex_label(names, x) + " is in no bag");
      }
   }
   for(auto [a, b] : g.edges()) {
      bool covered = std::any_of(in_bag.begin(), in_bag.end(), [&](const auto& row) { return row[a] and row[b]; });
      if(not covered) {
         throw DecompositionError(
            "condition 2: edge {" + detail::vertex_label(names, a) + ", " + detail::vertex_label(names, b)
            + "} is in no bag");
      }
   }
   detail::check_connected(
      td.tree, g.vertex_count(), [&](NodeIndex v, PlayerIndex x) { return bool(in_bag[v][x]); }, names,
      "condition 3");
   return td.width();
}

/// Min-fill elimination, ties to the smaller vertex. Bags contained in an
/// adjacent bag are merged away afterwards.
inline TreeDecomposition tree_decomposition_heuristic(const Graph& g)
{
   const auto n = g.vertex_count();
   if(n == 0) {
      throw InputError("tree decomposition of an empty graph");
   }
   std::vector< std::set< PlayerIndex > > adjacent(n);
   for(PlayerIndex v = 0; v < n; ++v) {
      adjacent[v] = g.adjacent(v);
   }
   std::vector< bool > eliminated(n, false);
   std::vector< std::size_t > position(n);
   std::vector< PlayerIndex > order;
   std::vector< std::vector< PlayerIndex > > bags(n);
   for(std::size_t step = 0; step < n; ++step) {
      PlayerIndex best = 0;
      std::size_t best_fill = std::numeric_limits< std::size_t >::max();
      for(PlayerIndex v = 0; v < n; ++v) {
         if(eliminated[v]) {
            continue;
         }
         std::size_t fill = 0;
         for(auto a = adjacent[v].begin(); a != adjacent[v].end() and fill < best_fill; ++a) {
            for(auto b = std::next(a); b != adjacent[v].end(); ++b) {
               if(not adjacent[*a].contains(*b)) {
                  ++fill;
               }
            }
         }
         if(fill < best_fill) {
            best_fill = fill;
            best = v;
         }
      }
      auto v = best;
      eliminated[v] = true;
      position[v] = step;
      order.push_back(v);
      bags[step].push_back(v);
      bags[step].insert(bags[step].end(), adjacent[v].begin(), adjacent[v].end());
      std::sort(bags[step].begin(), bags[step].end());
      for(auto a : adjacent[v]) {
         adjacent[a].erase(v);
         for(auto b : adjacent[v]) {
            if(a != b) {
               adjacent[a].insert(b);
            }
         }
      }
   }
   // Node i (the bag of the i-th eliminated vertex) hangs below the bag of its
   // earliest-eliminated later neighbor; components are chained together.
   std::vector< NodeIndex > parent(n, kNoNode);
   for(std::size_t i = 0; i + 1 < n; ++i) {
      std::size_t next = n;
      for(auto x : bags[i]) {
         if(x != order[i]) {
            next = std::min(next, position[x]);
         }
      }
      parent[i] = next < n ? next : i + 1;
   }
   // Merge a node into a neighbor whose bag contains it.
   std::vector< bool > alive(n, true);
   bool changed = true;
   while(changed) {
      changed = false;
      for(NodeIndex v = 0; v < n; ++v) {
         if(not alive[v] or parent[v] == kNoNode) {
            continue;
         }
         auto p = parent[v];
         if(detail::sorted_subset(bags[v], bags[p])) {
            // drop v
         } else if(detail::sorted_subset(bags[p], bags[v])) {
            bags[p] = bags[v];
         } else {
            continue;
         }
         alive[v] = false;
         for(NodeIndex c = 0; c < n; ++c) {
            if(alive[c] and parent[c] == v) {
               parent[c] = p;
            }
         }
         changed = true;
      }
   }
   std::vector< NodeIndex > renumber(n, kNoNode);
   TreeDecomposition td;
   for(NodeIndex v = 0; v < n; ++v) {
      if(alive[v]) {
         renumber[v] = td.bags.size();
         td.bags.push_back(bags[v]);
      }
   }
   std::vector< std::vector< NodeIndex > > children(td.bags.size());
   for(NodeIndex v = 0; v < n; ++v) {
      if(alive[v] and parent[v] != kNoNode) {
         children[renumber[parent[v]]].push_back(renumber[v]);
      }
   }
   td.tree = RootedTree::from_children(std::move(children));
   return td;
}

// ---------------------------------------------------------------------------
// Hypertree decompositions
// ---------------------------------------------------------------------------

/// λ lists edge owners (players), χ lists vertices; both sorted.
struct HypertreeDecomposition {
   RootedTree tree;
   std::vector< std::vector< PlayerIndex > > chi;
   std::vector< std::vector< PlayerIndex > > lambda;

   std::size_t width() const
   {
      std::size_t w = 0;
      for(const auto& l : lambda) {
         w = std::max(w, l.size());
      }
      return w;
   }

   friend bool operator==(const HypertreeDecomposition&, const HypertreeDecomposition&) = default;
};

struct HypertreeReport {
   std::size_t width = 0;
   bool complete = false;
};

/// Node v strongly covers the edge of p when p ∈ λ(v) and H(p) ⊆ χ(v).
inline bool strongly_covers(const Hypergraph& h, const HypertreeDecomposition& hd, NodeIndex v, PlayerIndex p)
{
   return std::binary_search(hd.lambda[v].begin(), hd.lambda[v].end(), p)
          and detail::sorted_subset(h.edge(p), hd.chi[v]);
}

inline HypertreeReport validate_hypertree_decomposition(
   const Hypergraph& h, const HypertreeDecomposition& hd, std::span< const std::string > names = {})
{
   const auto k = hd.tree.size();
   if(hd.chi.size() != k or hd.lambda.size() != k) {
      throw DecompositionError("hypertree decomposition: every node needs chi and lambda labels");
   }
   const auto n = h.vertex_count();
   std::vector< std::vector< bool > > in_chi(k, std::vector< bool >(n, false));
   for(NodeIndex v = 0; v < k; ++v) {
      for(const auto* label : {&hd.chi[v], &hd.lambda[v]}) {
         if(not std::is_sorted(label->begin(), label->end())
            or std::adjacent_find(label->begin(), label->end()) != label->end()
            or (not label->empty() and label->back() >= n)) {
            throw DecompositionError("hypertree decomposition: labels of node " + std::to_string(v) + " are not valid sets");
         }
      }
      for(auto x : hd.chi[v]) {
         in_chi[v][x] = true;
      }
   }
   // 1. every hyperedge inside some χ
   for(PlayerIndex p = 0; p < h.edge_count(); ++p) {
      bool covered = false;
      for(NodeIndex v = 0; v < k and not covered; ++v) {
         covered = detail::sorted_subset(h.edge(p), hd.chi[v]);
      }
      if(not covered) {
         throw DecompositionError(
            "condition 1: the edge of " + detail::vertex_label(names, p) + " is contained in no chi label");
      }
   }
   // 2. connectedness of χ occurrences
   detail::check_connected(
      hd.tree, n, [&](NodeIndex v, PlayerIndex x) { return bool(in_chi[v][x]); }, names, "condition 2");
   // 3. χ(v) ⊆ vert(λ(v))
   std::vector< std::vector< bool > > in_lambda(k, std::vector< bool >(n, false));
   for(NodeIndex v = 0; v < k; ++v) {
      for(auto e : hd.lambda[v]) {
         for(auto x : h.edge(e)) {
            in_lambda[v][x] = true;
         }
      }
      for(auto x : hd.chi[v]) {
         if(not in_lambda[v][x]) {
            throw DecompositionError(
               "condition 3: vertex " + detail::vertex_label(names, x) + " of chi at node " + std::to_string(v)
               + " is not covered by lambda");
         }
      }
   }
   // 4. vert(λ(v)) ∩ χ(T_v) ⊆ χ(v)
   std::vector< std::vector< bool > > below(k, std::vector< bool >(n, false));
   for(auto v : hd.tree.postorder()) {
      below[v] = in_chi[v];
      for(auto c : hd.tree.children(v)) {
         for(PlayerIndex x = 0; x < n; ++x) {
            if(below[c][x]) {
               below[v][x] = true;
            }
         }
      }
      for(PlayerIndex x = 0; x < n; ++x) {
         if(in_lambda[v][x] and below[v][x] and not in_chi[v][x]) {
            throw DecompositionError(
               "condition 4: vertex " + detail::vertex_label(names, x) + " is in lambda and below node "
               + std::to_string(v) + " but not in its chi");
         }
      }
   }
   HypertreeReport report{hd.width(), true};
   for(PlayerIndex p = 0; p < h.edge_count() and report.complete; ++p) {
      bool strong = false;
      for(NodeIndex v = 0; v < k and not strong; ++v) {
         strong = strongly_covers(h, hd, v, p);
      }
      report.complete = strong;
   }
   return report;
}

/// Same tree as the join tree; λ(v) = {H(owner)}, χ(v) = H(owner). Width 1.
inline HypertreeDecomposition hd_of_join_tree(const Hypergraph& h, const JoinTree& jt)
{
   HypertreeDecomposition hd;
   hd.tree = jt.tree;
   for(auto p : jt.owner) {
      hd.lambda.push_back({p});
      hd.chi.emplace_back(h.edge(p).begin(), h.edge(p).end());
   }
   return hd;
}

/// Same tree as the tree decomposition; λ(v) = {H(p) : p in the bag} and
/// χ(v) = the union of those edges. Width = td width + 1, always complete.
template < typename Game >
HypertreeDecomposition td_to_hd(const Game& game, const TreeDecomposition& td)
{
   validate_tree_decomposition(dependency_graph(game), td, game.roster().player_names());
   auto h = dependency_hypergraph(game);
   HypertreeDecomposition hd;
   hd.tree = td.tree;
   for(const auto& bag : td.bags) {
      hd.lambda.push_back(bag);
      std::set< PlayerIndex > chi;
      for(auto p : bag) {
         chi.insert(h.edge(p).begin(), h.edge(p).end());
      }
      hd.chi.emplace_back(chi.begin(), chi.end());
   }
   return hd;
}

}  // namespace nashcsp
