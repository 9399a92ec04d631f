#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "nashcsp/error.hpp"
#include "nashcsp/game.hpp"

namespace nashcsp {

using Edge = std::pair< PlayerIndex, PlayerIndex >;

/// Undirected simple graph over vertices 0..n-1. Edges are stored as sorted
/// (low, high) pairs in lexicographic order.
class Graph {
public:
   Graph() = default;
   explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

   Graph(std::size_t vertex_count, std::span< const Edge > edges) : adjacency_(vertex_count)
   {
      for(auto [u, v] : edges) {
         add_edge(u, v);
      }
   }

   std::size_t vertex_count() const { return adjacency_.size(); }

   void add_edge(PlayerIndex u, PlayerIndex v)
   {
      if(u >= vertex_count() or v >= vertex_count()) {
         throw InputError("edge references a missing vertex");
      }
      if(u == v) {
         throw InputError("self-loops are not allowed");
      }
      adjacency_[u].insert(v);
      adjacency_[v].insert(u);
   }

   bool has_edge(PlayerIndex u, PlayerIndex v) const { return adjacency_[u].contains(v); }
   const std::set< PlayerIndex >& adjacent(PlayerIndex v) const { return adjacency_[v]; }

   std::vector< Edge > edges() const
   {
      std::vector< Edge > out;
      for(PlayerIndex u = 0; u < vertex_count(); ++u) {
         for(auto v : adjacency_[u]) {
            if(u < v) {
               out.emplace_back(u, v);
            }
         }
      }
      return out;
   }

   friend bool operator==(const Graph&, const Graph&) = default;

private:
   std::vector< std::set< PlayerIndex > > adjacency_;
};

/// Hypergraph with one hyperedge per vertex: edge(p) is the characteristic
/// edge owned by p and always contains p. Each edge is a sorted vertex list.
class Hypergraph {
public:
   Hypergraph() = default;

   explicit Hypergraph(std::vector< std::vector< PlayerIndex > > edges) : edges_(std::move(edges))
   {
      for(PlayerIndex p = 0; p < edges_.size(); ++p) {
         auto& e = edges_[p];
         std::sort(e.begin(), e.end());
         e.erase(std::unique(e.begin(), e.end()), e.end());
         if(not std::binary_search(e.begin(), e.end(), p)) {
            throw InputError("hyperedge of vertex " + std::to_string(p) + " does not contain its owner");
         }
         if(not e.empty() and e.back() >= edges_.size()) {
            throw InputError("hyperedge references a missing vertex");
         }
      }
   }

   std::size_t vertex_count() const { return edges_.size(); }
   std::size_t edge_count() const { return edges_.size(); }
   std::span< const PlayerIndex > edge(PlayerIndex owner) const { return edges_[owner]; }
   const std::vector< std::vector< PlayerIndex > >& edges() const { return edges_; }

   bool edge_contains(PlayerIndex owner, PlayerIndex v) const
   {
      return std::binary_search(edges_[owner].begin(), edges_[owner].end(), v);
   }

   friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
   std::vector< std::vector< PlayerIndex > > edges_;
};

/// G(G): {p, q} is an edge iff one of them is a neighbor of the other.
template < typename Game >
Graph dependency_graph(const Game& game)
{
   Graph g(game.player_count());
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      for(auto q : game.neighbors(p)) {
         g.add_edge(p, q);
      }
   }
   return g;
}

/// H(G): one characteristic edge {p} ∪ Neigh(p) per player.
template < typename Game >
Hypergraph dependency_hypergraph(const Game& game)
{
   std::vector< std::vector< PlayerIndex > > edges;
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      auto& e = edges.emplace_back(game.neighbors(p).begin(), game.neighbors(p).end());
      e.push_back(p);
   }
   return Hypergraph(std::move(edges));
}

inline Graph primal_graph(const Hypergraph& h)
{
   Graph g(h.vertex_count());
   for(const auto& e : h.edges()) {
      for(std::size_t i = 0; i < e.size(); ++i) {
         for(std::size_t j = i + 1; j < e.size(); ++j) {
            g.add_edge(e[i], e[j]);
         }
      }
   }
   return g;
}

struct GameMetrics {
   std::uint64_t size_norm = 0;
   std::size_t max_neigh = 0;
   std::size_t max_act = 0;
   double intricacy = 0.0;
};

namespace detail {

inline GameMetrics finish_metrics(GameMetrics m)
{
   if(m.max_neigh == 0 or m.max_act <= 1 or m.size_norm <= 1) {
      m.intricacy = 0.0;
   } else {
      m.intricacy = double(m.max_neigh) * std::log2(double(m.max_act)) / std::log2(double(m.size_norm));
   }
   return m;
}

}  // namespace detail

/// ||G|| counts every stored payoff plus, per player, one header item, her
/// actions and her neighbors.
inline GameMetrics metrics(const GnfGame& game)
{
   GameMetrics m;
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      m.size_norm += game.table_size(p) + 1 + game.action_count(p) + game.neighbors(p).size();
      m.max_neigh = std::max(m.max_neigh, game.neighbors(p).size());
      m.max_act = std::max(m.max_act, game.action_count(p));
   }
   return detail::finish_metrics(m);
}

/// For standard form every cell stores one payoff per player and every player
/// may depend on all others.
inline GameMetrics metrics(const SnfGame& game)
{
   GameMetrics m;
   m.size_norm = game.cell_count() * game.player_count();
   for(PlayerIndex p = 0; p < game.player_count(); ++p) {
      m.size_norm += 1 + game.action_count(p) + game.neighbors(p).size();
      m.max_neigh = std::max(m.max_neigh, game.neighbors(p).size());
      m.max_act = std::max(m.max_act, game.action_count(p));
   }
   return detail::finish_metrics(m);
}

}  // namespace nashcsp
