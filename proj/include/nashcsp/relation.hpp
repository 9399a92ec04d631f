#pragma once

#include <algorithm>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "nashcsp/error.hpp"
#include "nashcsp/game.hpp"

namespace nashcsp {

/// Finite relation over an ordered scope of players. Rows are stored flat,
/// sorted lexicographically and duplicate-free, so two relations with the
/// same scope compare equal iff they hold the same tuples.
class Relation {
public:
   Relation() = default;

   /// `rows` holds arity-sized tuples back to back, in any order.
   Relation(std::vector< PlayerIndex > scope, std::vector< ActionIndex > rows)
       : scope_(std::move(scope)), data_(std::move(rows))
   {
      auto sorted = scope_;
      std::sort(sorted.begin(), sorted.end());
      if(std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
         throw InputError("relation scope lists a player twice");
      }
      if(scope_.empty()) {
         if(data_.size() > 1) {
            throw InputError("nullary relation holds at most the empty tuple");
         }
         return;
      }
      if(data_.size() % scope_.size() != 0) {
         throw InputError("relation data is not a whole number of tuples");
      }
      normalize();
   }

   /// The nullary relation holding only the empty tuple (join identity).
   static Relation unit()
   {
      Relation r;
      r.data_.push_back(0);
      return r;
   }

   std::span< const PlayerIndex > scope() const { return scope_; }
   std::size_t arity() const { return scope_.size(); }
   bool empty() const { return data_.empty(); }
   std::size_t size() const
   {
      if(scope_.empty()) {
         return data_.size();
      }
      return data_.size() / scope_.size();
   }

   std::span< const ActionIndex > row(std::size_t i) const
   {
      return std::span< const ActionIndex >(data_).subspan(i * arity(), arity());
   }

   /// Position of player p in the scope, or arity() if absent.
   std::size_t position(PlayerIndex p) const
   {
      return static_cast< std::size_t >(std::find(scope_.begin(), scope_.end(), p) - scope_.begin());
   }
   bool has(PlayerIndex p) const { return position(p) < arity(); }

   bool contains(std::span< const ActionIndex > tuple) const
   {
      if(tuple.size() != arity()) {
         return false;
      }
      if(arity() == 0) {
         return not data_.empty();
      }
      std::size_t lo = 0;
      std::size_t hi = size();
      while(lo < hi) {
         auto mid = (lo + hi) / 2;
         auto r = row(mid);
         if(std::lexicographical_compare(r.begin(), r.end(), tuple.begin(), tuple.end())) {
            lo = mid + 1;
         } else {
            hi = mid;
         }
      }
      return lo < size() and std::equal(tuple.begin(), tuple.end(), row(lo).begin());
   }

   friend bool operator==(const Relation&, const Relation&) = default;

private:
   void normalize()
   {
      const auto k = arity();
      std::vector< std::size_t > order(data_.size() / k);
      for(std::size_t i = 0; i < order.size(); ++i) {
         order[i] = i;
      }
      auto at = [&](std::size_t i) { return data_.begin() + static_cast< std::ptrdiff_t >(i * k); };
      auto less = [&](std::size_t a, std::size_t b) { return std::lexicographical_compare(at(a), at(a) + k, at(b), at(b) + k); };
      if(std::is_sorted(order.begin(), order.end(), less)) {
         bool unique = true;
         for(std::size_t i = 1; i < order.size() and unique; ++i) {
            unique = less(i - 1, i);
         }
         if(unique) {
            return;
         }
      }
      std::sort(order.begin(), order.end(), less);
      std::vector< ActionIndex > out;
      out.reserve(data_.size());
      for(std::size_t i = 0; i < order.size(); ++i) {
         if(i > 0 and not less(order[i - 1], order[i])) {
            continue;
         }
         out.insert(out.end(), at(order[i]), at(order[i]) + k);
      }
      data_ = std::move(out);
   }

   std::vector< PlayerIndex > scope_;
   std::vector< ActionIndex > data_;
};

namespace detail {

using Key = std::vector< ActionIndex >;

struct KeyHash {
   std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
};

struct SharedPositions {
   std::vector< std::size_t > left;
   std::vector< std::size_t > right;
};

inline SharedPositions shared_positions(const Relation& r1, const Relation& r2)
{
   SharedPositions out;
   for(std::size_t i = 0; i < r1.arity(); ++i) {
      auto j = r2.position(r1.scope()[i]);
      if(j < r2.arity()) {
         out.left.push_back(i);
         out.right.push_back(j);
      }
   }
   return out;
}

inline void extract_key(std::span< const ActionIndex > row, std::span< const std::size_t > positions, Key& key)
{
   key.resize(positions.size());
   for(std::size_t i = 0; i < positions.size(); ++i) {
      key[i] = row[positions[i]];
   }
}

}  // namespace detail

/// Natural join. Scope: r1's players, then r2's players not in r1.
inline Relation join(const Relation& r1, const Relation& r2)
{
   auto shared = detail::shared_positions(r1, r2);
   std::vector< std::size_t > extra;
   auto scope = std::vector< PlayerIndex >(r1.scope().begin(), r1.scope().end());
   for(std::size_t j = 0; j < r2.arity(); ++j) {
      if(not r1.has(r2.scope()[j])) {
         extra.push_back(j);
         scope.push_back(r2.scope()[j]);
      }
   }
   std::unordered_map< detail::Key, std::vector< std::size_t >, detail::KeyHash > index;
   detail::Key key;
   for(std::size_t j = 0; j < r2.size(); ++j) {
      detail::extract_key(r2.row(j), shared.right, key);
      index[key].push_back(j);
   }
   std::vector< ActionIndex > rows;
   for(std::size_t i = 0; i < r1.size(); ++i) {
      detail::extract_key(r1.row(i), shared.left, key);
      auto it = index.find(key);
      if(it == index.end()) {
         continue;
      }
      for(auto j : it->second) {
         auto left = r1.row(i);
         auto right = r2.row(j);
         rows.insert(rows.end(), left.begin(), left.end());
         for(auto e : extra) {
            rows.push_back(right[e]);
         }
      }
   }
   if(scope.empty()) {
      return r1.empty() or r2.empty() ? Relation() : Relation::unit();
   }
   return Relation(std::move(scope), std::move(rows));
}

/// r1 ⋉ r2: the tuples of r1 that agree with some tuple of r2.
inline Relation semijoin(const Relation& r1, const Relation& r2)
{
   auto shared = detail::shared_positions(r1, r2);
   std::unordered_set< detail::Key, detail::KeyHash > keys;
   detail::Key key;
   for(std::size_t j = 0; j < r2.size(); ++j) {
      detail::extract_key(r2.row(j), shared.right, key);
      keys.insert(key);
   }
   if(r1.arity() == 0) {
      return keys.empty() ? Relation() : r1;
   }
   std::vector< ActionIndex > rows;
   for(std::size_t i = 0; i < r1.size(); ++i) {
      detail::extract_key(r1.row(i), shared.left, key);
      if(keys.contains(key)) {
         auto r = r1.row(i);
         rows.insert(rows.end(), r.begin(), r.end());
      }
   }
   return Relation(std::vector< PlayerIndex >(r1.scope().begin(), r1.scope().end()), std::move(rows));
}

inline Relation project(const Relation& r, std::span< const PlayerIndex > scope)
{
   std::vector< std::size_t > positions;
   for(auto p : scope) {
      auto i = r.position(p);
      if(i == r.arity()) {
         throw InputError("projection scope is not contained in the relation scope");
      }
      positions.push_back(i);
   }
   if(scope.empty()) {
      return r.empty() ? Relation() : Relation::unit();
   }
   std::vector< ActionIndex > rows;
   rows.reserve(r.size() * scope.size());
   for(std::size_t i = 0; i < r.size(); ++i) {
      auto row = r.row(i);
      for(auto k : positions) {
         rows.push_back(row[k]);
      }
   }
   return Relation(std::vector< PlayerIndex >(scope.begin(), scope.end()), std::move(rows));
}

}  // namespace nashcsp
