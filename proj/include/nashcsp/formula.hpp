#pragma once

#include <set>
#include <string>
#include <vector>

#include "nashcsp/error.hpp"

namespace nashcsp {

/// Literal over a variable index into the owning formula's variable list.
struct Literal {
   std::size_t variable = 0;
   bool positive = true;

   Literal negated() const { return {variable, not positive}; }
   bool holds(const std::vector< bool >& assignment) const { return assignment[variable] == positive; }

   auto operator<=>(const Literal&) const = default;
};

/// Conjunction of clauses (disjunctions of literals).
struct Cnf {
   std::vector< std::string > variables;
   std::vector< std::vector< Literal > > clauses;

   void validate() const
   {
      std::set< std::string > names(variables.begin(), variables.end());
      if(names.size() != variables.size()) {
         throw InputError("formula declares a variable twice");
      }
      for(const auto& clause : clauses) {
         for(auto l : clause) {
            if(l.variable >= variables.size()) {
               throw InputError("clause mentions an undeclared variable");
            }
         }
      }
   }

   bool satisfied_by(const std::vector< bool >& assignment) const
   {
      for(const auto& clause : clauses) {
         bool any = false;
         for(auto l : clause) {
            any = any or l.holds(assignment);
         }
         if(not any) {
            return false;
         }
      }
      return true;
   }

   friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// ∃ exists ∀ forall: d_1 ∨ ... ∨ d_m with every d_i a conjunction. Variable
/// indices run over exists then forall.
struct R2Qbf {
   std::vector< std::string > exists;
   std::vector< std::string > forall;
   std::vector< std::vector< Literal > > disjuncts;

   std::size_t variable_count() const { return exists.size() + forall.size(); }
   bool is_existential(std::size_t v) const { return v < exists.size(); }
   const std::string& name(std::size_t v) const { return v < exists.size() ? exists[v] : forall[v - exists.size()]; }

   void validate() const
   {
      std::set< std::string > names(exists.begin(), exists.end());
      if(names.size() != exists.size()) {
         throw InputError("existential block declares a variable twice");
      }
      for(const auto& v : forall) {
         if(not names.insert(v).second) {
            throw InputError("variable '" + v + "' is declared twice or in both blocks");
         }
      }
      for(const auto& d : disjuncts) {
         for(auto l : d) {
            if(l.variable >= variable_count()) {
               throw InputError("disjunct mentions an undeclared variable");
            }
         }
      }
   }

   bool matrix_holds(const std::vector< bool >& assignment) const
   {
      for(const auto& d : disjuncts) {
         bool all = true;
         for(auto l : d) {
            all = all and l.holds(assignment);
         }
         if(all) {
            return true;
         }
      }
      return false;
   }

   friend bool operator==(const R2Qbf&, const R2Qbf&) = default;
};

}  // namespace nashcsp
