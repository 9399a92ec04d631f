#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "nashcsp/error.hpp"

namespace nashcsp {

/// Exact rational payoff. Always kept in lowest terms with a positive
/// denominator, so equality is structural.
class Payoff {
public:
   using value_type = boost::rational< std::int64_t >;

   Payoff() = default;
   Payoff(std::int64_t integer) : value_(integer) {}
   Payoff(std::int64_t numerator, std::int64_t denominator)
   {
      if(denominator == 0) {
         throw InputError("payoff denominator must be nonzero");
      }
      value_.assign(numerator, denominator);
   }

   std::int64_t numerator() const { return value_.numerator(); }
   std::int64_t denominator() const { return value_.denominator(); }

   /// Accepts "2", "-1", "3/2", "0.25", "-1.5".
   static Payoff parse(std::string_view text)
   {
      auto fail = [&] { return InputError("not a rational payoff: '" + std::string(text) + "'"); };
      if(text.empty()) {
         throw fail();
      }
      if(auto slash = text.find('/'); slash != std::string_view::npos) {
         auto num = parse_integer(text.substr(0, slash));
         auto den = parse_integer(text.substr(slash + 1));
         if(not num or not den or *den == 0) {
            throw fail();
         }
         return Payoff(*num, *den);
      }
      if(auto dot = text.find('.'); dot != std::string_view::npos) {
         auto whole = text.substr(0, dot);
         auto frac = text.substr(dot + 1);
         bool negative = not whole.empty() and whole.front() == '-';
         if(not whole.empty() and (whole.front() == '-' or whole.front() == '+')) {
            whole.remove_prefix(1);
         }
         if((whole.empty() and frac.empty()) or frac.size() > 17) {
            throw fail();
         }
         std::int64_t scale = 1;
         for(std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
         }
         auto w = whole.empty() ? std::optional< std::int64_t >(0) : parse_unsigned(whole);
         auto f = frac.empty() ? std::optional< std::int64_t >(0) : parse_unsigned(frac);
         if(not w or not f or *w > std::numeric_limits< std::int64_t >::max() / scale) {
            throw fail();
         }
         std::int64_t num = *w * scale + *f;
         return Payoff(negative ? -num : num, scale);
      }
      auto integer = parse_integer(text);
      if(not integer) {
         throw fail();
      }
      return Payoff(*integer);
   }

   /// Canonical text: "n" for integers, "n/d" otherwise.
   std::string to_string() const
   {
      if(value_.denominator() == 1) {
         return std::to_string(value_.numerator());
      }
      return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
   }

   double to_double() const { return boost::rational_cast< double >(value_); }

   friend bool operator==(const Payoff& a, const Payoff& b) { return a.value_ == b.value_; }
   friend std::strong_ordering operator<=>(const Payoff& a, const Payoff& b)
   {
      if(a.value_ < b.value_) {
         return std::strong_ordering::less;
      }
      if(b.value_ < a.value_) {
         return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
   }

   friend std::ostream& operator<<(std::ostream& os, const Payoff& p) { return os << p.to_string(); }

private:
   static std::optional< std::int64_t > parse_unsigned(std::string_view s)
   {
      std::int64_t out = 0;
      if(s.empty() or s.front() == '-' or s.front() == '+') {
         return std::nullopt;
      }
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      if(ec != std::errc{} or ptr != s.data() + s.size()) {
         return std::nullopt;
      }
      return out;
   }

   static std::optional< std::int64_t > parse_integer(std::string_view s)
   {
      bool negative = false;
      if(not s.empty() and (s.front() == '-' or s.front() == '+')) {
         negative = s.front() == '-';
         s.remove_prefix(1);
      }
      auto magnitude = parse_unsigned(s);
      if(not magnitude) {
         return std::nullopt;
      }
      return negative ? -*magnitude : *magnitude;
   }

   value_type value_{0};
};

}  // namespace nashcsp
