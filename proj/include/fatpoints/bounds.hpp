#pragma once

// Known emptiness ratios for L_d(m^10) and the resulting Seshadri bound.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "integer.hpp"

namespace fatpoints {

struct BoundEntry {
   std::string label;
   std::string ratio;  // "p/q", or "sqrt(10)"
   std::optional<Integer> numerator;
   std::optional<Integer> denominator;
   std::string decimal;  // rounded to 6 places
};

/// Rounds num/den (positive) to `places` decimals, half up.
inline std::string decimal_approximation(const Integer& num, const Integer& den, unsigned places = 6)
{
   Integer scale = 1;
   for (unsigned i = 0; i < places; ++i) scale *= 10;
   const Integer scaled = (2 * num * scale + den) / (2 * den);
   std::string digits = (scaled / scale).str() + ".";
   std::string frac = (scaled % scale).str();
   return digits + std::string(places - frac.size(), '0') + frac;
}

/// sqrt(n) to 6 places from an integer square root.
inline std::string sqrt_approximation(const Integer& n, unsigned places = 6)
{
   Integer scale = 1;
   for (unsigned i = 0; i <= places; ++i) scale *= 10;
   // One extra digit for rounding.
   const Integer root = boost::multiprecision::sqrt(Integer(n * scale * scale));
   return decimal_approximation(root, scale, places);
}

inline std::vector<BoundEntry> bounds_table()
{
   auto frac = [](std::string label, int p, int q) {
      return BoundEntry{std::move(label), std::to_string(p) + "/" + std::to_string(q), Integer(p), Integer(q),
                        decimal_approximation(p, q)};
   };
   return {
      BoundEntry{"Nagata conjecture", "sqrt(10)", std::nullopt, std::nullopt, sqrt_approximation(10)},
      frac("earlier bound (177/56)", 177, 56),
      frac("earlier bound (313/99)", 313, 99),
      frac("earlier degeneration bound (550/174)", 550, 174),
      frac("nine-component degeneration (certify)", 117, 37),
      frac("ten-point Seshadri constant lower bound", 117, 370),
   };
}

}  // namespace fatpoints
