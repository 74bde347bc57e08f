#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

namespace fatpoints {

// Expression templates are off so that `auto` always holds a value.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline std::string to_string(const Integer& value) { return value.str(); }

inline bool is_even(const Integer& value) { return (value & 1) == 0; }

// Division rounding toward negative infinity; cpp_int's operator/ truncates.
inline Integer floor_div(const Integer& num, const Integer& den)
{
   if (den == 0) throw std::domain_error("floor_div: division by zero");
   Integer q = num / den;
   if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
   return q;
}

// Exact halving; throws if the value is odd.
inline Integer exact_half(const Integer& value)
{
   if (!is_even(value)) throw std::domain_error("exact_half: odd value " + value.str());
   return value / 2;
}

inline std::int64_t to_int64(const Integer& value, const char* what)
{
   if (value > std::numeric_limits<std::int64_t>::max() ||
       value < std::numeric_limits<std::int64_t>::min())
      throw std::out_of_range(std::string(what) + " does not fit in 64 bits");
   return static_cast<std::int64_t>(value);
}

}  // namespace fatpoints
