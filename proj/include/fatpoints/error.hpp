#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fatpoints {

/// Malformed `L<d>(...)` text. `position` is a 0-based offset into the original input.
class ParseError : public std::runtime_error {
public:
   ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position)
   {
   }
   std::size_t position() const noexcept { return position_; }

private:
   std::size_t position_;
};

class InfeasibleTwist : public std::invalid_argument {
public:
   using std::invalid_argument::invalid_argument;
};

/// Raised by operations whose closed forms need an even degree.
class OddDegreeInput : public std::invalid_argument {
public:
   using std::invalid_argument::invalid_argument;
};

/// Sampling kept hitting coincidences; usually the prime is too small.
class ResamplingExhausted : public std::runtime_error {
public:
   using std::runtime_error::runtime_error;
};

/// A configuration recipe that does not fit the system it is applied to.
class ConfigError : public std::invalid_argument {
public:
   using std::invalid_argument::invalid_argument;
};

}  // namespace fatpoints
