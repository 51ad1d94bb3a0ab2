#pragma once

#include <stdexcept>
#include <string>

namespace bv {

// Malformed text input.  position is a 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::invalid_argument(msg + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bv
