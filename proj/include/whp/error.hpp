#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace whp {

/// Rank or dimension mismatch, or a generator index outside 1..n.
class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Generator images that violate the defining commutation relations of Z^m x F_n.
class RelationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A witness failed re-verification. Always a bug, never a user error.
class InternalDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace whp
