#ifndef SGRAPH_ERRORS_HPP
#define SGRAPH_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgraph {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (permutations, group expressions, spec files).
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  explicit ParseError(std::string const& what) : Error(what), position_(0) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Arguments that violate an operation's contract (degree mismatch, n out of
/// range, p not dividing |G|, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A group is too large for element enumeration.
class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t order, std::uint64_t cap)
      : Error("group order " + std::to_string(order) +
              " exceeds the exhaustive cap " + std::to_string(cap)),
        order_(order),
        cap_(cap) {}

  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t order_;
  std::uint64_t cap_;
};

/// A quotient G/N would have more than the quotient cap elements.
class QuotientCapExceeded : public Error {
 public:
  QuotientCapExceeded(std::uint64_t index, std::uint64_t cap)
      : Error("quotient order " + std::to_string(index) +
              " exceeds the quotient cap " + std::to_string(cap)),
        index_(index),
        cap_(cap) {}

  std::uint64_t index() const noexcept { return index_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t index_;
  std::uint64_t cap_;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. a constructor produced a group
/// of the wrong order, or shipped generator data is corrupt).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sgraph

#endif  // SGRAPH_ERRORS_HPP
