#ifndef WMP_ERRORS_HPP
#define WMP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wmp {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge endpoint out of range, or a self-loop.
struct InvalidEdge : Error {
    using Error::Error;
};

// Vertex count (or derived object size) outside the supported 1..64 range,
// or a brute-force size guard exceeded.
struct SizeOutOfRange : Error {
    using Error::Error;
};

// An operation was handed an empty vertex or edge selection.
struct EmptySelection : Error {
    using Error::Error;
};

// Malformed graph6 string or graph expression; `position` is the byte
// offset of the first offending character.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Operands that must have equal vertex counts do not.
struct SizeMismatch : Error {
    using Error::Error;
};

}  // namespace wmp

#endif
