#pragma once

#include <stdexcept>
#include <string>

namespace pebble {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph input: self-loops, out-of-range endpoints, disconnected graphs,
/// malformed graph6 text.
class GraphError : public Error {
public:
  using Error::Error;
};

/// An illegal pebbling move or a malformed configuration.
class MoveError : public Error {
public:
  using Error::Error;
};

/// A documented implementation budget was exceeded (vertex count, pebble
/// count, packed-width overflow, oracle limits).
class BudgetError : public Error {
public:
  using Error::Error;
};

/// Fixture lookup, JSON parsing and other I/O problems.
class InputError : public Error {
public:
  using Error::Error;
};

/// Network retrieval failure with nothing usable in the cache.
class FetchError : public Error {
public:
  using Error::Error;
};

} // namespace pebble
