#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace covering {

  // Bad argument shape or a violated precondition.
  struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  // Well-formed input that has no meaning in the requested group.
  struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
  };

  // A configured cap (degree, order, iteration count) was exceeded.
  struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // The group context lacks the backend an operation needs.
  struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Exact arithmetic produced something impossible, e.g. an irrational
  // Frobenius sum. Always a bug in a table.
  struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
  };

  struct ParseError : ArgumentError {
    ParseError(std::string const& msg, std::size_t pos)
        : ArgumentError(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
  };

}  // namespace covering
