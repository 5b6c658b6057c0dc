#pragma once

#include <stdexcept>
#include <string>

namespace weakforms {

// Raised when a coefficient or window lies outside what the inputs determine.
class PrecisionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when a linear-algebra construction does not reach its target rank.
class RankError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised for arguments outside an operation's supported domain.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace weakforms
