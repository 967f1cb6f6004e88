#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reflift {

/// Malformed descriptor, element, hyperplane or grid text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different G(de,e,r), or an object that does not belong
/// to the group it is used with.
class DescriptorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or closure would exceed its configured size limit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold failed at runtime (oracle/fast
/// disagreement, unsolvable cocycle, ...). Always a bug or a falsified claim.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::size_t kDefaultGuard = 1'000'000;

}  // namespace reflift
