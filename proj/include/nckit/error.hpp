#pragma once

#include <stdexcept>
#include <string>

namespace nckit {

// Raised when an operation's precondition on its inputs fails (mismatched
// ground sets, crossing partitions where non-crossing ones are required, ...).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Raised when an enumeration size exceeds its configured cap.
class size_error : public std::length_error {
public:
  using std::length_error::length_error;
};

// Raised by the JSON series reader.
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace nckit
