#pragma once

#include <stdexcept>
#include <string>

namespace cyclequiv {

// Thrown when an oracle computation would exceed its size guard.  Guards are
// hard errors, not silent truncation; see CYCLEQUIV_GUARD_OVERRIDE.
class GuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Thrown when the cell elimination would pivot the same parameter twice.
// This never happens on valid input; it is a tripwire for implementation bugs.
class EliminationOrderViolated : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace cyclequiv
