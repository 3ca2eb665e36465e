#pragma once

#include <stdexcept>
#include <string>

namespace corospec {

// Requested evaluation point sits on (or too close to) a pole of a coronal.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// A structural postcondition failed (e.g. an assembled spectrum has the wrong
// cardinality). Indicates a formula or implementation bug, not bad user input.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace corospec
