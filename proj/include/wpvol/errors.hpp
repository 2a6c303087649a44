#pragma once

#include <stdexcept>
#include <string>

namespace wpvol {

// Invalid input: unstable index, bad length, violated hypothesis.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Cache file unreadable, malformed or failing its checksum.
struct StorageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature or refinement did not reach the requested tolerance.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised from long computations once an interrupt has been requested.
struct Interrupted : std::runtime_error {
    Interrupted() : std::runtime_error("interrupted") {}
};

void request_interrupt() noexcept;
bool interrupt_requested() noexcept;
void clear_interrupt() noexcept;

}  // namespace wpvol
