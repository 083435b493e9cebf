#pragma once

#include <stdexcept>
#include <string>

namespace curvecat {

/// Precondition or argument-range failure.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A divisor class whose adjunction genus is not an integer.
struct ParityViolation : std::domain_error {
    using std::domain_error::domain_error;
};

/// The long-exact-sequence shortcut needs h1 = h2 = 0 for the ambient twist;
/// thrown when that hypothesis fails so the caller knows the value is not computed.
struct SequenceAssumptionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lookup of a component id that is not in the profile registry.
struct UnknownComponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedFormat : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Catalog dataset unreadable or structurally invalid.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace curvecat
