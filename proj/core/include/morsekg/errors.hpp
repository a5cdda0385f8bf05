#pragma once

#include <stdexcept>
#include <string>

namespace morsekg {

/// Requested key is not in a registry; the message lists what is.
struct NotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operation only defined for the real, self-adjoint case.
struct UnsupportedCaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Z_k pivot of the coefficient recurrence vanished at index k.
struct DegenerateRecurrenceError : std::runtime_error {
    explicit DegenerateRecurrenceError(int k)
        : std::runtime_error("degenerate recurrence: Z_" + std::to_string(k) + " = 0"),
          index(k) {}
    int index;
};

/// The A2 = A4 = 0 reduction does not apply to the given parameters.
struct SpecialCaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-integrable or non-evaluable limit (z -> 0 tail, norm integral).
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two results being compared were not produced from the same inputs.
struct ProvenanceMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace morsekg
