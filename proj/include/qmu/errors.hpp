#pragma once

#include <stdexcept>
#include <string>

namespace qmu {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation point sits on (or within the pole threshold of) a singular set.
struct PoleHit : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of the function.
struct DomainError : Error {
    using Error::Error;
};

/// Series terms grow instead of settling.
struct Divergent : Error {
    using Error::Error;
};

/// Truncation::max_terms reached before the tail settled.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct DuplicateName : Error {
    using Error::Error;
};

struct UnknownIdentity : Error {
    using Error::Error;
};

}  // namespace qmu
