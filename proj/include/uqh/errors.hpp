#pragma once

#include <stdexcept>
#include <string>

namespace uqh {

/// Exact division was requested but the remainder is nonzero.
struct DivisionNotExact : std::runtime_error {
    explicit DivisionNotExact(const std::string& what) : std::runtime_error(what) {}
};

/// A q-integer that must be invertible vanishes (q too close to a root of unity),
/// or a numeric request cannot be honored at this q.
struct NonGenericQ : std::runtime_error {
    int q_integer_index;
    explicit NonGenericQ(int index, const std::string& what)
        : std::runtime_error(what), q_integer_index(index) {}
};

/// Neither square-root branch satisfies the small-argument asymptotics.
struct BranchAmbiguity : std::runtime_error {
    explicit BranchAmbiguity(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix fed to a truncated series evaluation is not nilpotent.
struct NotNilpotent : std::runtime_error {
    explicit NotNilpotent(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid run configuration (bad ranges, missing numeric context, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace uqh
