#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfRange : Error {
    using Error::Error;
};
struct NotMaximalOuterplanar : Error {
    using Error::Error;
};
struct WitnessInvalid : Error {
    using Error::Error;
};
struct EdgeAbsent : Error {
    using Error::Error;
};
struct TooSmall : Error {
    using Error::Error;
};
struct NotOuterpath : Error {
    using Error::Error;
};
struct KTooSmall : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
// Signals a violated case assumption inside the split-set machinery; never
// user-facing on valid inputs.
struct NotFound : Error {
    using Error::Error;
};
struct StrategyUnavailable : Error {
    using Error::Error;
};
struct ExactTooLarge : Error {
    using Error::Error;
};
struct NTooLarge : Error {
    using Error::Error;
};
struct ParamsTooSmall : Error {
    using Error::Error;
};
struct NoCaseApplies : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

// Internal invariant check that stays on in release builds.
#define KSTAB_CHECK(cond, msg)                                        \
    do {                                                              \
        if (!(cond)) throw ::kstab::Error(std::string("check failed: ") + (msg)); \
    } while (0)

}  // namespace kstab
