#pragma once

#include <stdexcept>
#include <string>

namespace zslpose {

/// Error category carried by every exception thrown from the core.
/// The C API maps each category to one status code.
enum class ErrorCode {
    argument,    // bad call: null handle, out-of-range index, invalid option
    io,          // missing or unreadable file, write failure
    parse,       // malformed file content
    validation,  // data violates a documented invariant
    eval,        // protocol precondition failed (empty class, k >= N_c, ...)
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace zslpose
