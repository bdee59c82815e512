#pragma once

#include <stdexcept>
#include <string>

namespace ckmet {

// Error taxonomy shared by the whole library. The C API and the CLI map
// these onto stable status/exit codes, so the kind of a failure must be
// chosen deliberately:
//   usage    - the caller broke the contract (bad flag value, bad arguments)
//   input    - the data on disk is unusable (missing dir, malformed manifest)
//   internal - a bug or an environmental failure (I/O error mid-write, ...)
enum class ErrorKind { usage = 1, input = 2, internal = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise_usage(std::string msg) {
    throw Error(ErrorKind::usage, std::move(msg));
}
[[noreturn]] inline void raise_input(std::string msg) {
    throw Error(ErrorKind::input, std::move(msg));
}
[[noreturn]] inline void raise_internal(std::string msg) {
    throw Error(ErrorKind::internal, std::move(msg));
}

} // namespace ckmet
