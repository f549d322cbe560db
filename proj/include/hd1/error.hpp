#pragma once

#include <stdexcept>
#include <string>

namespace hd1 {

// One exception type for the whole library; `kind` tells callers (and the CLI
// exit-code mapping) what went wrong without a taxonomy of classes.
enum class errc {
    codec,         // point/index out of range
    dimension,     // mismatched or unsupported dimension
    capability,    // above a documented scan cap
    degeneracy,    // no unique answer exists (e.g. popular direction at n=2)
    structure,     // object violates a structural expectation (e.g. != 1 extra cell)
    precondition,  // operation precondition violated
    parse,         // malformed input text
    config,        // missing external configuration (e.g. solver executable)
    decode,        // solver model inconsistent with the encoding
    usage,         // bad CLI usage
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

} // namespace hd1
