#pragma once

#include <stdexcept>
#include <string>

namespace tenfold {

enum class errc {
    parse,             // malformed input text
    inconsistent_spec, // symmetry data violates a consistency rule
    precondition,      // caller violated a documented precondition
    gapless,           // spectrum touches the declared gap
    step_too_large,    // loop sampling too coarse for a well-defined winding
    not_involution,    // claimed involution does not square to +1
    not_odd,           // operator fails to anticommute with the grading
    invalid_sample,    // a family sample is not a valid grading
    numeric,           // numerical separation/rank extraction failed
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace tenfold
