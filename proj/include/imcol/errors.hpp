#ifndef IMCOL_ERRORS_HPP
#define IMCOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace imcol {

// Rejected input: malformed file, precondition violation, out-of-range id.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant. Seeing this means a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace imcol

#endif
