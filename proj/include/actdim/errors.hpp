#ifndef ACTDIM_ERRORS_HPP
#define ACTDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace actdim {

/// A caller-supplied input violates a documented precondition.
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (e.g. a boundary of a boundary is
/// nonzero). Always a bug or a broken invariant, never bad input.
class InternalError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

inline void check_internal(bool ok, const std::string& what)
{
    if (!ok)
        throw InternalError(what);
}

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InputError(what);
}

}  // namespace actdim

#endif
