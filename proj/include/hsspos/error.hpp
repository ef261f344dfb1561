#ifndef HSSPOS_ERROR_HPP
#define HSSPOS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hsspos {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unsupported family/rank, malformed space identifier, out-of-range parameter.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Caller passed a value outside an operation's precondition.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A computed structure failed one of its own invariants.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace hsspos

#endif
