#ifndef SDC_ERRORS_HPP_
#define SDC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sdc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (PDA files, matrix files, blobs).
class ParseError : public Error {
public:
    using Error::Error;
};

// A structural condition on the data failed (PDA conditions, matrix rank).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Parameters are inconsistent with the scheme preconditions.
class ConfigError : public Error {
public:
    using Error::Error;
};

// The protocol could not complete (missing transmissions, bad dimensions).
class ProtocolError : public Error {
public:
    using Error::Error;
};

} // namespace sdc

#endif
