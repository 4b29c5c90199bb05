#ifndef SPECEST_ERRORS_HPP
#define SPECEST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specest {

// Linear system could not be factorized / solved (also raised when an AR fit
// breaks down numerically).
class SingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An autocorrelation sequence is too short for the requested order.
class InsufficientLags : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A data record is too short for the requested fit.
class DataTooShort : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// WAV container uses a codec / bit depth we do not read.
class UnsupportedFormat : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// WAV container is structurally broken (bad chunks, truncated payload).
class MalformedFile : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownScenario : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace specest

#endif // SPECEST_ERRORS_HPP
