#pragma once

#include <stdexcept>
#include <string>

namespace targetctl {

// Bad user input: malformed files, out-of-range vertices, empty sets where
// a nonempty one is required. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant (e.g. a zero-pattern law violated by our own
// arithmetic). Never the user's fault.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Rejection sampling exhausted its retry cap.
class SamplingError : public std::runtime_error {
public:
    explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace targetctl
