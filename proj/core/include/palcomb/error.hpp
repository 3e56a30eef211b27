#pragma once

#include <stdexcept>
#include <string>

namespace palcomb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a structural invariant of its type (lengths, index ranges,
// counter-array inequalities, ...).
class MalformedInput : public Error {
public:
    using Error::Error;
};

// Input is well-formed but no string realizes it.
class Unrealizable : public Error {
public:
    using Error::Error;
};

// Requested alphabet size or other parameter is outside the feasible range.
class Impossible : public Error {
public:
    using Error::Error;
};

} // namespace palcomb
