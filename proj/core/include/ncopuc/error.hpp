#pragma once

#include <stdexcept>
#include <string>

namespace ncopuc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integer overflow of a shortlex index or block size.
class SizeError : public Error {
public:
    using Error::Error;
};

// Malformed arguments: alphabet mismatch, bad letters, dimension mismatch.
class DomainError : public Error {
public:
    using Error::Error;
};

// A moment (or coefficient) outside the stored horizon was requested.
class HorizonError : public Error {
public:
    using Error::Error;
};

// The kernel block is not positive definite at the requested horizon.
class PositivityError : public Error {
public:
    using Error::Error;
};

// A postcondition that holds in exact arithmetic failed numerically.
class NumericalDegeneracy : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent input file.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace ncopuc
