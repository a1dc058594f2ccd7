#pragma once

#include <stdexcept>
#include <string>

namespace polymod {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A face-count sequence whose alternating sum is nonzero.
class EulerViolation : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class InvalidModulus : public Error {
public:
    using Error::Error;
};

class ZeroTotal : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

// Bipyramid over a point (or any base of dimension < 1).
class DegenerateBase : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidOrder : public Error {
public:
    using Error::Error;
};

// Row sums and column sums of a square matrix do not share a common value.
class NotEqualSum : public Error {
public:
    using Error::Error;
};

class ZeroSigma : public Error {
public:
    using Error::Error;
};

// An enumerated face collection that does not form a valid f-vector.
class InconsistentFamily : public Error {
public:
    using Error::Error;
};

// Enumeration would exceed the configured size cap.
class ResourceCap : public Error {
public:
    using Error::Error;
};

} // namespace polymod
