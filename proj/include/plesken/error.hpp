#ifndef PLESKEN_ERROR_HPP
#define PLESKEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace plesken {

// Base class for every failure the library reports deliberately.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad rational literal, bad cycle word, bad file shape.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// A documented precondition was violated by the caller.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A configured cap (element count, factor degree) was exceeded.
class ResourceError : public Error {
public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

// Residual polynomial degree above the configured factorization bound.
class UnsupportedDegreeError : public Error {
public:
  explicit UnsupportedDegreeError(const std::string& what) : Error(what) {}
};

// A group-algebra element that was expected to lie in the hat span does not.
class NotInSpanError : public Error {
public:
  explicit NotInSpanError(const std::string& what) : Error(what) {}
};

// A claimed homomorphism failed verification; the message names a witness pair.
class NotAHomomorphismError : public Error {
public:
  explicit NotAHomomorphismError(const std::string& what) : Error(what) {}
};

// Generator matrices that do not extend to a representation of the group.
class InvalidRepresentationError : public Error {
public:
  explicit InvalidRepresentationError(const std::string& what) : Error(what) {}
};

} // namespace plesken

#endif
