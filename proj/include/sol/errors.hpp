#pragma once

#include <stdexcept>
#include <string>

namespace sol {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

class NotUnimodular : public Error {
public:
  using Error::Error;
};

/// A matrix fails the sapphire / torus-bundle invariants (zero entry, bad det).
class InvalidMatrix : public Error {
public:
  using Error::Error;
};

class InvalidHom : public Error {
public:
  using Error::Error;
};

class NoPositiveRepresentative : public Error {
public:
  using Error::Error;
};

class CaseRequiresEvenS : public Error {
public:
  using Error::Error;
};

class PreconditionViolation : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace sol
