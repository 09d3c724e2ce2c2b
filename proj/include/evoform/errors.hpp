#pragma once

#include <stdexcept>
#include <string>

namespace evoform {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed files, unknown names, bad argument syntax.
class ParseError : public Error {
  public:
    using Error::Error;
};

// Mathematical precondition not met (curve not strongly convex, point off sheet, ...).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

// Input outside the domain of an operation (pole of cot_c, antipodal log, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

// Sampling too coarse for a reliable answer even after refinement.
class ResolutionError : public Error {
  public:
    using Error::Error;
};

}  // namespace evoform
