#ifndef HCW_ERROR_HPP
#define HCW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hcw
{

// Base class of every error raised by the library. The CLI maps
// InvariantViolation to exit code 1 and everything else to exit code 2.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (cycle strings, JSON documents).
class ParseError : public Error
{
public:
  using Error::Error;
};

// Well-formed input violating a precondition (non-normal subgroup, bad
// automorphism, missing record, ...).
class ValidationError : public Error
{
public:
  using Error::Error;
};

// Enumeration or table size bound exceeded.
class CapacityError : public Error
{
public:
  using Error::Error;
};

// A lemma's hypotheses do not hold for the supplied data.
class HypothesisViolation : public Error
{
public:
  using Error::Error;
};

// An identity that is a theorem failed; always an implementation bug or
// inconsistent input data.
class InvariantViolation : public Error
{
public:
  using Error::Error;
};

} // namespace hcw

#endif // HCW_ERROR_HPP
