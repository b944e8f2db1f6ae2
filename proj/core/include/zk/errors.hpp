#ifndef ZK_ERRORS_HPP
#define ZK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zk {

/** Base class for all errors thrown by the library. */
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidResolution : public Error {
  public:
    using Error::Error;
};
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};
class UnknownGenerator : public Error {
  public:
    using Error::Error;
};
class ResolutionOverflow : public Error {
  public:
    using Error::Error;
};
class QuadratureBudgetExceeded : public Error {
  public:
    using Error::Error;
};
class EmptyBlock : public Error {
  public:
    using Error::Error;
};
class InfeasibleOnGrid : public Error {
  public:
    using Error::Error;
};
class ExponentConstraintViolated : public Error {
  public:
    using Error::Error;
};
class UnsupportedKind : public Error {
  public:
    using Error::Error;
};
class StabilityViolation : public Error {
  public:
    using Error::Error;
};
class DealiasingOverflow : public Error {
  public:
    using Error::Error;
};
class TimeGridMismatch : public Error {
  public:
    using Error::Error;
};
class NoContraction : public Error {
  public:
    using Error::Error;
};
class IoError : public Error {
  public:
    using Error::Error;
};
class PreconditionViolation : public Error {
  public:
    using Error::Error;
};

} // namespace zk

#endif
