#pragma once

#include <stdexcept>
#include <string>

namespace relmech {

//! Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SpeedNotSubluminal : public Error {
 public:
  explicit SpeedNotSubluminal(const std::string& what) : Error(what) {}
};

class NotTimelike : public Error {
 public:
  explicit NotTimelike(const std::string& what) : Error(what) {}
};

class NotLorentz : public Error {
 public:
  explicit NotLorentz(const std::string& what) : Error(what) {}
};

class NotNormalized : public Error {
 public:
  explicit NotNormalized(const std::string& what) : Error(what) {}
};

class OrthogonalityViolated : public Error {
 public:
  explicit OrthogonalityViolated(const std::string& what) : Error(what) {}
};

class StepRejected : public Error {
 public:
  explicit StepRejected(const std::string& what) : Error(what) {}
};

class WeakFieldViolated : public Error {
 public:
  explicit WeakFieldViolated(const std::string& what) : Error(what) {}
};

class SingularMetric : public Error {
 public:
  explicit SingularMetric(const std::string& what) : Error(what) {}
};

class NotEquatorial : public Error {
 public:
  explicit NotEquatorial(const std::string& what) : Error(what) {}
};

class InsufficientOrbits : public Error {
 public:
  explicit InsufficientOrbits(const std::string& what) : Error(what) {}
};

class ZeroDensity : public Error {
 public:
  explicit ZeroDensity(const std::string& what) : Error(what) {}
};

class ZeroInertia : public Error {
 public:
  explicit ZeroInertia(const std::string& what) : Error(what) {}
};

class SingularJacobian : public Error {
 public:
  explicit SingularJacobian(const std::string& what) : Error(what) {}
};

class TriadNotOrthonormal : public Error {
 public:
  explicit TriadNotOrthonormal(const std::string& what) : Error(what) {}
};

class DegenerateScaleFactor : public Error {
 public:
  explicit DegenerateScaleFactor(const std::string& what) : Error(what) {}
};

// Configuration-layer errors.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("parse error at line " + std::to_string(line) + ": " + reason),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class UnknownKey : public Error {
 public:
  explicit UnknownKey(const std::string& key) : Error("unknown config key: " + key) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(what) {}
};

}  // namespace relmech
