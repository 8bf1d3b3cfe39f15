#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace pomlog {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- validation

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The closure of a relation is not irreflexive; `event` lies on a cycle.
class CycleError : public ValidationError {
 public:
  CycleError(std::string relation, std::string event);
  const std::string& relation() const noexcept { return relation_; }
  const std::string& event() const noexcept { return event_; }

 private:
  std::string relation_, event_;
};

/// Two distinct events are unrelated by both orders.
class TotalityError : public ValidationError {
 public:
  TotalityError(std::string x, std::string y);
  const std::string& first() const noexcept { return x_; }
  const std::string& second() const noexcept { return y_; }

 private:
  std::string x_, y_;
};

/// Precedence contains a 2+2: a < b, c < d, a !< d, c !< b.
class IntervalError : public ValidationError {
 public:
  explicit IntervalError(std::array<std::string, 4> witness);
  const std::array<std::string, 4>& witness() const noexcept { return witness_; }

 private:
  std::array<std::string, 4> witness_;
};

/// An interface member is not minimal (start) or not maximal (term).
class InterfaceError : public ValidationError {
 public:
  InterfaceError(std::string event, bool start_side);
  const std::string& event() const noexcept { return event_; }
  bool start_side() const noexcept { return start_side_; }

 private:
  std::string event_;
  bool start_side_;
};

// ------------------------------------------------------------------- gluing

class InterfaceMismatch : public Error {
 public:
  using Error::Error;
};

class AmbiguousIdentification : public Error {
 public:
  using Error::Error;
};

// ------------------------------------------------------------ decomposition

class NotCoherent : public Error {
 public:
  explicit NotCoherent(std::size_t index);
  /// Position of the first letter whose start interface does not match.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class EmptyPomset : public Error {
 public:
  EmptyPomset();
};

class NotWellFormed : public Error {
 public:
  explicit NotWellFormed(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// ---------------------------------------------------------------- concstates

class InvalidConcstate : public Error {
 public:
  using Error::Error;
};

class FinalState : public Error {
 public:
  FinalState();
};

class HostMismatch : public Error {
 public:
  HostMismatch();
};

// ------------------------------------------------------------------- syntax

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ScopeError : public Error {
 public:
  using Error::Error;
};

class AlphabetError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------- semantics

class UnboundVar : public Error {
 public:
  explicit UnboundVar(const std::string& var);
};

class SlotOutOfRange : public Error {
 public:
  using Error::Error;
};

class NoSuchEvent : public Error {
 public:
  explicit NoSuchEvent(const std::string& id);
};

// ------------------------------------------------------- translate / harness

class FreeVariables : public Error {
 public:
  using Error::Error;
};

class IncompatibleLogics : public Error {
 public:
  using Error::Error;
};

}  // namespace pomlog
