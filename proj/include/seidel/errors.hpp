#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seidel {

/// Base for every input-validation failure on graphs and vertex data.
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class InvalidOrder : public GraphError {
public:
  using GraphError::GraphError;
};

class VertexOutOfRange : public GraphError {
public:
  using GraphError::GraphError;
};

class DuplicateEdge : public GraphError {
public:
  using GraphError::GraphError;
};

class SelfLoop : public GraphError {
public:
  using GraphError::GraphError;
};

class LengthMismatch : public GraphError {
public:
  using GraphError::GraphError;
};

/// A vector that was required to have no zero entries has one.
class ZeroComponent : public GraphError {
public:
  using GraphError::GraphError;
};

/// An operation was asked to work above its hard size limit
/// (isomorphism search, exhaustive enumeration).
class CapacityError : public std::length_error {
public:
  CapacityError(const std::string& what, std::size_t requested, std::size_t limit)
      : std::length_error(what), requested_(requested), limit_(limit) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

private:
  std::size_t requested_;
  std::size_t limit_;
};

/// Parameters outside the range where the extremal theory applies.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Edge-list text that does not follow the format. Line numbers are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// The Jacobi iteration hit its sweep cap.
class NonConvergence : public std::runtime_error {
public:
  NonConvergence(const std::string& what, double off_norm)
      : std::runtime_error(what), off_norm_(off_norm) {}

  double off_norm() const noexcept { return off_norm_; }

private:
  double off_norm_;
};

/// A proven-by-theory property failed numerically (e.g. a root bracket that
/// must exist does not).
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace seidel
