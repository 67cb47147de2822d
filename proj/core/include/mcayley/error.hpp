#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcayley {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A group table that fails one of the group laws; the message names the law
/// and a witnessing tuple.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

class NonAbelianInput : public Error {
 public:
  using Error::Error;
};

class NoSuchSet : public Error {
 public:
  using Error::Error;
};

class WrongGeneratorCount : public Error {
 public:
  using Error::Error;
};

class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

/// A request the constructions do not cover (for instance d(G) <= 2 or an
/// elementary abelian 2-group).
class OutOfScope : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class SetInvariantViolated : public Error {
 public:
  using Error::Error;
};

class UnknownWitness : public Error {
 public:
  using Error::Error;
};

/// Brute-force oracle asked to handle more vertices than it can enumerate.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class ClosureCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration hit a configured resource cap. When raised by the
/// certifier it carries the resume point.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what, std::uint64_t next_index = 0,
                       std::uint64_t partial_count = 0)
      : Error(what), next_index_(next_index), partial_count_(partial_count) {}

  std::uint64_t next_index() const noexcept { return next_index_; }
  std::uint64_t partial_count() const noexcept { return partial_count_; }

 private:
  std::uint64_t next_index_;
  std::uint64_t partial_count_;
};

}  // namespace mcayley
