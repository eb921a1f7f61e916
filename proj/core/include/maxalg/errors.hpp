#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

// mu(A) > 1 where a Kleene star was requested.
class SpectralRadiusError : public Error {
 public:
  SpectralRadiusError(const std::string& what, double mu) : Error(what), mu_(mu) {}
  double mu() const { return mu_; }

 private:
  double mu_;
};

// The digraph has no circuit, so mu(A) is undefined.
class NoCircuitError : public Error {
 public:
  using Error::Error;
};

// Operation requires an irreducible matrix; carries the SCC partition as diagnosis.
class IrreducibilityError : public Error {
 public:
  IrreducibilityError(const std::string& what, std::vector<std::vector<std::size_t>> components)
      : Error(what), components_(std::move(components)) {}
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }

 private:
  std::vector<std::vector<std::size_t>> components_;
};

// Circuit enumeration hit its cap; results would be incomplete.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::size_t cap) : Error(what), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// A structural guarantee failed; signals a bug or a broken construction.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace maxalg
