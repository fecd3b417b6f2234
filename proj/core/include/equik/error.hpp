#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "equik/integer.hpp"

namespace equik {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A requested object has no built-in model (even p, unknown group, ...).
class Unsupported : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A structure-constant table fails a ring axiom. `axiom` names the law,
// `indices` is the failing index tuple.
class AxiomViolation : public InvalidArgument {
 public:
  AxiomViolation(std::string axiom, std::vector<std::size_t> indices);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  std::string axiom_;
  std::vector<std::size_t> indices_;
};

// Sublattice containment failed; `witness` is a basis vector outside the
// supposed superlattice.
class ContainmentError : public InvalidArgument {
 public:
  explicit ContainmentError(std::vector<Integer> witness);

  const std::vector<Integer>& witness() const noexcept { return witness_; }

 private:
  std::vector<Integer> witness_;
};

}  // namespace equik
