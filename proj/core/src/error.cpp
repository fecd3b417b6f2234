#include "equik/error.hpp"

#include <sstream>

namespace equik {

namespace {

std::string describe_axiom(const std::string& axiom, const std::vector<std::size_t>& indices) {
  std::ostringstream os;
  os << "fusion table violates " << axiom;
  if (!indices.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
    os << ')';
  }
  return os.str();
}

std::string describe_witness(const std::vector<Integer>& witness) {
  std::ostringstream os;
  os << "sublattice containment fails: (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i].get_str();
  os << ") is not in the larger lattice";
  return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::vector<std::size_t> indices)
    : InvalidArgument(describe_axiom(axiom, indices)), axiom_(std::move(axiom)), indices_(std::move(indices)) {}

ContainmentError::ContainmentError(std::vector<Integer> witness)
    : InvalidArgument(describe_witness(witness)), witness_(std::move(witness)) {}

}  // namespace equik
