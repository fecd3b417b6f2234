#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "equik/int_matrix.hpp"

namespace equik {

// An element of a based ring, as coordinates in the distinguished Z-basis.
struct RingElement {
  IntVector coefficients;

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

// Commutative unital ring with a distinguished Z-basis e_0 = 1, e_1, ...,
// integer structure constants e_i * e_j = sum_k N_ij^k e_k, and a ring
// homomorphism to Z (the augmentation) given by its values on the basis.
//
// Representation rings R(G) enter as fusion rings: structure constants are
// tensor-product multiplicities and the augmentation is the dimension. The
// truncated circle rings R(S^1)/I(S^1)^n use the basis 1, l, l^2, ... with
// l = 1 - t. Instances are immutable and validated at construction.
class BasedRing {
 public:
  enum class Kind { fusion, circle, general };

  struct Term {
    std::size_t index;
    Integer coefficient;
  };

  // `products[i * rank + j]` lists the nonzero terms of e_i * e_j. Throws
  // AxiomViolation naming the failing law and index tuple.
  BasedRing(Kind kind, std::string name, std::vector<std::string> labels, IntVector dims,
            std::vector<std::vector<Term>> products);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Augmentation values on the basis; for fusion rings these are dimensions.
  const IntVector& dims() const noexcept { return dims_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return products_[i * rank() + j]; }
  Integer structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  RingElement unit() const { return basis(0); }
  RingElement basis(std::size_t i) const;
  RingElement zero() const { return {IntVector(rank())}; }

  // Matrix of y -> y * a in row convention: row k holds e_k * a.
  IntMatrix multiplication_matrix(const RingElement& a) const;
  Integer augmentation(const RingElement& a) const;

  // Structural equality (labels and names are not compared).
  bool same_structure(const BasedRing& other) const;

 private:
  void validate() const;

  Kind kind_;
  std::string name_;
  std::vector<std::string> labels_;
  IntVector dims_;
  std::vector<std::vector<BasedRing::Term>> products_;
};

using RingRef = std::shared_ptr<const BasedRing>;

RingElement multiply(const BasedRing& ring, const RingElement& a, const RingElement& b);
RingElement add(const RingElement& a, const RingElement& b);
RingElement subtract(const RingElement& a, const RingElement& b);
RingElement power(const BasedRing& ring, const RingElement& a, std::size_t n);

// R(Z_n): basis chi^0..chi^{n-1}, chi^i * chi^j = chi^{(i+j) mod n}.
RingRef cyclic_ring(std::size_t n);
// R(G x H) = R(G) (x) R(H); basis index i * rank(b) + j.
RingRef product_ring(const RingRef& a, const RingRef& b);
// R(S_3) with basis 1, sgn, V.
RingRef symmetric_group_s3_ring();

// Fusion-table text object: {"labels": [...], "dims": [...],
// "fusion": r x r list of lists of [k, multiplicity] pairs}. Integers may be
// decimal strings or JSON numbers.
RingRef fusion_ring_from_json(const nlohmann::json& j, std::string name = "custom");
RingRef from_fusion_file(const std::filesystem::path& path);
nlohmann::json fusion_ring_to_json(const BasedRing& ring);

// R(S^1)/I(S^1)^n in the basis l^0..l^{n-1}, l = 1 - t.
class CircleRingTruncation {
 public:
  explicit CircleRingTruncation(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  const RingRef& ring() const noexcept { return ring_; }

  RingElement multiply(const RingElement& a, const RingElement& b) const;
  // The class t = 1 - l of the standard representation, and its inverse
  // 1 + l + ... + l^{n-1}.
  RingElement t() const;
  RingElement t_inverse() const;

 private:
  std::size_t order_;
  RingRef ring_;
};

// Parses group/ring tags: "z<n>", "s3", "circle:<n>" and products joined by
// 'x' (for example "z2xz3"). Throws Unsupported for unknown tags.
RingRef ring_from_tag(std::string_view tag);

}  // namespace equik
