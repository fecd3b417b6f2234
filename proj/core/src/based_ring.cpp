#include "equik/based_ring.hpp"

#include <charconv>

#include <nlohmann/json.hpp>

#include "equik/error.hpp"
#include "equik/json_io.hpp"

namespace equik {

BasedRing::BasedRing(Kind kind, std::string name, std::vector<std::string> labels, IntVector dims,
                     std::vector<std::vector<Term>> products)
    : kind_(kind),
      name_(std::move(name)),
      labels_(std::move(labels)),
      dims_(std::move(dims)),
      products_(std::move(products)) {
  validate();
}

Integer BasedRing::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& term : product(i, j)) {
    if (term.index == k) return term.coefficient;
  }
  return 0;
}

void BasedRing::validate() const {
  const std::size_t r = labels_.size();
  if (r == 0) throw AxiomViolation("nonempty basis", {});
  if (dims_.size() != r) throw AxiomViolation("shape (dims length)", {dims_.size()});
  if (products_.size() != r * r) throw AxiomViolation("shape (fusion table size)", {products_.size()});

  // Dense copy for the axiom scans.
  std::vector<Integer> n(r * r * r);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Integer& { return n[(i * r + j) * r + k]; };
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (const auto& term : product(i, j)) {
        if (term.index >= r) throw AxiomViolation("shape (basis index out of range)", {i, j, term.index});
        if (kind_ == Kind::fusion && term.coefficient < 0) {
          throw AxiomViolation("nonnegativity", {i, j, term.index});
        }
        at(i, j, term.index) += term.coefficient;
      }
    }
  }

  if (kind_ == Kind::fusion) {
    for (std::size_t i = 0; i < r; ++i) {
      if (dims_[i] <= 0) throw AxiomViolation("positive dimensions", {i});
    }
  }
  if (dims_[0] != 1) throw AxiomViolation("unit dimension", {0});

  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      if (at(0, j, k) != (j == k ? 1 : 0)) throw AxiomViolation("unit law", {0, j, k});
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        if (at(i, j, k) != at(j, i, k)) throw AxiomViolation("commutativity", {i, j, k});
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Integer total = 0;
      for (std::size_t k = 0; k < r; ++k) total += at(i, j, k) * dims_[k];
      if (total != dims_[i] * dims_[j]) throw AxiomViolation("dimension homomorphism", {i, j});
    }
  }
  // (e_i e_j) e_k == e_i (e_j e_k), compared coefficient by coefficient.
  Integer lhs, rhs;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t l = 0; l < r; ++l) {
          lhs = 0;
          rhs = 0;
          for (std::size_t m = 0; m < r; ++m) {
            if (sgn(at(i, j, m)) != 0) lhs += at(i, j, m) * at(m, k, l);
            if (sgn(at(j, k, m)) != 0) rhs += at(j, k, m) * at(i, m, l);
          }
          if (lhs != rhs) throw AxiomViolation("associativity", {i, j, k, l});
        }
      }
    }
  }
}

RingElement BasedRing::basis(std::size_t i) const {
  RingElement e = zero();
  e.coefficients.at(i) = 1;
  return e;
}

IntMatrix BasedRing::multiplication_matrix(const RingElement& a) const {
  if (a.coefficients.size() != rank()) throw InvalidArgument("ring element length does not match ring rank");
  IntMatrix m(rank(), rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    for (std::size_t j = 0; j < rank(); ++j) {
      const Integer& c = a.coefficients[j];
      if (sgn(c) == 0) continue;
      for (const auto& term : product(k, j)) m(k, term.index) += c * term.coefficient;
    }
  }
  return m;
}

Integer BasedRing::augmentation(const RingElement& a) const {
  if (a.coefficients.size() != rank()) throw InvalidArgument("ring element length does not match ring rank");
  Integer out = 0;
  for (std::size_t i = 0; i < rank(); ++i) out += a.coefficients[i] * dims_[i];
  return out;
}

bool BasedRing::same_structure(const BasedRing& other) const {
  if (this == &other) return true;
  if (rank() != other.rank() || dims_ != other.dims_) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) {
      for (std::size_t k = 0; k < rank(); ++k) {
        if (structure_constant(i, j, k) != other.structure_constant(i, j, k)) return false;
      }
    }
  }
  return true;
}

RingElement multiply(const BasedRing& ring, const RingElement& a, const RingElement& b) {
  const std::size_t r = ring.rank();
  if (a.coefficients.size() != r || b.coefficients.size() != r) {
    throw InvalidArgument("ring element length does not match ring rank " + std::to_string(r));
  }
  RingElement out = ring.zero();
  for (std::size_t i = 0; i < r; ++i) {
    if (sgn(a.coefficients[i]) == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (sgn(b.coefficients[j]) == 0) continue;
      const Integer ab = a.coefficients[i] * b.coefficients[j];
      for (const auto& term : ring.product(i, j)) out.coefficients[term.index] += ab * term.coefficient;
    }
  }
  return out;
}

RingElement add(const RingElement& a, const RingElement& b) {
  if (a.coefficients.size() != b.coefficients.size()) throw InvalidArgument("ring element length mismatch");
  RingElement out = a;
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) out.coefficients[i] += b.coefficients[i];
  return out;
}

RingElement subtract(const RingElement& a, const RingElement& b) {
  if (a.coefficients.size() != b.coefficients.size()) throw InvalidArgument("ring element length mismatch");
  RingElement out = a;
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) out.coefficients[i] -= b.coefficients[i];
  return out;
}

RingElement power(const BasedRing& ring, const RingElement& a, std::size_t n) {
  RingElement out = ring.unit();
  for (std::size_t i = 0; i < n; ++i) out = multiply(ring, out, a);
  return out;
}

RingRef cyclic_ring(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "chi" : "chi^" + std::to_string(i));
  }
  std::vector<std::vector<BasedRing::Term>> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) products[i * n + j].push_back({(i + j) % n, 1});
  }
  return std::make_shared<const BasedRing>(BasedRing::Kind::fusion, "z" + std::to_string(n), std::move(labels),
                                           IntVector(n, 1), std::move(products));
}

RingRef product_ring(const RingRef& a, const RingRef& b) {
  const std::size_t ra = a->rank();
  const std::size_t rb = b->rank();
  const std::size_t r = ra * rb;
  std::vector<std::string> labels;
  IntVector dims;
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < rb; ++j) {
      labels.push_back("(" + a->labels()[i] + "," + b->labels()[j] + ")");
      dims.push_back(a->dims()[i] * b->dims()[j]);
    }
  }
  std::vector<std::vector<BasedRing::Term>> products(r * r);
  for (std::size_t i1 = 0; i1 < ra; ++i1) {
    for (std::size_t j1 = 0; j1 < rb; ++j1) {
      for (std::size_t i2 = 0; i2 < ra; ++i2) {
        for (std::size_t j2 = 0; j2 < rb; ++j2) {
          auto& out = products[(i1 * rb + j1) * r + (i2 * rb + j2)];
          for (const auto& ta : a->product(i1, i2)) {
            for (const auto& tb : b->product(j1, j2)) {
              out.push_back({ta.index * rb + tb.index, ta.coefficient * tb.coefficient});
            }
          }
        }
      }
    }
  }
  const auto kind = a->kind() == BasedRing::Kind::fusion && b->kind() == BasedRing::Kind::fusion
                        ? BasedRing::Kind::fusion
                        : BasedRing::Kind::general;
  return std::make_shared<const BasedRing>(kind, a->name() + "x" + b->name(), std::move(labels), std::move(dims),
                                           std::move(products));
}

RingRef symmetric_group_s3_ring() {
  // V (x) V = 1 + sgn + V, sgn (x) V = V, sgn (x) sgn = 1.
  using T = BasedRing::Term;
  std::vector<std::vector<T>> p(9);
  p[0 * 3 + 0] = {T{0, 1}};
  p[0 * 3 + 1] = {T{1, 1}};
  p[0 * 3 + 2] = {T{2, 1}};
  p[1 * 3 + 0] = {T{1, 1}};
  p[1 * 3 + 1] = {T{0, 1}};
  p[1 * 3 + 2] = {T{2, 1}};
  p[2 * 3 + 0] = {T{2, 1}};
  p[2 * 3 + 1] = {T{2, 1}};
  p[2 * 3 + 2] = {T{0, 1}, T{1, 1}, T{2, 1}};
  return std::make_shared<const BasedRing>(BasedRing::Kind::fusion, "s3", std::vector<std::string>{"1", "sgn", "V"},
                                           IntVector{1, 1, 2}, std::move(p));
}

RingRef fusion_ring_from_json(const nlohmann::json& j, std::string name) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("dims") || !j.contains("fusion")) {
    throw InvalidArgument("fusion table needs fields 'labels', 'dims', 'fusion'");
  }
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels")) {
    if (!l.is_string()) throw InvalidArgument("fusion labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const std::size_t r = labels.size();
  IntVector dims;
  for (const auto& d : j.at("dims")) dims.push_back(json_integer(d, "dims"));
  const auto& fusion = j.at("fusion");
  if (!fusion.is_array() || fusion.size() != r) throw AxiomViolation("shape (fusion rows)", {fusion.size()});
  std::vector<std::vector<BasedRing::Term>> products(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!fusion[i].is_array() || fusion[i].size() != r) throw AxiomViolation("shape (fusion columns)", {i});
    for (std::size_t k = 0; k < r; ++k) {
      for (const auto& pair : fusion[i][k]) {
        if (!pair.is_array() || pair.size() != 2) throw InvalidArgument("fusion entries must be [k, multiplicity] pairs");
        products[i * r + k].push_back({json_size(pair[0], "fusion index"), json_integer(pair[1], "multiplicity")});
      }
    }
  }
  return std::make_shared<const BasedRing>(BasedRing::Kind::fusion, std::move(name), std::move(labels),
                                           std::move(dims), std::move(products));
}

RingRef from_fusion_file(const std::filesystem::path& path) {
  return fusion_ring_from_json(read_json_file(path, "fusion file"), "file:" + path.string());
}

nlohmann::json fusion_ring_to_json(const BasedRing& ring) {
  nlohmann::json j;
  j["labels"] = ring.labels();
  j["dims"] = nlohmann::json::array();
  for (const auto& d : ring.dims()) j["dims"].push_back(d.get_str());
  j["fusion"] = nlohmann::json::array();
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < ring.rank(); ++k) {
      nlohmann::json cell = nlohmann::json::array();
      for (const auto& t : ring.product(i, k)) {
        cell.push_back({std::to_string(t.index), t.coefficient.get_str()});
      }
      row.push_back(cell);
    }
    j["fusion"].push_back(row);
  }
  return j;
}

CircleRingTruncation::CircleRingTruncation(std::size_t order) : order_(order) {
  if (order == 0) throw InvalidArgument("circle truncation order must be positive");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "l" : "l^" + std::to_string(i));
  }
  IntVector dims(order);
  dims[0] = 1;
  std::vector<std::vector<BasedRing::Term>> products(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; i + j < order; ++j) products[i * order + j].push_back({i + j, 1});
  }
  ring_ = std::make_shared<const BasedRing>(BasedRing::Kind::circle, "circle:" + std::to_string(order),
                                            std::move(labels), std::move(dims), std::move(products));
}

RingElement CircleRingTruncation::multiply(const RingElement& a, const RingElement& b) const {
  return equik::multiply(*ring_, a, b);
}

RingElement CircleRingTruncation::t() const {
  RingElement out = ring_->unit();
  if (order_ > 1) out.coefficients[1] = -1;
  return out;
}

RingElement CircleRingTruncation::t_inverse() const {
  return {IntVector(order_, 1)};
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view tag) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidArgument("bad number in ring tag '" + std::string(tag) + "'");
  }
  return value;
}

RingRef single_ring(std::string_view part, std::string_view tag) {
  if (part == "s3") return symmetric_group_s3_ring();
  if (part.starts_with("z")) return cyclic_ring(parse_count(part.substr(1), tag));
  if (part.starts_with("circle:")) return CircleRingTruncation(parse_count(part.substr(7), tag)).ring();
  throw Unsupported("unknown group tag '" + std::string(part) + "' (expected z<n>, s3, circle:<n>, or products with x)");
}

}  // namespace

RingRef ring_from_tag(std::string_view tag) {
  if (tag.starts_with("file:")) return from_fusion_file(std::string(tag.substr(5)));
  RingRef out;
  std::string_view rest = tag;
  while (true) {
    const std::size_t x = rest.find('x');
    RingRef factor = single_ring(rest.substr(0, x), tag);
    out = out ? product_ring(out, factor) : factor;
    if (x == std::string_view::npos) break;
    rest.remove_prefix(x + 1);
  }
  return out;
}

}  // namespace equik
