#include "equik/join_topology.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <sstream>

#include "equik/error.hpp"
#include "equik/normal_forms.hpp"

namespace equik {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
      throw InvalidArgument("join rank " + std::to_string(base) + "^" + std::to_string(exp) + " overflows");
    }
    out *= base;
  }
  return out;
}

}  // namespace

JoinComplex::JoinComplex(std::size_t set_size, std::size_t parts, std::size_t cap)
    : set_size_(set_size), parts_(parts) {
  if (set_size == 0 || parts == 0) throw InvalidArgument("join needs set size >= 1 and copies >= 1");
  std::size_t top = 1;
  for (std::size_t i = 0; i < parts; ++i) {
    top *= set_size;
    if (top > cap) {
      throw CapExceeded("join has more than " + std::to_string(cap) + " top faces (N^k = " +
                        std::to_string(set_size) + "^" + std::to_string(parts) + ")");
    }
  }
  faces_.resize(parts);
  const auto n = static_cast<std::uint32_t>(set_size);
  const auto k = static_cast<std::uint32_t>(parts);
  Face current;
  // Depth-first over the next vertex; emitting on entry gives lexicographic
  // order within each dimension.
  auto extend = [&](auto&& self, std::uint32_t first_part) -> void {
    for (std::uint32_t p = first_part; p < k; ++p) {
      for (std::uint32_t e = 0; e < n; ++e) {
        current.push_back(p * n + e);
        faces_[current.size() - 1].push_back(current);
        self(self, p + 1);
        current.pop_back();
      }
    }
  };
  extend(extend, 0);
}

JoinComplex build_join_complex(std::size_t set_size, std::size_t parts) { return JoinComplex(set_size, parts); }

ChainComplex boundary_matrices(const JoinComplex& complex) {
  ChainComplex out;
  for (std::size_t d = 0; d <= complex.dimension(); ++d) out.ranks.push_back(complex.face_count(d));
  for (std::size_t d = 1; d <= complex.dimension(); ++d) {
    const auto& faces = complex.faces(d);
    const auto& lower = complex.faces(d - 1);
    IntMatrix b(faces.size(), lower.size());
    JoinComplex::Face facet;
    for (std::size_t row = 0; row < faces.size(); ++row) {
      for (std::size_t i = 0; i <= d; ++i) {
        facet = faces[row];
        facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
        const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
        b(row, static_cast<std::size_t>(it - lower.begin())) = (i % 2 == 0) ? 1 : -1;
      }
    }
    out.boundaries.push_back(std::move(b));
  }
  return out;
}

const FgAbelianGroup& BettiTable::at(std::size_t d) const {
  static const FgAbelianGroup trivial{};
  return d < reduced.size() ? reduced[d] : trivial;
}

BettiTable reduced_homology(const ChainComplex& chains) {
  const std::size_t top = chains.ranks.size();
  if (top == 0) return {};
  // maps[d] : C_d -> C_{d-1}, with maps[0] the augmentation C_0 -> Z.
  std::vector<const IntMatrix*> maps;
  IntMatrix augmentation(chains.ranks[0], 1, std::vector<Integer>(chains.ranks[0], Integer(1)));
  maps.push_back(&augmentation);
  for (const auto& b : chains.boundaries) maps.push_back(&b);

  // Degrees are independent; results are collected in degree order.
  std::vector<std::future<IntVector>> pending;
  for (const IntMatrix* m : maps) {
    pending.push_back(std::async(std::launch::async, [m] { return smith_invariants(*m); }));
  }
  std::vector<IntVector> invariants;
  for (auto& f : pending) invariants.push_back(f.get());

  BettiTable table;
  for (std::size_t d = 0; d < top; ++d) {
    const std::size_t rank_out = invariants[d].size();
    const std::size_t rank_in = d + 1 < top ? invariants[d + 1].size() : 0;
    IntVector torsion;
    if (d + 1 < top) {
      for (const auto& x : invariants[d + 1]) {
        if (x > 1) torsion.push_back(x);
      }
    }
    table.reduced.push_back({chains.ranks[d] - rank_out - rank_in, torsion});
  }
  return table;
}

KTheoryRanks join_step_formula(std::size_t l, std::size_t r, std::size_t set_size) {
  if (l == 0) throw InvalidArgument("join step needs rank K^0 >= 1 (X nonempty)");
  if (set_size == 0) throw InvalidArgument("join step needs a nonempty set");
  return {r * (set_size - 1) + 1, (l - 1) * (set_size - 1)};
}

KTheoryRanks join_k_theory_formula(std::size_t set_size, std::size_t copies) {
  if (set_size == 0 || copies == 0) throw InvalidArgument("join K-theory needs set size >= 1 and copies >= 1");
  const std::size_t wedge = checked_power(set_size - 1, copies);
  if (copies % 2 == 1) return {wedge + 1, 0};
  return {1, wedge};
}

MayerVietorisDelta mayer_vietoris_delta(std::size_t l, std::size_t set_size) {
  if (l == 0 || set_size == 0) throw InvalidArgument("Mayer-Vietoris map needs l >= 1 and N >= 1");
  const std::size_t n = set_size;
  IntMatrix delta(l + n, l * n);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      delta(i, i * n + j) = 1;
      delta(l + j, i * n + j) = -1;
    }
  }
  MayerVietorisDelta out{delta, kernel_basis(delta).rows(), normalize({l * n, delta})};
  return out;
}

IntMatrix mayer_vietoris_delta1(std::size_t r, std::size_t set_size) {
  IntMatrix delta(r, r * set_size);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < set_size; ++j) delta(i, i * set_size + j) = 1;
  }
  return delta;
}

KTheoryRanks join_step_via_mayer_vietoris(std::size_t l, std::size_t r, std::size_t set_size) {
  const MayerVietorisDelta d0 = mayer_vietoris_delta(l, set_size);
  const IntMatrix d1 = mayer_vietoris_delta1(r, set_size);
  const FgAbelianGroup coker1 = normalize({d1.cols(), d1});
  const std::size_t ker1 = kernel_basis(d1).rows();
  if (!d0.cokernel.is_torsion_free() || !coker1.is_torsion_free()) {
    throw Error("Mayer-Vietoris cokernel has torsion; the join step needs free groups");
  }
  return {coker1.free_rank + d0.kernel_rank, d0.cokernel.free_rank + ker1};
}

OracleReport oracle_consistency(std::size_t set_size, std::size_t copies) {
  OracleReport report;
  report.formula = join_k_theory_formula(set_size, copies);
  report.homology = reduced_homology(boundary_matrices(JoinComplex(set_size, copies)));
  report.from_homology.k0_rank = 1;
  for (std::size_t d = 0; d < report.homology.reduced.size(); ++d) {
    const auto& h = report.homology.reduced[d];
    if (!h.is_torsion_free()) report.torsion_free = false;
    (d % 2 == 0 ? report.from_homology.k0_rank : report.from_homology.k1_rank) += h.free_rank;
  }
  report.consistent = report.torsion_free && report.formula == report.from_homology;
  return report;
}

bool is_sphere_homology(const BettiTable& table, std::size_t dim) {
  for (std::size_t d = 0; d < std::max(table.reduced.size(), dim + 1); ++d) {
    const FgAbelianGroup expected = d == dim ? FgAbelianGroup::free(1) : FgAbelianGroup{};
    if (table.at(d) != expected) return false;
  }
  return true;
}

std::string render_homology(const BettiTable& table) {
  std::ostringstream os;
  for (std::size_t d = 0; d < table.reduced.size(); ++d) {
    os << "H~_" << d << " = " << render(table.reduced[d]) << '\n';
  }
  return os.str();
}

}  // namespace equik
