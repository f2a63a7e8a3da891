#pragma once

#include "toricflow/cone.hpp"
#include "toricflow/lattice.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace toricflow {

/// e in M with <p_s, e> = -1 and <p_i, e> >= 0 for every other ray p_i of sigma.
struct DemazureRoot {
  LatticeVector e;
  std::size_t ray = 0;  // s, 0-based index into sigma.rays()

  friend bool operator==(const DemazureRoot&, const DemazureRoot&) = default;
};

/// Upper bound on the lattice points a single enumeration may visit.
inline constexpr std::size_t kRootSearchLimit = 20'000'000;

std::optional<DemazureRoot> is_root(const Cone& sigma, const LatticeVector& e);

/// All roots with max-norm <= box, grouped by distinguished ray and
/// lexicographically ordered within each group. For each ray the search runs
/// over the affine lattice {<p_s, e> = -1} in coordinates adapted to p_s
/// rather than over the whole box.
std::vector<DemazureRoot> roots_in_box(const Cone& sigma, long box,
                                       std::optional<std::size_t> ray = std::nullopt);

/// (|R_s ∩ box1|, |R_s ∩ box2|); refused in rank 1, where R_s is finite.
std::pair<std::size_t, std::size_t> root_growth_witness(const Cone& sigma, std::size_t ray,
                                                        long box1, long box2);

/// Least root of R_s in enumeration order, searching boxes 5, 10, 20, ...
DemazureRoot first_root(const Cone& sigma, std::size_t ray, long start_box = 5);

}  // namespace toricflow
