#pragma once

#include "toricflow/cone.hpp"
#include "toricflow/lattice.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toricflow {

/// Hilbert basis enumeration refuses boxes with more lattice points than this.
inline constexpr std::size_t kHilbertBoxLimit = 2'000'000;
inline constexpr std::size_t kMaxHilbertRank = 3;

/// Weight monoid M_X given by generators u_1..u_m in M. The generator order
/// is significant: point coordinates are aligned with it.
class AffineMonoid {
public:
  /// Generators must be nonzero, pairwise distinct, M-side, of equal rank,
  /// generate the group M, and generate a pointed cone.
  explicit AffineMonoid(std::vector<LatticeVector> generators);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<LatticeVector>& generators() const { return generators_; }
  const LatticeVector& generator(std::size_t j) const { return generators_[j]; }

  /// omega(X), the cone generated by the monoid.
  const Cone& weight_cone() const { return weight_cone_; }
  /// sigma(X), dual of the weight cone in N.
  const Cone& sigma() const { return sigma_; }

  bool contains(const LatticeVector& u) const { return decompose(u).has_value(); }

  /// Nonnegative coefficients a with u = sum a_j u_j, if any exist.
  std::optional<IntVector> decompose(const LatticeVector& u) const;

  /// Integer relations among the generators, as a lattice basis.
  std::vector<IntVector> relations() const;

  friend bool operator==(const AffineMonoid& a, const AffineMonoid& b) {
    return a.generators_ == b.generators_;
  }

private:
  std::size_t rank_ = 0;
  std::vector<LatticeVector> generators_;
  Cone weight_cone_;
  Cone sigma_;
  LatticeVector grading_;  // strictly positive on every generator
};

bool monoid_membership(const AffineMonoid& mon, const LatticeVector& u);

/// Minimal generating set of c ∩ lattice, in canonical order.
std::vector<LatticeVector> hilbert_basis(const Cone& c, std::size_t box_limit = kHilbertBoxLimit);

struct SaturationResult {
  bool saturated = false;
  std::optional<LatticeVector> witness;  // in the saturation, not in the monoid
};

SaturationResult is_saturated(const AffineMonoid& mon);

/// The normal monoid omega ∩ M, generated by its Hilbert basis.
AffineMonoid saturated_monoid(const Cone& omega);

}  // namespace toricflow
