#pragma once

#include "toricflow/lattice.hpp"

#include <cstddef>
#include <vector>

namespace toricflow {

/// Hard limit of the Fourier-Motzkin engine.
inline constexpr std::size_t kMaxConeRank = 4;

/// A face of a cone, described by indices into the parent's rays and facet
/// normals. Faces do not own the parent.
struct Face {
  std::vector<std::size_t> rays;
  std::vector<std::size_t> saturated_normals;
  std::size_t dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Full-dimensional pointed rational polyhedral cone, stored in double
/// description: extreme rays (on `side`) and facet normals (on the opposite
/// side), both primitive and in canonical order.
class Cone {
public:
  /// Computes facet normals by Fourier-Motzkin elimination of the
  /// coefficients in x = sum lambda_j r_j, lambda >= 0. Non-extreme,
  /// duplicate and zero generators are dropped.
  static Cone from_rays(const std::vector<LatticeVector>& rays, std::size_t rank, Side side);

  Side side() const { return side_; }
  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& facet_normals() const { return normals_; }

  Cone dual() const;
  std::vector<Face> facets() const;
  bool contains(const LatticeVector& v) const;
  bool in_interior(const LatticeVector& v) const;

  /// Face cut out by the hyperplane {l = 0}; l must be nonnegative on the cone.
  Face zero_face(const LatticeVector& l) const;

  /// Index of the ray of this cone equal to primitive(v), or npos.
  std::size_t find_ray(const LatticeVector& v) const;

  friend bool operator==(const Cone&, const Cone&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  Cone(Side side, std::size_t rank, std::vector<LatticeVector> rays,
       std::vector<LatticeVector> normals)
      : side_(side), rank_(rank), rays_(std::move(rays)), normals_(std::move(normals)) {}

  void require_dual_side(const LatticeVector& v) const;
  void require_own_side(const LatticeVector& v) const;

  Side side_ = Side::M;
  std::size_t rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> normals_;
};

/// All inequalities a.x >= 0 describing cone(rays), facets and redundant
/// ones alike, as produced by the elimination (zero rows removed,
/// primitive, deduplicated). Exposed for testing the engine directly.
std::vector<LatticeVector> fourier_motzkin_inequalities(const std::vector<LatticeVector>& rays,
                                                        std::size_t rank, Side side);

}  // namespace toricflow
