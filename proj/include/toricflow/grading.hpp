#pragma once

#include "toricflow/cone.hpp"
#include "toricflow/lattice.hpp"
#include "toricflow/monoid.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toricflow {

/// How a one-parameter subgroup l acts, read off from the Z-grading
/// A_i = ⊕_{l(u)=i} A_u.
enum class GradingKind {
  Elliptic,               // l > 0 on omega \ {0}: A_0 = K
  Parabolic,              // l >= 0, zero face a facet: a divisor of fixed points
  Hyperbolic,             // l takes a negative value on omega
  DegenerateNonnegative,  // l >= 0, zero face of dimension 1..d-2
};

const char* to_string(GradingKind kind);

struct GradingClass {
  GradingKind kind = GradingKind::Hyperbolic;
  LatticeVector subgroup;
  /// Zero face of omega; set whenever l >= 0 on omega.
  std::optional<Face> zero_face;
  /// Parabolic only: index s of the ray p_s of sigma with l = k * p_s, k > 0.
  std::optional<std::size_t> fixed_divisor_ray;
  /// gcd of l(u_j) over the generators; the action is effective iff it is 1.
  Integer degree_gcd = 0;
  bool effective = false;
  /// Transcendence degree of A_0 = A(zero face); set whenever l >= 0.
  std::optional<std::size_t> invariant_trdeg;
};

GradingClass classify(const AffineMonoid& mon, const LatticeVector& l);

struct StraighteningSubtorus {
  LatticeVector subtorus;  // primitive ray p_s of sigma
  std::size_t ray = 0;     // s
  Face facet;              // facet of omega dual to p_s
};

struct StraighteningSet {
  std::vector<StraighteningSubtorus> subtori;
};

/// Requires a saturated monoid: then every facet of omega gives one.
StraighteningSet straightening_subtori(const AffineMonoid& mon);

/// The fixed-point divisor D_s of a parabolic subgroup: the locus where the
/// coordinates of weight-positive generators vanish.
struct FixedLocus {
  std::size_t ray = 0;
  std::vector<std::size_t> vanishing;  // generator indices j with <p_s, u_j> > 0
  std::vector<std::size_t> free;       // generator indices j with <p_s, u_j> = 0

  std::string describe() const;  // "x1 = 0" style, 1-based coordinate names
};

FixedLocus fixed_locus(const AffineMonoid& mon, const LatticeVector& l);

}  // namespace toricflow
