#pragma once

#include "toricflow/demazure.hpp"
#include "toricflow/grading.hpp"
#include "toricflow/lattice.hpp"
#include "toricflow/lnd.hpp"
#include "toricflow/monoid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricflow {

enum class Provenance { TorusPoint, GmImage, FlowImage, LimitImage };

const char* to_string(Provenance p);

/// Point of X in the embedding x_j = χ^{u_j}(x) given by the monoid
/// generators.
struct ToricPoint {
  std::vector<Rational> coords;
  Provenance provenance = Provenance::TorusPoint;

  bool on_torus() const;
  std::string to_string() const;  // "(3,0,1/2)"

  /// Coordinates only; provenance is bookkeeping.
  friend bool operator==(const ToricPoint& a, const ToricPoint& b) { return a.coords == b.coords; }
};

Rational rational_power(const Rational& base, const Integer& exponent);

ToricPoint torus_point(const AffineMonoid& mon, const std::vector<Rational>& t);

/// Coordinates scale by t^{l(u_j)}.
ToricPoint gm_scale(const AffineMonoid& mon, const LatticeVector& l, const Rational& t,
                    const ToricPoint& x);

/// lim_{t -> 0} t.x, when it exists.
std::optional<ToricPoint> limit_point(const AffineMonoid& mon, const LatticeVector& l,
                                      const ToricPoint& x);

/// Value of f at x, writing each exponent as a monoid combination of the
/// generators.
Rational evaluate(const AffineMonoid& mon, const AlgebraElement& f, const ToricPoint& x);

/// Pullback convention: (s.x)_j = (exp(sδ) χ^{u_j})(x).
ToricPoint ga_flow_point(const HomogeneousLND& d, const Rational& s, const ToricPoint& x);

/// Every binomial of the relation lattice holds at x.
bool satisfies_relations(const AffineMonoid& mon, const ToricPoint& x);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CompatibilityReport {
  LatticeVector subgroup;
  ToricPoint point;
  std::size_t ray = 0;
  DemazureRoot root;
  std::vector<std::size_t> invariant_generators;
  ToricPoint limit;
  Rational flow_parameter;  // s with (s.x) = limit
  std::vector<Check> checks;
  bool passed = false;
};

/// End-to-end check that the Ga-action of the least root of R_s is compatible
/// with the parabolic subgroup l at the torus point x. Throws
/// NormalityRequired for non-saturated monoids and NotParabolic otherwise.
CompatibilityReport verify_compatible(const AffineMonoid& mon, const LatticeVector& l,
                                      const ToricPoint& x, const std::vector<Rational>& sample_ts,
                                      const std::vector<Rational>& sample_ss);

}  // namespace toricflow
