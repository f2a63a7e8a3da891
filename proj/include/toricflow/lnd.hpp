#pragma once

#include "toricflow/cone.hpp"
#include "toricflow/demazure.hpp"
#include "toricflow/lattice.hpp"
#include "toricflow/monoid.hpp"

#include <cstddef>
#include <map>
#include <string>

namespace toricflow {

/// Element of the semigroup algebra Q[M_X]: finite sum of c_u χ^u with
/// nonzero rational coefficients, keyed by exponent.
class AlgebraElement {
public:
  using Terms = std::map<LatticeVector, Rational>;

  AlgebraElement() = default;
  static AlgebraElement monomial(const LatticeVector& u, const Rational& c = 1);
  /// As monomial(), but rejects exponents outside the monoid.
  static AlgebraElement character(const AffineMonoid& mon, const LatticeVector& u,
                                  const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const LatticeVector& u) const;

  void add_term(const LatticeVector& u, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& g);
  AlgebraElement& operator-=(const AlgebraElement& g);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement f, const AlgebraElement& g) { return f += g; }
  friend AlgebraElement operator-(AlgebraElement f, const AlgebraElement& g) { return f -= g; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement f) { return f *= c; }
  friend AlgebraElement operator*(const AlgebraElement& f, const AlgebraElement& g);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string to_string() const;  // "2*chi^(1,1) + 1/3*chi^(0,2)"

private:
  Terms terms_;
};

AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g);

/// Homogeneous locally nilpotent derivation attached to a Demazure root:
/// δ(χ^u) = <p_s, u> χ^{u+e}. This is the regular form of ∂/∂T on the
/// localization, so no denominator needs clearing.
class HomogeneousLND {
public:
  /// Checks on the generators that u + e stays in the monoid whenever
  /// <p_s, u> > 0; sums of admissible exponents stay admissible, so this
  /// covers the whole monoid.
  HomogeneousLND(AffineMonoid mon, DemazureRoot root);

  const AffineMonoid& monoid() const { return mon_; }
  const DemazureRoot& root() const { return root_; }
  const LatticeVector& distinguished_ray() const { return ray_; }

  AlgebraElement apply(const AlgebraElement& f) const;

private:
  AffineMonoid mon_;
  DemazureRoot root_;
  LatticeVector ray_;
};

AlgebraElement apply_lnd(const HomogeneousLND& d, const AlgebraElement& f);

/// Least k with δ^k f = 0.
std::size_t nilpotency_degree(const HomogeneousLND& d, const AlgebraElement& f);

/// exp(sδ) f = Σ_k s^k/k! δ^k f (finite).
AlgebraElement exp_flow(const HomogeneousLND& d, const Rational& s, const AlgebraElement& f);

/// Rank of the lattice spanned by the generators in ker δ.
std::size_t kernel_rank(const HomogeneousLND& d);

/// Indices of the generators u_j with <p_s, u_j> = 0; their characters
/// generate ker δ = A_0.
std::vector<std::size_t> kernel_generators(const HomogeneousLND& d);

}  // namespace toricflow
