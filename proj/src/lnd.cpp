#include "toricflow/lnd.hpp"

#include "toricflow/error.hpp"

#include <sstream>

namespace toricflow {

AlgebraElement AlgebraElement::monomial(const LatticeVector& u, const Rational& c) {
  AlgebraElement f;
  f.add_term(u, c);
  return f;
}

AlgebraElement AlgebraElement::character(const AffineMonoid& mon, const LatticeVector& u,
                                         const Rational& c) {
  if (!mon.contains(u)) {
    throw Error(ErrorKind::InvalidArgument, u.to_string() + " is not in the weight monoid");
  }
  return monomial(u, c);
}

Rational AlgebraElement::coefficient(const LatticeVector& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const LatticeVector& u, const Rational& c) {
  if (sgn(c) == 0) return;
  Rational value = c;
  value.canonicalize();
  auto [it, inserted] = terms_.emplace(u, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& g) {
  for (const auto& [u, c] : g.terms_) add_term(u, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& g) {
  for (const auto& [u, c] : g.terms_) add_term(u, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [u, coeff] : terms_) coeff *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& f, const AlgebraElement& g) {
  AlgebraElement out;
  for (const auto& [u, a] : f.terms_) {
    for (const auto& [v, b] : g.terms_) out.add_term(u + v, a * b);
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g) { return f * g; }

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*chi^" << u.to_string();
  }
  return os.str();
}

HomogeneousLND::HomogeneousLND(AffineMonoid mon, DemazureRoot root)
    : mon_(std::move(mon)), root_(std::move(root)) {
  const Cone sigma = mon_.sigma();
  const auto checked = is_root(sigma, root_.e);
  if (!checked || checked->ray != root_.ray) {
    throw Error(ErrorKind::NotARoot, root_.e.to_string() + " is not a Demazure root for ray " +
                                         std::to_string(root_.ray + 1));
  }
  ray_ = sigma.rays()[root_.ray];
  for (const auto& u : mon_.generators()) {
    if (sgn(pairing(ray_, u)) > 0 && !mon_.contains(u + root_.e)) {
      throw Error(ErrorKind::IllDefinedRoot, "generator " + u.to_string() + " shifted by " +
                                                 root_.e.to_string() + " leaves the monoid");
    }
  }
}

AlgebraElement HomogeneousLND::apply(const AlgebraElement& f) const {
  AlgebraElement out;
  for (const auto& [u, c] : f.terms()) {
    const Integer weight = pairing(ray_, u);
    if (sgn(weight) == 0) continue;
    LatticeVector v = u + root_.e;
    if (sgn(weight) < 0 || !mon_.weight_cone().contains(v)) {
      throw Error(ErrorKind::IllDefinedRoot, "term with exponent " + u.to_string() +
                                                 " is mapped outside the monoid");
    }
    out.add_term(v, c * Rational(weight));
  }
  return out;
}

AlgebraElement apply_lnd(const HomogeneousLND& d, const AlgebraElement& f) { return d.apply(f); }

std::size_t nilpotency_degree(const HomogeneousLND& d, const AlgebraElement& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "nilpotency degree of 0 is undefined");
  Integer bound = 0;
  for (const auto& [u, c] : f.terms()) {
    const Integer w = pairing(d.distinguished_ray(), u);
    if (w > bound) bound = w;
  }
  bound += 1;
  AlgebraElement g = f;
  std::size_t k = 0;
  while (!g.is_zero()) {
    g = d.apply(g);
    ++k;
    if (Integer(static_cast<unsigned long>(k)) > bound) {
      throw Error(ErrorKind::SafetyBoundExceeded,
                  "derivation did not vanish after " + bound.get_str() + " steps");
    }
  }
  return k;
}

AlgebraElement exp_flow(const HomogeneousLND& d, const Rational& s, const AlgebraElement& f) {
  AlgebraElement total = f;
  AlgebraElement term = f;
  for (unsigned long k = 1; !term.is_zero(); ++k) {
    term = d.apply(term);
    term *= s / Rational(k);
    total += term;
  }
  return total;
}

std::vector<std::size_t> kernel_generators(const HomogeneousLND& d) {
  std::vector<std::size_t> out;
  const auto& gens = d.monoid().generators();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (sgn(pairing(d.distinguished_ray(), gens[j])) == 0) out.push_back(j);
  }
  return out;
}

std::size_t kernel_rank(const HomogeneousLND& d) {
  std::vector<LatticeVector> kernel;
  for (std::size_t j : kernel_generators(d)) kernel.push_back(d.monoid().generator(j));
  return span_rank(kernel, d.monoid().rank());
}

}  // namespace toricflow
