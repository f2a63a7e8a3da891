#include "toricflow/monoid.hpp"

#include "toricflow/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace toricflow {

namespace {

std::vector<LatticeVector> validated(std::vector<LatticeVector> gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "a monoid needs at least one generator");
  const std::size_t rank = gens.front().rank();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto& g = gens[j];
    if (g.side() != Side::M) throw Error(ErrorKind::SideMismatch, "generators live in M");
    if (g.rank() != rank) throw Error(ErrorKind::RankMismatch, "generator " + g.to_string());
    if (g.is_zero()) throw Error(ErrorKind::ZeroVector, "generator " + std::to_string(j + 1) + " is zero");
    for (std::size_t i = 0; i < j; ++i) {
      if (gens[i] == g) throw Error(ErrorKind::InvalidArgument, "repeated generator " + g.to_string());
    }
  }
  return gens;
}

LatticeVector sum_of(const std::vector<LatticeVector>& vs) {
  LatticeVector total = vs.front();
  for (std::size_t i = 1; i < vs.size(); ++i) total += vs[i];
  return total;
}

class Decomposer {
public:
  Decomposer(const AffineMonoid& mon, const LatticeVector& grading) : mon_(mon), grading_(grading) {}

  bool run(const LatticeVector& u, IntVector& coeffs) {
    if (u.is_zero()) return true;
    if (failed_.count(u.entries())) return false;
    if (!mon_.weight_cone().contains(u)) {
      failed_.insert(u.entries());
      return false;
    }
    const Integer level = pairing(grading_, u);
    for (std::size_t j = 0; j < mon_.size(); ++j) {
      if (pairing(grading_, mon_.generator(j)) > level) continue;
      coeffs[j] += 1;
      if (run(u - mon_.generator(j), coeffs)) return true;
      coeffs[j] -= 1;
    }
    failed_.insert(u.entries());
    return false;
  }

private:
  const AffineMonoid& mon_;
  const LatticeVector& grading_;
  std::set<IntVector> failed_;
};

}  // namespace

AffineMonoid::AffineMonoid(std::vector<LatticeVector> generators)
    : rank_(generators.empty() ? 0 : generators.front().rank()),
      generators_(validated(std::move(generators))),
      weight_cone_(Cone::from_rays(generators_, rank_, Side::M)),
      sigma_(weight_cone_.dual()),
      grading_(sum_of(weight_cone_.facet_normals())) {
  const Integer index = lattice_index(generators_, rank_);
  if (index != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "the generators span a sublattice of index " + index.get_str() +
                    " in M; the torus would not act effectively");
  }
}

std::optional<IntVector> AffineMonoid::decompose(const LatticeVector& u) const {
  if (u.rank() != rank_) throw Error(ErrorKind::RankMismatch, u.to_string());
  if (u.side() != Side::M) throw Error(ErrorKind::SideMismatch, "monoid elements live in M");
  IntVector coeffs(generators_.size());
  Decomposer search(*this, grading_);
  if (!search.run(u, coeffs)) return std::nullopt;
  return coeffs;
}

std::vector<IntVector> AffineMonoid::relations() const {
  return integer_kernel(IntMatrix::from_columns(generators_, rank_));
}

bool monoid_membership(const AffineMonoid& mon, const LatticeVector& u) { return mon.contains(u); }

std::vector<LatticeVector> hilbert_basis(const Cone& c, std::size_t box_limit) {
  const std::size_t d = c.rank();
  if (d > kMaxHilbertRank) {
    throw Error(ErrorKind::RankLimitExceeded,
                "Hilbert basis enumeration supports rank <= " + std::to_string(kMaxHilbertRank));
  }
  // Irreducible elements lie in the zonotope sum [0,1] r_i, hence in this box.
  IntVector lo(d), hi(d);
  for (const auto& r : c.rays()) {
    for (std::size_t i = 0; i < d; ++i) (sgn(r[i]) < 0 ? lo[i] : hi[i]) += r[i];
  }
  Integer points = 1;
  for (std::size_t i = 0; i < d; ++i) points *= hi[i] - lo[i] + 1;
  if (points > Integer(static_cast<unsigned long>(box_limit))) {
    throw Error(ErrorKind::BoundExceeded, "enumeration box holds " + points.get_str() +
                                              " points, limit is " + std::to_string(box_limit));
  }

  const LatticeVector grading = sum_of(c.facet_normals());
  std::vector<std::pair<Integer, LatticeVector>> candidates;
  IntVector cur = lo;
  while (true) {
    LatticeVector v(c.side(), cur);
    if (!v.is_zero() && c.contains(v)) candidates.emplace_back(pairing(grading, v), v);
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (cur[i] < hi[i]) {
        cur[i] += 1;
        break;
      }
      cur[i] = lo[i];
    }
    if (i == d) break;
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return canonical_less(a.second, b.second);
  });

  std::vector<LatticeVector> basis;
  for (const auto& [level, v] : candidates) {
    const bool reducible = std::any_of(basis.begin(), basis.end(),
                                       [&](const LatticeVector& h) { return c.contains(v - h); });
    if (!reducible) basis.push_back(v);
  }
  canonical_sort(basis);
  return basis;
}

SaturationResult is_saturated(const AffineMonoid& mon) {
  for (const auto& h : hilbert_basis(mon.weight_cone())) {
    if (!mon.contains(h)) return {false, h};
  }
  return {true, std::nullopt};
}

AffineMonoid saturated_monoid(const Cone& omega) {
  if (omega.side() != Side::M) throw Error(ErrorKind::SideMismatch, "the weight cone lives in M");
  return AffineMonoid(hilbert_basis(omega));
}

}  // namespace toricflow
