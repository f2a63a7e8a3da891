// Fixtures and brute-force oracles shared by the test binaries. The oracles
// deliberately avoid the library's algorithms: they only use definitions.
#pragma once

#include "toricflow/cone.hpp"
#include "toricflow/demazure.hpp"
#include "toricflow/grading.hpp"
#include "toricflow/lattice.hpp"
#include "toricflow/monoid.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace toricflow::testing {

inline LatticeVector nvec(std::initializer_list<long> e) { return LatticeVector(Side::N, e); }
inline LatticeVector mvec(std::initializer_list<long> e) { return LatticeVector(Side::M, e); }

inline std::vector<LatticeVector> mvecs(std::initializer_list<std::initializer_list<long>> vs) {
  std::vector<LatticeVector> out;
  for (auto v : vs) out.push_back(mvec(v));
  return out;
}

inline std::vector<LatticeVector> nvecs(std::initializer_list<std::initializer_list<long>> vs) {
  std::vector<LatticeVector> out;
  for (auto v : vs) out.push_back(nvec(v));
  return out;
}

struct NamedCone {
  std::string name;
  std::size_t rank;
  std::vector<LatticeVector> rays;  // M-side generators of omega
};

/// Pointed full-dimensional weight cones of rank 2..4.
inline std::vector<NamedCone> cone_suite() {
  return {
      {"quadrant", 2, mvecs({{1, 0}, {0, 1}})},
      {"quadric", 2, mvecs({{1, 0}, {1, 2}})},
      {"a2_singularity", 2, mvecs({{1, 0}, {1, 3}})},
      {"skew2", 2, mvecs({{2, -1}, {-1, 2}})},
      {"wide2", 2, mvecs({{1, 1}, {-1, 2}, {0, 1}})},
      {"orthant3", 3, mvecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})},
      {"conifold", 3, mvecs({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}})},
      {"simplicial3", 3, mvecs({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}})},
      {"four_rays3", 3, mvecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}})},
      {"orthant4", 4, mvecs({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})},
      {"octahedral4", 4,
       mvecs({{1, 0, 0, 1}, {0, 1, 0, 1}, {-1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, 1, 1}, {0, 0, -1, 1}})},
      {"simplicial4", 4, mvecs({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 3}})},
  };
}

struct NamedMonoid {
  std::string name;
  AffineMonoid monoid;
};

/// Saturated (normal) fixtures of rank <= 3.
inline std::vector<NamedMonoid> saturated_suite() {
  std::vector<NamedMonoid> out;
  out.push_back({"affine_line", AffineMonoid(mvecs({{1}}))});
  out.push_back({"A2", AffineMonoid(mvecs({{1, 0}, {0, 1}}))});
  out.push_back({"quadric", AffineMonoid(mvecs({{1, 0}, {1, 1}, {1, 2}}))});
  out.push_back({"A3", AffineMonoid(mvecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))});
  for (const auto& c : cone_suite()) {
    if (c.rank > 3 || c.name == "quadrant" || c.name == "quadric" || c.name == "orthant3") continue;
    out.push_back({c.name, saturated_monoid(Cone::from_rays(c.rays, c.rank, Side::M))});
  }
  return out;
}

inline AffineMonoid cuspidal_monoid() { return AffineMonoid(mvecs({{2}, {3}})); }

// --- oracles ---------------------------------------------------------------

inline Integer det(std::vector<IntVector> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<IntVector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntVector row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    Integer term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

/// Facet normals by brute force: every (d-1)-subset of rays spanning a
/// hyperplane with all rays on one side.
inline std::vector<LatticeVector> oracle_facet_normals(const std::vector<LatticeVector>& rays,
                                                       std::size_t d) {
  std::set<IntVector> found;
  const std::size_t m = rays.size();
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() + 1 == d) {
      // Normal via cofactors: n_k = det of [rays..., e_k].
      IntVector n(d);
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<IntVector> mat;
        for (std::size_t i : pick) mat.push_back(rays[i].entries());
        IntVector ek(d);
        ek[k] = 1;
        mat.push_back(ek);
        n[k] = det(mat);
      }
      LatticeVector h(opposite(rays[0].side()), n);
      if (h.is_zero()) return;
      h = primitive(h);
      int sign = 0;
      for (const auto& r : rays) {
        const int s = sgn(pairing(h, r));
        if (s == 0) continue;
        if (sign == 0) sign = s;
        if (s != sign) return;
      }
      if (sign < 0) h = -h;
      found.insert(h.entries());
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  if (d == 1) {
    found.insert(IntVector{sgn(rays[0][0]) > 0 ? 1 : -1});
  } else {
    rec(0);
  }
  std::vector<LatticeVector> out;
  for (const auto& e : found) out.push_back(LatticeVector(opposite(rays[0].side()), e));
  canonical_sort(out);
  return out;
}

inline void for_each_in_box(std::size_t d, long box, const std::function<void(const IntVector&)>& f) {
  IntVector cur(d, Integer(-box));
  while (true) {
    f(cur);
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (cur[i] < box) {
        cur[i] += 1;
        break;
      }
      cur[i] = -box;
    }
    if (i == d) return;
  }
}

/// Every lattice point of the box checked against the root definition.
inline std::vector<DemazureRoot> oracle_roots(const Cone& sigma, long box) {
  std::vector<DemazureRoot> out;
  const auto& rays = sigma.rays();
  for (std::size_t s = 0; s < rays.size(); ++s) {
    for_each_in_box(sigma.rank(), box, [&](const IntVector& e) {
      LatticeVector v(Side::M, e);
      if (pairing(rays[s], v) != -1) return;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (i != s && sgn(pairing(rays[i], v)) < 0) return;
      }
      out.push_back({v, s});
    });
  }
  std::sort(out.begin(), out.end(), [](const DemazureRoot& a, const DemazureRoot& b) {
    return std::pair(a.ray, a.e.entries()) < std::pair(b.ray, b.e.entries());
  });
  return out;
}

/// Sign pattern of l over the Hilbert basis of omega.
inline GradingKind oracle_classify(const std::vector<LatticeVector>& hilbert, std::size_t d,
                                   const LatticeVector& l) {
  std::vector<LatticeVector> zero;
  for (const auto& h : hilbert) {
    const int s = sgn(pairing(l, h));
    if (s < 0) return GradingKind::Hyperbolic;
    if (s == 0) zero.push_back(h);
  }
  // rank of the zero set: the largest k with a nonvanishing k x k minor
  std::size_t r = 0;
  for (std::size_t k = d; k >= 1 && r == 0; --k) {
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
      if (pick.size() == k) {
        std::vector<std::size_t> coords;
        std::function<bool(std::size_t)> rc = [&](std::size_t cs) -> bool {
          if (coords.size() == k) {
            std::vector<IntVector> m;
            for (std::size_t i : pick) {
              IntVector row;
              for (std::size_t c : coords) row.push_back(zero[i][c]);
              m.push_back(row);
            }
            return sgn(det(m)) != 0;
          }
          for (std::size_t c = cs; c < d; ++c) {
            coords.push_back(c);
            if (rc(c + 1)) return true;
            coords.pop_back();
          }
          return false;
        };
        return rc(0);
      }
      for (std::size_t i = start; i < zero.size(); ++i) {
        pick.push_back(i);
        if (rec(i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (rec(0)) r = k;
  }
  if (r + 1 == d) return GradingKind::Parabolic;
  if (r == 0) return GradingKind::Elliptic;
  return GradingKind::DegenerateNonnegative;
}

/// Hilbert basis by definition inside a box: cone lattice points that are not
/// a sum of two nonzero cone lattice points.
inline std::vector<LatticeVector> oracle_hilbert(const Cone& c, long box) {
  std::vector<IntVector> pts;
  std::set<IntVector> in;
  for_each_in_box(c.rank(), box, [&](const IntVector& e) {
    LatticeVector v(c.side(), e);
    if (!v.is_zero() && c.contains(v)) {
      pts.push_back(e);
      in.insert(e);
    }
  });
  std::vector<LatticeVector> out;
  for (const auto& x : pts) {
    bool reducible = false;
    for (const auto& y : pts) {
      IntVector z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
      LatticeVector zv(c.side(), z);
      if (!zv.is_zero() && c.contains(zv)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(LatticeVector(c.side(), x));
  }
  canonical_sort(out);
  return out;
}

/// Membership by exhaustive search over coefficient vectors with every
/// coefficient at most `bound`.
inline bool oracle_membership(const std::vector<LatticeVector>& gens, const LatticeVector& u, long bound) {
  IntVector coeffs(gens.size());
  while (true) {
    IntVector sum(u.rank());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t i = 0; i < u.rank(); ++i) sum[i] += coeffs[j] * gens[j][i];
    }
    if (sum == u.entries()) return true;
    std::size_t j = 0;
    for (; j < gens.size(); ++j) {
      if (coeffs[j] < bound) {
        coeffs[j] += 1;
        break;
      }
      coeffs[j] = 0;
    }
    if (j == gens.size()) return false;
  }
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline LatticeVector random_vector(Side side, std::size_t d, long box) {
  IntVector e(d);
  for (auto& x : e) x = uniform(-box, box);
  return LatticeVector(side, e);
}

}  // namespace toricflow::testing
