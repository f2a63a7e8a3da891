#include "toricflow/cone.hpp"

#include "toricflow/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

namespace toricflow {

namespace {

struct Row {
  IntVector coeffs;
  std::uint64_t history = 0;
};

void normalize(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

bool all_zero(const IntVector& v, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (sgn(v[i]) != 0) return false;
  }
  return true;
}

// Inserts keeping one copy per distinct row, preferring the smaller history.
void insert_row(std::map<IntVector, std::uint64_t>& rows, Row row) {
  normalize(row.coeffs);
  auto [it, inserted] = rows.emplace(std::move(row.coeffs), row.history);
  if (!inserted && std::popcount(row.history) < std::popcount(it->second)) {
    it->second = row.history;
  }
}

std::vector<LatticeVector> clean_generators(const std::vector<LatticeVector>& rays,
                                            std::size_t rank, Side side) {
  if (rank == 0) throw Error(ErrorKind::InvalidArgument, "cone rank must be at least 1");
  if (rank > kMaxConeRank) {
    throw Error(ErrorKind::RankLimitExceeded,
                "rank " + std::to_string(rank) + " exceeds the limit " +
                    std::to_string(kMaxConeRank));
  }
  std::vector<LatticeVector> out;
  for (const auto& r : rays) {
    if (r.rank() != rank) throw Error(ErrorKind::RankMismatch, "ray " + r.to_string());
    if (r.side() != side) throw Error(ErrorKind::SideMismatch, "ray " + r.to_string());
    if (r.is_zero()) continue;
    LatticeVector p = primitive(r);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  if (out.empty()) throw Error(ErrorKind::ZeroVector, "a cone needs at least one nonzero ray");
  return out;
}

}  // namespace

std::vector<LatticeVector> fourier_motzkin_inequalities(const std::vector<LatticeVector>& rays_in,
                                                        std::size_t rank, Side side) {
  const std::vector<LatticeVector> rays = clean_generators(rays_in, rank, side);
  const std::size_t d = rank;
  const std::size_t m = rays.size();
  if (2 * d + m > 64) {
    throw Error(ErrorKind::BoundExceeded,
                "too many generators for the elimination engine (" + std::to_string(m) + ")");
  }
  const std::size_t width = d + m;

  // Unknowns (x_0..x_{d-1}, lambda_0..lambda_{m-1}); the system is
  // x = R lambda (as two inequalities per row) and lambda >= 0.
  std::vector<Row> rows;
  std::size_t origin = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (int sign : {1, -1}) {
      Row row{IntVector(width), std::uint64_t{1} << origin++};
      row.coeffs[i] = sign;
      for (std::size_t j = 0; j < m; ++j) row.coeffs[d + j] = -sign * rays[j][i];
      rows.push_back(std::move(row));
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    Row row{IntVector(width), std::uint64_t{1} << origin++};
    row.coeffs[d + j] = 1;
    rows.push_back(std::move(row));
  }

  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t var = d + j;
    const int max_history = static_cast<int>(j) + 2;  // Chernikov bound after j+1 eliminations
    std::vector<const Row*> pos, neg;
    std::map<IntVector, std::uint64_t> next;
    for (const Row& row : rows) {
      const int s = sgn(row.coeffs[var]);
      if (s > 0) {
        pos.push_back(&row);
      } else if (s < 0) {
        neg.push_back(&row);
      } else if (!all_zero(row.coeffs, 0, width)) {
        insert_row(next, row);
      }
    }
    for (const Row* p : pos) {
      for (const Row* n : neg) {
        const std::uint64_t history = p->history | n->history;
        if (std::popcount(history) > max_history) continue;
        const Integer a = p->coeffs[var];
        const Integer b = -n->coeffs[var];
        Row row{IntVector(width), history};
        for (std::size_t k = 0; k < width; ++k) row.coeffs[k] = b * p->coeffs[k] + a * n->coeffs[k];
        if (all_zero(row.coeffs, 0, width)) continue;
        insert_row(next, std::move(row));
      }
    }
    rows.clear();
    for (auto& [coeffs, history] : next) rows.push_back(Row{coeffs, history});
  }

  std::vector<LatticeVector> out;
  for (const Row& row : rows) {
    IntVector x(row.coeffs.begin(), row.coeffs.begin() + static_cast<std::ptrdiff_t>(d));
    if (all_zero(x, 0, d)) continue;
    LatticeVector v = primitive(LatticeVector(opposite(side), std::move(x)));
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  canonical_sort(out);
  return out;
}

Cone Cone::from_rays(const std::vector<LatticeVector>& rays_in, std::size_t rank, Side side) {
  const std::vector<LatticeVector> rays = clean_generators(rays_in, rank, side);
  const std::vector<LatticeVector> inequalities = fourier_motzkin_inequalities(rays, rank, side);

  if (span_rank(inequalities, rank) != rank) {
    throw Error(ErrorKind::NotPointed, "the cone generated by the rays contains a line");
  }
  if (span_rank(rays, rank) != rank) {
    throw Error(ErrorKind::NotFullDimensional, "the rays do not span the ambient space");
  }

  std::vector<LatticeVector> normals;
  for (const auto& h : inequalities) {
    std::vector<LatticeVector> on_hyperplane;
    for (const auto& r : rays) {
      if (sgn(pairing(h, r)) == 0) on_hyperplane.push_back(r);
    }
    if (span_rank(on_hyperplane, rank) == rank - 1) normals.push_back(h);
  }

  std::vector<LatticeVector> extreme;
  for (const auto& r : rays) {
    std::vector<LatticeVector> tight;
    for (const auto& h : normals) {
      if (sgn(pairing(h, r)) == 0) tight.push_back(h);
    }
    if (span_rank(tight, rank) == rank - 1) extreme.push_back(r);
  }

  canonical_sort(extreme);
  canonical_sort(normals);
  return Cone(side, rank, std::move(extreme), std::move(normals));
}

Cone Cone::dual() const { return Cone(opposite(side_), rank_, normals_, rays_); }

void Cone::require_own_side(const LatticeVector& v) const {
  if (v.rank() != rank_) throw Error(ErrorKind::RankMismatch, v.to_string());
  if (v.side() != side_) {
    throw Error(ErrorKind::SideMismatch,
                v.to_string() + " is not on the " + to_string(side_) + " side of the cone");
  }
}

void Cone::require_dual_side(const LatticeVector& v) const {
  if (v.rank() != rank_) throw Error(ErrorKind::RankMismatch, v.to_string());
  if (v.side() != opposite(side_)) {
    throw Error(ErrorKind::SideMismatch, v.to_string() + " must be a functional on the cone");
  }
}

std::vector<Face> Cone::facets() const {
  std::vector<Face> out;
  out.reserve(normals_.size());
  for (std::size_t k = 0; k < normals_.size(); ++k) {
    Face f;
    f.saturated_normals = {k};
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (sgn(pairing(normals_[k], rays_[i])) == 0) f.rays.push_back(i);
    }
    f.dim = rank_ - 1;
    out.push_back(std::move(f));
  }
  return out;
}

bool Cone::contains(const LatticeVector& v) const {
  require_own_side(v);
  return std::all_of(normals_.begin(), normals_.end(),
                     [&](const LatticeVector& h) { return sgn(pairing(h, v)) >= 0; });
}

bool Cone::in_interior(const LatticeVector& v) const {
  require_own_side(v);
  return std::all_of(normals_.begin(), normals_.end(),
                     [&](const LatticeVector& h) { return sgn(pairing(h, v)) > 0; });
}

Face Cone::zero_face(const LatticeVector& l) const {
  require_dual_side(l);
  Face f;
  std::vector<LatticeVector> spanning;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const int s = sgn(pairing(l, rays_[i]));
    if (s < 0) {
      throw Error(ErrorKind::NotNonnegative,
                  l.to_string() + " is negative on the ray " + rays_[i].to_string());
    }
    if (s == 0) {
      f.rays.push_back(i);
      spanning.push_back(rays_[i]);
    }
  }
  for (std::size_t k = 0; k < normals_.size(); ++k) {
    const bool vanishes = std::all_of(f.rays.begin(), f.rays.end(), [&](std::size_t i) {
      return sgn(pairing(normals_[k], rays_[i])) == 0;
    });
    if (vanishes) f.saturated_normals.push_back(k);
  }
  f.dim = span_rank(spanning, rank_);
  return f;
}

std::size_t Cone::find_ray(const LatticeVector& v) const {
  require_own_side(v);
  if (v.is_zero()) return npos;
  const LatticeVector p = primitive(v);
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i] == p) return i;
  }
  return npos;
}

}  // namespace toricflow
