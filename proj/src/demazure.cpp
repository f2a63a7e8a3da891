#include "toricflow/demazure.hpp"

#include "toricflow/error.hpp"

#include <algorithm>
#include <string>

namespace toricflow {

namespace {

void require_sigma(const Cone& sigma) {
  if (sigma.side() != Side::N) throw Error(ErrorKind::SideMismatch, "roots are taken for a cone in N");
}

void require_ray(const Cone& sigma, std::size_t ray) {
  if (ray >= sigma.rays().size()) {
    throw Error(ErrorKind::InvalidArgument, "ray index " + std::to_string(ray + 1) +
                                                " out of range 1.." +
                                                std::to_string(sigma.rays().size()));
  }
}

// Inverse of a unimodular matrix by Gauss-Jordan over Q.
std::vector<std::vector<Rational>> inverse(const IntMatrix& u) {
  const std::size_t n = u.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(u(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(a[p][c]) == 0) ++p;
    std::swap(a[p], a[c]);
    const Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  }
  return inv;
}

std::vector<DemazureRoot> roots_for_ray(const Cone& sigma, std::size_t s, long box) {
  const std::size_t d = sigma.rank();
  const LatticeVector& p = sigma.rays()[s];

  // p U = (1, 0, ..., 0), so e = U y has <p, e> = y_0; fix y_0 = -1.
  IntMatrix row(1, d);
  for (std::size_t i = 0; i < d; ++i) row(0, i) = p[i];
  const ColumnEchelon ce = column_echelon(row);
  const IntMatrix& u = ce.transform;
  const auto u_inv = inverse(u);

  // |y_i| <= box * ||row_i(U^-1)||_1 whenever max-norm(e) <= box.
  std::vector<Integer> bound(d);
  Integer volume = 1;
  for (std::size_t i = 1; i < d; ++i) {
    Rational sum = 0;
    for (std::size_t k = 0; k < d; ++k) sum += abs(u_inv[i][k]);
    Rational b = sum * box;
    mpz_fdiv_q(bound[i].get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    volume *= 2 * bound[i] + 1;
  }
  if (volume > Integer(static_cast<unsigned long>(kRootSearchLimit))) {
    throw Error(ErrorKind::BoundExceeded, "root search would visit " + volume.get_str() +
                                              " points, limit is " +
                                              std::to_string(kRootSearchLimit));
  }

  std::vector<DemazureRoot> out;
  IntVector y(d);
  y[0] = -1;
  for (std::size_t i = 1; i < d; ++i) y[i] = -bound[i];
  while (true) {
    LatticeVector e(Side::M, u.apply(y));
    if (e.max_norm() <= box) {
      bool ok = true;
      for (std::size_t i = 0; i < sigma.rays().size() && ok; ++i) {
        if (i != s && sgn(pairing(sigma.rays()[i], e)) < 0) ok = false;
      }
      if (ok) out.push_back({std::move(e), s});
    }
    std::size_t i = 1;
    for (; i < d; ++i) {
      if (y[i] < bound[i]) {
        y[i] += 1;
        break;
      }
      y[i] = -bound[i];
    }
    if (i >= d) break;
  }
  std::sort(out.begin(), out.end(),
            [](const DemazureRoot& a, const DemazureRoot& b) { return a.e.entries() < b.e.entries(); });
  return out;
}

}  // namespace

std::optional<DemazureRoot> is_root(const Cone& sigma, const LatticeVector& e) {
  require_sigma(sigma);
  if (e.side() != Side::M) throw Error(ErrorKind::SideMismatch, "roots live in M");
  std::optional<std::size_t> distinguished;
  for (std::size_t i = 0; i < sigma.rays().size(); ++i) {
    const Integer v = pairing(sigma.rays()[i], e);
    if (v == -1 && !distinguished) {
      distinguished = i;
    } else if (sgn(v) < 0) {
      return std::nullopt;
    }
  }
  if (!distinguished) return std::nullopt;
  return DemazureRoot{e, *distinguished};
}

std::vector<DemazureRoot> roots_in_box(const Cone& sigma, long box, std::optional<std::size_t> ray) {
  require_sigma(sigma);
  if (box < 0) throw Error(ErrorKind::InvalidArgument, "box must be nonnegative");
  std::vector<DemazureRoot> out;
  for (std::size_t s = 0; s < sigma.rays().size(); ++s) {
    if (ray && *ray != s) continue;
    auto part = roots_for_ray(sigma, s, box);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (ray) require_ray(sigma, *ray);
  return out;
}

std::pair<std::size_t, std::size_t> root_growth_witness(const Cone& sigma, std::size_t ray,
                                                        long box1, long box2) {
  require_sigma(sigma);
  require_ray(sigma, ray);
  if (sigma.rank() < 2) {
    throw Error(ErrorKind::InvalidArgument, "in rank 1 the root set R_s is finite");
  }
  if (!(0 <= box1 && box1 < box2)) throw Error(ErrorKind::InvalidArgument, "need 0 <= box1 < box2");
  return {roots_for_ray(sigma, ray, box1).size(), roots_for_ray(sigma, ray, box2).size()};
}

DemazureRoot first_root(const Cone& sigma, std::size_t ray, long start_box) {
  require_sigma(sigma);
  require_ray(sigma, ray);
  long box = std::max(start_box, 1L);
  for (int attempt = 0; attempt < 12; ++attempt, box *= 2) {
    auto roots = roots_for_ray(sigma, ray, box);
    if (!roots.empty()) return roots.front();
  }
  throw Error(ErrorKind::BoundExceeded, "no root found for ray " + std::to_string(ray + 1) +
                                            " within box " + std::to_string(box / 2));
}

}  // namespace toricflow
