#include "toricflow/orbitflow.hpp"

#include "toricflow/error.hpp"

#include <algorithm>
#include <sstream>

namespace toricflow {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::TorusPoint: return "TorusPoint";
    case Provenance::GmImage: return "GmImage";
    case Provenance::FlowImage: return "FlowImage";
    case Provenance::LimitImage: return "LimitImage";
  }
  return "Unknown";
}

bool ToricPoint::on_torus() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return sgn(c) != 0; });
}

std::string ToricPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j) os << ',';
    os << coords[j];
  }
  os << ')';
  return os.str();
}

Rational rational_power(const Rational& base, const Integer& exponent) {
  if (!exponent.fits_slong_p()) throw Error(ErrorKind::BoundExceeded, "exponent too large");
  const long e = exponent.get_si();
  if (e == 0) return 1;
  if (sgn(base) == 0) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "zero raised to a negative power");
    return 0;
  }
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Rational out = e > 0 ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

namespace {

void require_point(const AffineMonoid& mon, const ToricPoint& x) {
  if (x.coords.size() != mon.size()) {
    throw Error(ErrorKind::RankMismatch, "point has " + std::to_string(x.coords.size()) +
                                             " coordinates, the monoid has " +
                                             std::to_string(mon.size()) + " generators");
  }
}

void require_subgroup(const AffineMonoid& mon, const LatticeVector& l) {
  if (l.side() != Side::N) throw Error(ErrorKind::SideMismatch, "one-parameter subgroups live in N");
  if (l.rank() != mon.rank()) throw Error(ErrorKind::RankMismatch, "subgroup " + l.to_string());
}

}  // namespace

ToricPoint torus_point(const AffineMonoid& mon, const std::vector<Rational>& t) {
  if (t.size() != mon.rank()) {
    throw Error(ErrorKind::RankMismatch, "torus element needs " + std::to_string(mon.rank()) + " entries");
  }
  for (const auto& tk : t) {
    if (sgn(tk) == 0) throw Error(ErrorKind::InvalidArgument, "torus coordinates must be nonzero");
  }
  ToricPoint x;
  for (const auto& u : mon.generators()) {
    Rational c = 1;
    for (std::size_t k = 0; k < t.size(); ++k) c *= rational_power(t[k], u[k]);
    x.coords.push_back(c);
  }
  x.provenance = Provenance::TorusPoint;
  return x;
}

ToricPoint gm_scale(const AffineMonoid& mon, const LatticeVector& l, const Rational& t,
                    const ToricPoint& x) {
  require_point(mon, x);
  require_subgroup(mon, l);
  if (sgn(t) == 0) throw Error(ErrorKind::InvalidArgument, "t must be nonzero");
  ToricPoint y{x.coords, Provenance::GmImage};
  for (std::size_t j = 0; j < mon.size(); ++j) {
    y.coords[j] *= rational_power(t, pairing(l, mon.generator(j)));
  }
  return y;
}

std::optional<ToricPoint> limit_point(const AffineMonoid& mon, const LatticeVector& l,
                                      const ToricPoint& x) {
  require_point(mon, x);
  require_subgroup(mon, l);
  ToricPoint y{x.coords, Provenance::LimitImage};
  for (std::size_t j = 0; j < mon.size(); ++j) {
    if (sgn(x.coords[j]) == 0) continue;
    const int w = sgn(pairing(l, mon.generator(j)));
    if (w < 0) return std::nullopt;
    if (w > 0) y.coords[j] = 0;
  }
  return y;
}

Rational evaluate(const AffineMonoid& mon, const AlgebraElement& f, const ToricPoint& x) {
  require_point(mon, x);
  Rational total = 0;
  for (const auto& [u, c] : f.terms()) {
    const auto a = mon.decompose(u);
    if (!a) throw Error(ErrorKind::InvalidArgument, u.to_string() + " is not in the weight monoid");
    Rational value = c;
    for (std::size_t j = 0; j < a->size() && sgn(value) != 0; ++j) {
      value *= rational_power(x.coords[j], (*a)[j]);
    }
    total += value;
  }
  return total;
}

ToricPoint ga_flow_point(const HomogeneousLND& d, const Rational& s, const ToricPoint& x) {
  const AffineMonoid& mon = d.monoid();
  require_point(mon, x);
  ToricPoint y{{}, Provenance::FlowImage};
  for (const auto& u : mon.generators()) {
    y.coords.push_back(evaluate(mon, exp_flow(d, s, AlgebraElement::monomial(u)), x));
  }
  return y;
}

bool satisfies_relations(const AffineMonoid& mon, const ToricPoint& x) {
  require_point(mon, x);
  for (const auto& k : mon.relations()) {
    Rational lhs = 1, rhs = 1;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (sgn(k[j]) > 0) lhs *= rational_power(x.coords[j], k[j]);
      if (sgn(k[j]) < 0) rhs *= rational_power(x.coords[j], -k[j]);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

CompatibilityReport verify_compatible(const AffineMonoid& mon, const LatticeVector& l,
                                      const ToricPoint& x, const std::vector<Rational>& sample_ts,
                                      const std::vector<Rational>& sample_ss) {
  require_point(mon, x);
  const SaturationResult sat = is_saturated(mon);
  if (!sat.saturated) {
    throw Error(ErrorKind::NormalityRequired,
                "the variety is not normal: " + sat.witness->to_string() +
                    " lies in the saturation of the weight monoid but not in the monoid");
  }
  const GradingClass cls = classify(mon, l);
  if (cls.kind != GradingKind::Parabolic) {
    throw Error(ErrorKind::NotParabolic,
                std::string(to_string(cls.kind)) + ": the fixed points of " + l.to_string() +
                    " form no divisor, so no compatible Ga-action exists");
  }
  if (!x.on_torus()) throw Error(ErrorKind::InvalidArgument, "verification needs a torus point");

  CompatibilityReport rep;
  rep.subgroup = l;
  rep.point = x;
  rep.ray = *cls.fixed_divisor_ray;
  const Cone sigma = mon.sigma();
  rep.root = first_root(sigma, rep.ray);
  const HomogeneousLND delta(mon, rep.root);
  rep.invariant_generators = kernel_generators(delta);

  auto add = [&rep](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  auto invariants_match = [&](const ToricPoint& y) {
    return std::all_of(rep.invariant_generators.begin(), rep.invariant_generators.end(),
                       [&](std::size_t j) { return y.coords[j] == x.coords[j]; });
  };

  add("relations_at_point", satisfies_relations(mon, x), x.to_string());

  {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& t : sample_ts) {
      const ToricPoint y = gm_scale(mon, l, t, x);
      ok = ok && invariants_match(y) && satisfies_relations(mon, y);
      detail << (detail.tellp() > 0 ? "; " : "") << "t=" << t << " -> " << y.to_string();
    }
    add("invariants_constant_on_gm_orbit", ok, detail.str());
  }
  {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& s : sample_ss) {
      const ToricPoint y = ga_flow_point(delta, s, x);
      ok = ok && invariants_match(y) && satisfies_relations(mon, y);
      detail << (detail.tellp() > 0 ? "; " : "") << "s=" << s << " -> " << y.to_string();
    }
    add("invariants_constant_on_ga_orbit", ok, detail.str());
  }
  {
    bool ok = true;
    for (std::size_t j : rep.invariant_generators) {
      ok = ok && delta.apply(AlgebraElement::monomial(mon.generator(j))).is_zero();
    }
    add("derivation_annihilates_invariants", ok,
        std::to_string(rep.invariant_generators.size()) + " invariant generators");
  }
  {
    // t.(s.x) = (t^{-l(e)} s).(t.x) under the pullback convention.
    const Integer shift = -pairing(l, rep.root.e);
    bool ok = true;
    for (const auto& t : sample_ts) {
      for (const auto& s : sample_ss) {
        const ToricPoint lhs = gm_scale(mon, l, t, ga_flow_point(delta, s, x));
        const ToricPoint rhs = ga_flow_point(delta, rational_power(t, shift) * s, gm_scale(mon, l, t, x));
        ok = ok && lhs == rhs;
      }
    }
    add("gm_normalizes_ga", ok, "t.(s.x) = (t^" + shift.get_str() + " s).(t.x)");
  }

  const auto limit = limit_point(mon, l, x);
  if (!limit) {
    add("limit_point_exists", false, "the orbit of " + x.to_string() + " has no limit at t -> 0");
    rep.passed = false;
    return rep;
  }
  rep.limit = *limit;
  add("limit_point_exists", true, limit->to_string());
  {
    const FixedLocus locus = fixed_locus(mon, l);
    bool on_divisor = std::all_of(locus.vanishing.begin(), locus.vanishing.end(),
                                  [&](std::size_t j) { return sgn(limit->coords[j]) == 0; });
    for (const auto& t : sample_ts) on_divisor = on_divisor && gm_scale(mon, l, t, *limit) == *limit;
    add("limit_point_fixed_on_divisor", on_divisor, locus.describe());
  }
  {
    // A generator of p_s-degree 1 flows linearly: x_j + s * χ^{u_j + e}(x).
    const LatticeVector& p = delta.distinguished_ray();
    std::optional<std::size_t> linear;
    for (std::size_t j = 0; j < mon.size() && !linear; ++j) {
      if (pairing(p, mon.generator(j)) == 1) linear = j;
    }
    if (!linear) {
      add("flow_reaches_limit", false, "no generator of degree 1 to solve for the flow parameter");
    } else {
      const Rational slope =
          evaluate(mon, AlgebraElement::monomial(mon.generator(*linear) + rep.root.e), x);
      if (sgn(slope) == 0) {
        add("flow_reaches_limit", false, "degenerate linear coordinate");
      } else {
        rep.flow_parameter = -x.coords[*linear] / slope;
        const ToricPoint y = ga_flow_point(delta, rep.flow_parameter, x);
        std::ostringstream detail;
        detail << "s=" << rep.flow_parameter << " -> " << y.to_string();
        add("flow_reaches_limit", y == *limit, detail.str());
      }
    }
  }

  rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.passed; });
  return rep;
}

}  // namespace toricflow
