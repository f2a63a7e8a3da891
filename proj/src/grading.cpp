#include "toricflow/grading.hpp"

#include "toricflow/error.hpp"

#include <sstream>

namespace toricflow {

const char* to_string(GradingKind kind) {
  switch (kind) {
    case GradingKind::Elliptic: return "Elliptic";
    case GradingKind::Parabolic: return "Parabolic";
    case GradingKind::Hyperbolic: return "Hyperbolic";
    case GradingKind::DegenerateNonnegative: return "DegenerateNonnegative";
  }
  return "Unknown";
}

GradingClass classify(const AffineMonoid& mon, const LatticeVector& l) {
  if (l.side() != Side::N) throw Error(ErrorKind::SideMismatch, "one-parameter subgroups live in N");
  if (l.rank() != mon.rank()) throw Error(ErrorKind::RankMismatch, "subgroup " + l.to_string());
  if (l.is_zero()) throw Error(ErrorKind::ZeroVector, "the trivial subgroup induces no action");

  GradingClass out;
  out.subgroup = l;
  for (const auto& u : mon.generators()) out.degree_gcd = gcd(out.degree_gcd, pairing(l, u));
  out.effective = out.degree_gcd == 1;

  const Cone& omega = mon.weight_cone();
  for (const auto& r : omega.rays()) {
    if (sgn(pairing(l, r)) < 0) {
      out.kind = GradingKind::Hyperbolic;
      return out;
    }
  }

  const Face face = omega.zero_face(l);
  const std::size_t d = mon.rank();
  out.invariant_trdeg = face.dim;
  // In rank 1 the facet is {0}: the parabolic reading wins over elliptic.
  if (face.dim + 1 == d) {
    out.kind = GradingKind::Parabolic;
    const std::size_t s = mon.sigma().find_ray(l);
    if (s == Cone::npos) {
      throw Error(ErrorKind::SafetyBoundExceeded,
                  "parabolic subgroup " + l.to_string() + " is not on a ray of sigma");
    }
    out.fixed_divisor_ray = s;
  } else if (face.dim == 0) {
    out.kind = GradingKind::Elliptic;
  } else {
    out.kind = GradingKind::DegenerateNonnegative;
  }
  out.zero_face = face;
  return out;
}

StraighteningSet straightening_subtori(const AffineMonoid& mon) {
  const SaturationResult sat = is_saturated(mon);
  if (!sat.saturated) {
    throw Error(ErrorKind::NormalityRequired,
                "the monoid is not saturated; " + sat.witness->to_string() +
                    " lies in the weight cone but not in the monoid");
  }
  const Cone sigma = mon.sigma();
  const std::vector<Face> facets = mon.weight_cone().facets();
  StraighteningSet out;
  for (std::size_t s = 0; s < sigma.rays().size(); ++s) {
    out.subtori.push_back({sigma.rays()[s], s, facets[s]});
  }
  return out;
}

FixedLocus fixed_locus(const AffineMonoid& mon, const LatticeVector& l) {
  const GradingClass cls = classify(mon, l);
  if (cls.kind != GradingKind::Parabolic) {
    throw Error(ErrorKind::NotParabolic,
                std::string("subgroup ") + l.to_string() + " is " + to_string(cls.kind));
  }
  FixedLocus out;
  out.ray = *cls.fixed_divisor_ray;
  const LatticeVector& p = mon.sigma().rays()[out.ray];
  for (std::size_t j = 0; j < mon.size(); ++j) {
    (sgn(pairing(p, mon.generator(j))) > 0 ? out.vanishing : out.free).push_back(j);
  }
  return out;
}

std::string FixedLocus::describe() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < vanishing.size(); ++k) os << 'x' << vanishing[k] + 1 << " = ";
  os << '0';
  return os.str();
}

}  // namespace toricflow
