#include "toricflow/cli.hpp"

#include "toricflow/demazure.hpp"
#include "toricflow/grading.hpp"
#include "toricflow/lnd.hpp"
#include "toricflow/monoid.hpp"
#include "toricflow/orbitflow.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <ostream>

namespace toricflow {

namespace {

const std::vector<Rational> kSampleTs = {Rational(2), Rational(1, 2), Rational(-3)};
const std::vector<Rational> kSampleSs = {Rational(1), Rational(-1), Rational(7, 3)};

Cone sigma_of(const Scene& scene) {
  Cone c = input_cone(scene);
  return scene.cone_rays ? c : c.dual();
}

std::vector<LatticeVector> pick(const std::vector<LatticeVector>& vs, const std::vector<std::size_t>& idx) {
  std::vector<LatticeVector> out;
  for (std::size_t k : idx) out.push_back(vs[k]);
  return out;
}

std::vector<std::size_t> one_based(std::vector<std::size_t> idx) {
  for (auto& k : idx) ++k;
  return idx;
}

Geometry geometry_section(const Scene& scene) {
  const Cone c = input_cone(scene);
  Geometry g;
  g.input = scene.cone_rays ? "cone_rays" : "monoid_generators";
  g.input_rays = c.rays();
  g.dual_rays = c.dual().rays();
  const auto faces = c.facets();
  for (std::size_t k = 0; k < faces.size(); ++k) {
    g.facets.push_back({c.facet_normals()[k], pick(c.rays(), faces[k].rays)});
  }
  return g;
}

void add_monoid_data(Geometry& g, const AffineMonoid& mon) {
  g.generators = mon.generators();
  if (mon.rank() <= kMaxHilbertRank) g.hilbert_basis = hilbert_basis(mon.weight_cone());
  const SaturationResult sat = is_saturated(mon);
  g.saturated = sat.saturated;
  g.saturation_witness = sat.witness;
}

ClassificationEntry classification_entry(const AffineMonoid& mon, const std::string& name,
                                         const LatticeVector& l) {
  const GradingClass cls = classify(mon, l);
  ClassificationEntry c;
  c.subgroup = name;
  c.l = l;
  c.kind = to_string(cls.kind);
  if (cls.zero_face) {
    c.zero_face = pick(mon.weight_cone().rays(), cls.zero_face->rays);
    c.zero_face_dim = cls.zero_face->dim;
  }
  if (cls.fixed_divisor_ray) {
    c.fixed_divisor_s = *cls.fixed_divisor_ray + 1;
    c.fixed_locus = fixed_locus(mon, l).describe();
  }
  c.degree_gcd = cls.degree_gcd;
  c.effective = cls.effective;
  c.invariant_trdeg = cls.invariant_trdeg;
  return c;
}

std::vector<StraighteningEntry> straightening_section(const AffineMonoid& mon) {
  std::vector<StraighteningEntry> out;
  for (const auto& st : straightening_subtori(mon).subtori) {
    out.push_back({st.ray + 1, st.subtorus, pick(mon.weight_cone().rays(), st.facet.rays),
                   fixed_locus(mon, st.subtorus).describe()});
  }
  return out;
}

RootsSection roots_section(const Cone& sigma, long box, std::optional<std::size_t> ray) {
  RootsSection r;
  r.box = box;
  if (ray) r.s = *ray + 1;
  for (const auto& root : roots_in_box(sigma, box, ray)) r.roots.push_back({root.ray + 1, root.e});
  if (sigma.rank() >= 2) {
    for (std::size_t s = 0; s < sigma.rays().size(); ++s) {
      if (ray && *ray != s) continue;
      const auto [a, b] = root_growth_witness(sigma, s, box, 2 * box);
      r.growth.push_back({s + 1, box, a, 2 * box, b});
    }
  }
  return r;
}

ElementTerms terms_of(const AlgebraElement& f) {
  return ElementTerms(f.terms().begin(), f.terms().end());
}

LndEntry lnd_entry(const HomogeneousLND& d, std::optional<std::string> subgroup) {
  LndEntry e;
  e.subgroup = std::move(subgroup);
  e.s = d.root().ray + 1;
  e.root = d.root().e;
  const auto& mon = d.monoid();
  for (std::size_t j = 0; j < mon.size(); ++j) {
    const auto chi = AlgebraElement::monomial(mon.generator(j));
    e.generators.push_back({j + 1, mon.generator(j), terms_of(d.apply(chi)), nilpotency_degree(d, chi)});
  }
  e.kernel_generators = one_based(kernel_generators(d));
  e.kernel_rank = kernel_rank(d);
  return e;
}

DemazureRoot require_root(const Cone& sigma, const LatticeVector& e) {
  const auto r = is_root(sigma, e);
  if (!r) throw Error(ErrorKind::NotARoot, e.to_string() + " is not a Demazure root of sigma");
  return *r;
}

VerificationEntry verification_entry(const AffineMonoid& mon, const std::string& name, const LatticeVector& l,
                                     const std::string& point, const ToricPoint& x) {
  VerificationEntry v;
  v.subgroup = name;
  v.l = l;
  v.point = point;
  v.coords = x.coords;
  const CompatibilityReport rep = verify_compatible(mon, l, x, kSampleTs, kSampleSs);
  v.verdict = rep.passed ? "PASS" : "FAIL";
  v.s = rep.ray + 1;
  v.root = rep.root.e;
  v.invariant_generators = one_based(rep.invariant_generators);
  if (!rep.limit.coords.empty()) v.limit = rep.limit.coords;
  const bool solved = std::any_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) {
    return c.name == "flow_reaches_limit" && c.detail.rfind("s=", 0) == 0;
  });
  if (solved) v.flow_parameter = rep.flow_parameter;
  for (const auto& c : rep.checks) v.checks.push_back({c.name, c.passed, c.detail});
  return v;
}

std::vector<DerivedFact> derived_from(const VerificationEntry& v, const ClassificationEntry& c) {
  const std::string basis = "verification " + v.subgroup + " at " + v.point;
  std::string limit = "(";
  for (std::size_t k = 0; k < v.limit->size(); ++k) limit += (k ? "," : "") + (*v.limit)[k].get_str();
  limit += ")";
  return {
      {"X is not rigid: the root " + v.root->to_string() + " gives a nontrivial Ga-action normalized by " +
           v.subgroup,
       kDerivedLabel, basis},
      {"the Aut(X)-orbit of " + v.point + " meets the divisor D_" + std::to_string(*v.s) + " (" +
           *c.fixed_locus + "): the Ga-flow at s = " + v.flow_parameter->get_str() + " carries it to " + limit,
       kDerivedLabel, basis},
  };
}

template <class F>
void record_failure(Report& r, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (exit_code(e.kind()) != kExitHypothesis) throw;
    r.warnings.push_back(e.what());
  }
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::RankMismatch:
    case ErrorKind::SideMismatch:
    case ErrorKind::ZeroVector:
      return kExitMalformed;
    case ErrorKind::NotPointed:
    case ErrorKind::NotFullDimensional:
    case ErrorKind::NotNonnegative:
    case ErrorKind::NormalityRequired:
    case ErrorKind::NotParabolic:
    case ErrorKind::NotARoot:
    case ErrorKind::IllDefinedRoot:
      return kExitHypothesis;
    case ErrorKind::RankLimitExceeded:
    case ErrorKind::BoundExceeded:
    case ErrorKind::SafetyBoundExceeded:
      return kExitResource;
  }
  return kExitMalformed;
}

Report build_report(const Scene& scene, long box) {
  Report r;
  r.scene_digest = scene.digest;
  r.command = "report";
  const AffineMonoid mon = scene_monoid(scene);
  r.geometry = geometry_section(scene);
  add_monoid_data(*r.geometry, mon);
  const bool normal = *r.geometry->saturated;
  if (!normal) {
    r.warnings.push_back("weight monoid is not saturated: " + r.geometry->saturation_witness->to_string() +
                         " lies in its saturation but not in the monoid; X is not normal, so straightening "
                         "is skipped and verification stops at NormalityRequired");
  }

  r.classification.emplace();
  for (const auto& [name, l] : scene.subgroups) {
    r.classification->push_back(classification_entry(mon, name, l));
    const auto& c = r.classification->back();
    if (!c.effective) {
      r.warnings.push_back("subgroup " + name + " has degree gcd " + c.degree_gcd.get_str() +
                           "; the induced Gm-action is not effective");
    }
  }
  if (normal) r.straightening = straightening_section(mon);
  r.roots = roots_section(mon.sigma(), box, std::nullopt);

  r.witness_lnd.emplace();
  r.verification.emplace();
  for (const auto& c : *r.classification) {
    if (!normal || c.kind != to_string(GradingKind::Parabolic)) continue;
    record_failure(r, [&] {
      const HomogeneousLND d(mon, first_root(mon.sigma(), *c.fixed_divisor_s - 1));
      r.witness_lnd->push_back(lnd_entry(d, c.subgroup));
    });
  }
  if (!r.witness_lnd->empty()) {
    r.warnings.push_back("witness derivations use the toric form delta(chi^u) = <p_s,u> chi^(u+e), which is "
                         "regular on X; no denominator is cleared");
  }
  for (const auto& c : *r.classification) {
    for (const auto& [pname, p] : scene.points) {
      const ToricPoint x = scene_point(scene, mon, pname);
      if (!x.on_torus()) {
        r.warnings.push_back("point " + pname + " is off the torus; verification for " + c.subgroup + " skipped");
        continue;
      }
      try {
        r.verification->push_back(verification_entry(mon, c.subgroup, c.l, pname, x));
      } catch (const Error& e) {
        if (exit_code(e.kind()) != kExitHypothesis) throw;
        VerificationEntry v;
        v.subgroup = c.subgroup;
        v.l = c.l;
        v.point = pname;
        v.coords = x.coords;
        v.verdict = std::string(to_string(e.kind()));
        v.message = e.what();
        r.verification->push_back(std::move(v));
        continue;
      }
      const auto& v = r.verification->back();
      if (v.verdict == "PASS") {
        for (auto& f : derived_from(v, c)) r.derived_facts.push_back(std::move(f));
      }
    }
  }
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for Gm- and Ga-actions on affine toric varieties", "toricflow"};
  app.require_subcommand(1);

  std::string scene_path;
  std::string format = "json";
  auto common = [&](CLI::App* sub) {
    sub->add_option("scene", scene_path, "scene JSON file")->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    return sub;
  };

  std::string l_spec, root_spec, point_name, s_spec;
  long box = 5;
  std::optional<std::size_t> ray;

  auto* dual = common(app.add_subcommand("dual", "dual of the input cone"));
  auto* facets = common(app.add_subcommand("facets", "facets of the input cone"));
  auto* hilbert = common(app.add_subcommand("hilbert", "Hilbert basis of the weight cone"));
  auto* saturation = common(app.add_subcommand("saturation", "normality of the weight monoid"));
  auto* classify_cmd = common(app.add_subcommand("classify", "classify a one-parameter subgroup"));
  classify_cmd->add_option("--l", l_spec, "subgroup name or vector")->required();
  auto* straightening = common(app.add_subcommand("straightening", "straightening subtori"));
  auto* roots = common(app.add_subcommand("roots", "Demazure roots in a box"));
  roots->add_option("--box", box, "max-norm bound")->check(CLI::NonNegativeNumber);
  roots->add_option("--ray", ray, "restrict to ray s (1-based)")->check(CLI::PositiveNumber);
  auto* lnd = common(app.add_subcommand("lnd", "derivation of a Demazure root"));
  lnd->add_option("--root", root_spec, "root vector")->required();
  auto* flow = common(app.add_subcommand("flow", "Ga-flow of a point"));
  flow->add_option("--point", point_name, "point name")->required();
  flow->add_option("--root", root_spec, "root vector")->required();
  flow->add_option("--s", s_spec, "flow parameter p/q")->required();
  auto* limit = common(app.add_subcommand("limit", "limit of a Gm-orbit at t -> 0"));
  limit->add_option("--point", point_name, "point name")->required();
  limit->add_option("--l", l_spec, "subgroup name or vector")->required();
  auto* verify = common(app.add_subcommand("verify", "check a compatible Ga-action end to end"));
  verify->add_option("--l", l_spec, "subgroup name or vector")->required();
  verify->add_option("--point", point_name, "point name")->required();
  auto* report = common(app.add_subcommand("report", "full analysis"));
  report->add_option("--box", box, "root box")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    const Scene scene = load_scene(scene_path);
    Report r;
    r.scene_digest = scene.digest;
    CLI::App* sub = app.get_subcommands().front();
    r.command = sub->get_name();
    auto vec = [&](const std::string& text, Side side) { return parse_vector(text, side, scene.rank); };

    if (sub == report) {
      r = build_report(scene, box);
    } else if (sub == dual || sub == facets) {
      r.geometry = geometry_section(scene);
    } else if (sub == hilbert || sub == saturation) {
      r.geometry = geometry_section(scene);
      add_monoid_data(*r.geometry, scene_monoid(scene));
      if (sub == hilbert && !r.geometry->hilbert_basis) {
        throw Error(ErrorKind::RankLimitExceeded, "Hilbert bases are computed up to rank " +
                                                      std::to_string(kMaxHilbertRank));
      }
    } else if (sub == classify_cmd) {
      const AffineMonoid mon = scene_monoid(scene);
      const auto [name, l] = resolve_subgroup(scene, l_spec);
      r.classification = std::vector{classification_entry(mon, name, l)};
    } else if (sub == straightening) {
      r.straightening = straightening_section(scene_monoid(scene));
    } else if (sub == roots) {
      const Cone sigma = sigma_of(scene);
      if (ray && *ray > sigma.rays().size()) {
        throw Error(ErrorKind::InvalidArgument, "--ray " + std::to_string(*ray) + " out of range 1.." +
                                                    std::to_string(sigma.rays().size()));
      }
      r.roots = roots_section(sigma, box, ray ? std::optional<std::size_t>(*ray - 1) : std::nullopt);
    } else if (sub == lnd) {
      const AffineMonoid mon = scene_monoid(scene);
      const HomogeneousLND d(mon, require_root(mon.sigma(), vec(root_spec, Side::M)));
      r.witness_lnd = std::vector{lnd_entry(d, std::nullopt)};
    } else if (sub == flow) {
      const AffineMonoid mon = scene_monoid(scene);
      const HomogeneousLND d(mon, require_root(mon.sigma(), vec(root_spec, Side::M)));
      const ToricPoint x = scene_point(scene, mon, point_name);
      const Rational s = parse_rational(s_spec);
      r.flow = FlowSection{point_name, d.root().e, s, x.coords, ga_flow_point(d, s, x).coords};
    } else if (sub == limit) {
      const AffineMonoid mon = scene_monoid(scene);
      const auto [name, l] = resolve_subgroup(scene, l_spec);
      const ToricPoint x = scene_point(scene, mon, point_name);
      const auto y = limit_point(mon, l, x);
      r.limit = LimitSection{point_name, name, l, x.coords,
                             y ? std::optional(y->coords) : std::nullopt};
    } else if (sub == verify) {
      const AffineMonoid mon = scene_monoid(scene);
      const auto [name, l] = resolve_subgroup(scene, l_spec);
      const ToricPoint x = scene_point(scene, mon, point_name);
      r.classification = std::vector{classification_entry(mon, name, l)};
      r.verification = std::vector{verification_entry(mon, name, l, point_name, x)};
      const auto& v = r.verification->front();
      if (v.verdict == "PASS") r.derived_facts = derived_from(v, r.classification->front());
    }
    out << (format == "json" ? to_json(r) : to_text(r));
    return kExitOk;
  } catch (const Error& e) {
    err << "toricflow: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "toricflow: InvalidArgument: " << e.what() << "\n";
    return kExitMalformed;
  }
}

}  // namespace toricflow
