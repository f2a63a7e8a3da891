#include "toricflow/report.hpp"

#include "toricflow/error.hpp"

#include <json.hpp>

#include <sstream>

namespace toricflow {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, "not a report document: " + what);
}

const ordered_json& at(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

// --- encoding ----------------------------------------------------------------

ordered_json enc(const FacetEntry& f);
ordered_json enc(const ClassificationEntry& c);
ordered_json enc(const StraighteningEntry& s);
ordered_json enc(const RootEntry& r);
ordered_json enc(const GrowthEntry& g);
ordered_json enc(const GeneratorImage& g);
ordered_json enc(const LndEntry& d);
ordered_json enc(const CheckEntry& c);
ordered_json enc(const VerificationEntry& v);
ordered_json enc(const DerivedFact& f);
ordered_json enc(const Geometry& g);
ordered_json enc(const RootsSection& r);
ordered_json enc(const FlowSection& f);
ordered_json enc(const LimitSection& l);
ordered_json enc(const std::string& s);
ordered_json enc(bool b);
ordered_json enc(std::size_t n);

ordered_json enc(const Integer& v) {
  if (v.fits_slong_p()) return ordered_json(static_cast<std::int64_t>(v.get_si()));
  return ordered_json(v.get_str());
}

ordered_json enc(const Rational& q) { return ordered_json(q.get_str()); }

ordered_json enc(const LatticeVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v.entries()) a.push_back(enc(x));
  return a;
}

template <class T>
ordered_json enc(const std::vector<T>& xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(enc(x));
  return a;
}

template <class T>
ordered_json enc(const std::optional<T>& x) {
  return x ? enc(*x) : ordered_json(nullptr);
}

ordered_json enc(const std::string& s) { return ordered_json(s); }
ordered_json enc(bool b) { return ordered_json(b); }
ordered_json enc(std::size_t n) { return ordered_json(static_cast<std::uint64_t>(n)); }
ordered_json enc(long n) { return ordered_json(static_cast<std::int64_t>(n)); }

ordered_json enc(const ElementTerms& terms) {
  ordered_json o = ordered_json::object();
  for (const auto& [u, c] : terms) o[u.to_string()] = c.get_str();
  return o;
}

ordered_json enc(const FacetEntry& f) {
  return {{"normal", enc(f.normal)}, {"rays", enc(f.rays)}};
}

ordered_json enc(const Geometry& g) {
  return {{"input", g.input},
          {"input_rays", enc(g.input_rays)},
          {"dual_rays", enc(g.dual_rays)},
          {"facets", enc(g.facets)},
          {"generators", enc(g.generators)},
          {"hilbert_basis", enc(g.hilbert_basis)},
          {"saturated", enc(g.saturated)},
          {"saturation_witness", enc(g.saturation_witness)}};
}

ordered_json enc(const ClassificationEntry& c) {
  return {{"subgroup", c.subgroup},
          {"l", enc(c.l)},
          {"kind", c.kind},
          {"zero_face", enc(c.zero_face)},
          {"zero_face_dim", enc(c.zero_face_dim)},
          {"fixed_divisor_s", enc(c.fixed_divisor_s)},
          {"fixed_locus", enc(c.fixed_locus)},
          {"degree_gcd", enc(c.degree_gcd)},
          {"effective", c.effective},
          {"invariant_trdeg", enc(c.invariant_trdeg)}};
}

ordered_json enc(const StraighteningEntry& s) {
  return {{"s", enc(s.s)},
          {"subtorus", enc(s.subtorus)},
          {"facet_rays", enc(s.facet_rays)},
          {"fixed_locus", s.fixed_locus}};
}

ordered_json enc(const RootEntry& r) { return {{"s", enc(r.s)}, {"e", enc(r.e)}}; }

ordered_json enc(const GrowthEntry& g) {
  return {{"s", enc(g.s)},
          {"box1", enc(g.box1)},
          {"count1", enc(g.count1)},
          {"box2", enc(g.box2)},
          {"count2", enc(g.count2)}};
}

ordered_json enc(const RootsSection& r) {
  return {{"box", enc(r.box)}, {"s", enc(r.s)}, {"roots", enc(r.roots)}, {"growth", enc(r.growth)}};
}

ordered_json enc(const GeneratorImage& g) {
  return {{"j", enc(g.j)}, {"u", enc(g.u)}, {"image", enc(g.image)}, {"nilpotency", enc(g.nilpotency)}};
}

ordered_json enc(const LndEntry& d) {
  return {{"subgroup", enc(d.subgroup)},
          {"s", enc(d.s)},
          {"root", enc(d.root)},
          {"generators", enc(d.generators)},
          {"kernel_generators", enc(d.kernel_generators)},
          {"kernel_rank", enc(d.kernel_rank)}};
}

ordered_json enc(const FlowSection& f) {
  return {{"point", f.point},
          {"root", enc(f.root)},
          {"parameter", enc(f.parameter)},
          {"start", enc(f.start)},
          {"image", enc(f.image)}};
}

ordered_json enc(const LimitSection& l) {
  return {{"point", l.point},
          {"subgroup", l.subgroup},
          {"l", enc(l.l)},
          {"start", enc(l.start)},
          {"limit", enc(l.limit)}};
}

ordered_json enc(const CheckEntry& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

ordered_json enc(const VerificationEntry& v) {
  return {{"subgroup", v.subgroup},
          {"l", enc(v.l)},
          {"point", v.point},
          {"coords", enc(v.coords)},
          {"verdict", v.verdict},
          {"message", v.message},
          {"s", enc(v.s)},
          {"root", enc(v.root)},
          {"invariant_generators", enc(v.invariant_generators)},
          {"limit", enc(v.limit)},
          {"flow_parameter", enc(v.flow_parameter)},
          {"checks", enc(v.checks)}};
}

ordered_json enc(const DerivedFact& f) {
  return {{"statement", f.statement}, {"label", f.label}, {"basis", f.basis}};
}

// --- decoding ----------------------------------------------------------------

Integer dec_int(const ordered_json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  bad("expected an integer");
}

Rational dec_rat(const ordered_json& j) {
  if (!j.is_string()) bad("expected a rational string");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0) bad("bad rational " + j.get<std::string>());
  q.canonicalize();
  return q;
}

std::string dec_str(const ordered_json& j) {
  if (!j.is_string()) bad("expected a string");
  return j.get<std::string>();
}

bool dec_bool(const ordered_json& j) {
  if (!j.is_boolean()) bad("expected a boolean");
  return j.get<bool>();
}

std::size_t dec_size(const ordered_json& j) {
  if (!j.is_number_unsigned()) bad("expected a nonnegative integer");
  return j.get<std::size_t>();
}

long dec_long(const ordered_json& j) {
  if (!j.is_number_integer()) bad("expected an integer");
  return j.get<long>();
}

LatticeVector dec_vec(const ordered_json& j, Side side) {
  if (!j.is_array()) bad("expected an integer array");
  IntVector e;
  for (const auto& x : j) e.push_back(dec_int(x));
  return LatticeVector(side, std::move(e));
}

template <class F>
auto dec_list(const ordered_json& j, F f) {
  if (!j.is_array()) bad("expected an array");
  std::vector<decltype(f(j))> out;
  for (const auto& x : j) out.push_back(f(x));
  return out;
}

template <class F>
auto dec_opt(const ordered_json& j, F f) -> std::optional<decltype(f(j))> {
  if (j.is_null()) return std::nullopt;
  return f(j);
}

std::vector<LatticeVector> dec_vecs(const ordered_json& j, Side side) {
  return dec_list(j, [side](const ordered_json& x) { return dec_vec(x, side); });
}

std::vector<Rational> dec_rats(const ordered_json& j) { return dec_list(j, dec_rat); }

LatticeVector dec_exponent(const std::string& key) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')') bad("bad exponent " + key);
  IntVector e;
  std::stringstream ss(key.substr(1, key.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer v;
    if (v.set_str(item, 10) != 0) bad("bad exponent " + key);
    e.push_back(v);
  }
  return LatticeVector(Side::M, std::move(e));
}

ElementTerms dec_terms(const ordered_json& j) {
  if (!j.is_object()) bad("expected an element object");
  ElementTerms out;
  for (const auto& [k, v] : j.items()) out.emplace_back(dec_exponent(k), dec_rat(v));
  return out;
}

Geometry dec_geometry(const ordered_json& j) {
  Geometry g;
  g.input = dec_str(at(j, "input"));
  const Side in = g.input == "cone_rays" ? Side::N : Side::M;
  g.input_rays = dec_vecs(at(j, "input_rays"), in);
  g.dual_rays = dec_vecs(at(j, "dual_rays"), opposite(in));
  g.facets = dec_list(at(j, "facets"), [in](const ordered_json& f) {
    return FacetEntry{dec_vec(at(f, "normal"), opposite(in)), dec_vecs(at(f, "rays"), in)};
  });
  auto mvecs = [](const ordered_json& x) { return dec_vecs(x, Side::M); };
  g.generators = dec_opt(at(j, "generators"), mvecs);
  g.hilbert_basis = dec_opt(at(j, "hilbert_basis"), mvecs);
  g.saturated = dec_opt(at(j, "saturated"), dec_bool);
  g.saturation_witness = dec_opt(at(j, "saturation_witness"),
                                 [](const ordered_json& x) { return dec_vec(x, Side::M); });
  return g;
}

ClassificationEntry dec_classification(const ordered_json& j) {
  ClassificationEntry c;
  c.subgroup = dec_str(at(j, "subgroup"));
  c.l = dec_vec(at(j, "l"), Side::N);
  c.kind = dec_str(at(j, "kind"));
  c.zero_face = dec_opt(at(j, "zero_face"), [](const ordered_json& x) { return dec_vecs(x, Side::M); });
  c.zero_face_dim = dec_opt(at(j, "zero_face_dim"), dec_size);
  c.fixed_divisor_s = dec_opt(at(j, "fixed_divisor_s"), dec_size);
  c.fixed_locus = dec_opt(at(j, "fixed_locus"), dec_str);
  c.degree_gcd = dec_int(at(j, "degree_gcd"));
  c.effective = dec_bool(at(j, "effective"));
  c.invariant_trdeg = dec_opt(at(j, "invariant_trdeg"), dec_size);
  return c;
}

StraighteningEntry dec_straightening(const ordered_json& j) {
  return {dec_size(at(j, "s")), dec_vec(at(j, "subtorus"), Side::N), dec_vecs(at(j, "facet_rays"), Side::M),
          dec_str(at(j, "fixed_locus"))};
}

RootsSection dec_roots(const ordered_json& j) {
  RootsSection r;
  r.box = dec_long(at(j, "box"));
  r.s = dec_opt(at(j, "s"), dec_size);
  r.roots = dec_list(at(j, "roots"), [](const ordered_json& x) {
    return RootEntry{dec_size(at(x, "s")), dec_vec(at(x, "e"), Side::M)};
  });
  r.growth = dec_list(at(j, "growth"), [](const ordered_json& x) {
    return GrowthEntry{dec_size(at(x, "s")), dec_long(at(x, "box1")), dec_size(at(x, "count1")),
                       dec_long(at(x, "box2")), dec_size(at(x, "count2"))};
  });
  return r;
}

LndEntry dec_lnd(const ordered_json& j) {
  LndEntry d;
  d.subgroup = dec_opt(at(j, "subgroup"), dec_str);
  d.s = dec_size(at(j, "s"));
  d.root = dec_vec(at(j, "root"), Side::M);
  d.generators = dec_list(at(j, "generators"), [](const ordered_json& x) {
    return GeneratorImage{dec_size(at(x, "j")), dec_vec(at(x, "u"), Side::M), dec_terms(at(x, "image")),
                          dec_size(at(x, "nilpotency"))};
  });
  d.kernel_generators = dec_list(at(j, "kernel_generators"), dec_size);
  d.kernel_rank = dec_size(at(j, "kernel_rank"));
  return d;
}

VerificationEntry dec_verification(const ordered_json& j) {
  VerificationEntry v;
  v.subgroup = dec_str(at(j, "subgroup"));
  v.l = dec_vec(at(j, "l"), Side::N);
  v.point = dec_str(at(j, "point"));
  v.coords = dec_rats(at(j, "coords"));
  v.verdict = dec_str(at(j, "verdict"));
  v.message = dec_str(at(j, "message"));
  v.s = dec_opt(at(j, "s"), dec_size);
  v.root = dec_opt(at(j, "root"), [](const ordered_json& x) { return dec_vec(x, Side::M); });
  v.invariant_generators = dec_list(at(j, "invariant_generators"), dec_size);
  v.limit = dec_opt(at(j, "limit"), dec_rats);
  v.flow_parameter = dec_opt(at(j, "flow_parameter"), dec_rat);
  v.checks = dec_list(at(j, "checks"), [](const ordered_json& x) {
    return CheckEntry{dec_str(at(x, "name")), dec_bool(at(x, "passed")), dec_str(at(x, "detail"))};
  });
  return v;
}

// --- text --------------------------------------------------------------------

std::string join(const std::vector<LatticeVector>& vs) {
  std::string out;
  for (std::size_t k = 0; k < vs.size(); ++k) out += (k ? " " : "") + vs[k].to_string();
  return vs.empty() ? "-" : out;
}

std::string join(const std::vector<Rational>& xs) {
  std::string out = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + xs[k].get_str();
  return out + ")";
}

std::string join(const std::vector<std::size_t>& js, const char* prefix) {
  std::string out;
  for (std::size_t k = 0; k < js.size(); ++k) out += (k ? " " : "") + std::string(prefix) + std::to_string(js[k]);
  return js.empty() ? "-" : out;
}

std::string terms_text(const ElementTerms& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    out += (k ? " + " : "") + terms[k].second.get_str() + "*chi^" + terms[k].first.to_string();
  }
  return out;
}

}  // namespace

std::string to_json(const Report& r) {
  ordered_json j;
  j["scene_digest"] = r.scene_digest;
  j["command"] = r.command;
  j["geometry"] = enc(r.geometry);
  j["classification"] = enc(r.classification);
  j["straightening"] = enc(r.straightening);
  j["roots"] = enc(r.roots);
  j["witness_lnd"] = enc(r.witness_lnd);
  j["flow"] = enc(r.flow);
  j["limit"] = enc(r.limit);
  j["verification"] = enc(r.verification);
  j["warnings"] = enc(r.warnings);
  j["derived_facts"] = enc(r.derived_facts);
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    bad(e.what());
  }
  Report r;
  r.scene_digest = dec_str(at(j, "scene_digest"));
  r.command = dec_str(at(j, "command"));
  r.geometry = dec_opt(at(j, "geometry"), dec_geometry);
  r.classification = dec_opt(at(j, "classification"),
                             [](const ordered_json& x) { return dec_list(x, dec_classification); });
  r.straightening = dec_opt(at(j, "straightening"),
                            [](const ordered_json& x) { return dec_list(x, dec_straightening); });
  r.roots = dec_opt(at(j, "roots"), dec_roots);
  r.witness_lnd = dec_opt(at(j, "witness_lnd"), [](const ordered_json& x) { return dec_list(x, dec_lnd); });
  r.flow = dec_opt(at(j, "flow"), [](const ordered_json& x) {
    return FlowSection{dec_str(at(x, "point")), dec_vec(at(x, "root"), Side::M), dec_rat(at(x, "parameter")),
                       dec_rats(at(x, "start")), dec_rats(at(x, "image"))};
  });
  r.limit = dec_opt(at(j, "limit"), [](const ordered_json& x) {
    return LimitSection{dec_str(at(x, "point")), dec_str(at(x, "subgroup")), dec_vec(at(x, "l"), Side::N),
                        dec_rats(at(x, "start")), dec_opt(at(x, "limit"), dec_rats)};
  });
  r.verification = dec_opt(at(j, "verification"),
                           [](const ordered_json& x) { return dec_list(x, dec_verification); });
  r.warnings = dec_list(at(j, "warnings"), dec_str);
  r.derived_facts = dec_list(at(j, "derived_facts"), [](const ordered_json& x) {
    return DerivedFact{dec_str(at(x, "statement")), dec_str(at(x, "label")), dec_str(at(x, "basis"))};
  });
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "scene " << r.scene_digest << "\n";
  os << "command " << r.command << "\n";
  if (const auto& g = r.geometry) {
    const bool n_input = g->input == "cone_rays";
    os << "\ngeometry (from " << g->input << ")\n";
    os << "  " << (n_input ? "sigma" : "omega") << " rays: " << join(g->input_rays) << "\n";
    os << "  " << (n_input ? "omega" : "sigma") << " rays: " << join(g->dual_rays) << "\n";
    for (const auto& f : g->facets) os << "  facet normal " << f.normal.to_string() << " on " << join(f.rays) << "\n";
    if (g->generators) os << "  generators x1..: " << join(*g->generators) << "\n";
    if (g->hilbert_basis) os << "  hilbert basis: " << join(*g->hilbert_basis) << "\n";
    if (g->saturated) {
      os << "  saturated: " << (*g->saturated ? "yes" : "no");
      if (g->saturation_witness) os << " (witness " << g->saturation_witness->to_string() << ")";
      os << "\n";
    }
  }
  if (const auto& cs = r.classification) {
    os << "\nclassification\n";
    for (const auto& c : *cs) {
      os << "  " << c.subgroup << " = " << c.l.to_string() << ": " << c.kind;
      if (c.zero_face) os << ", zero face " << join(*c.zero_face) << " (dim " << *c.zero_face_dim << ")";
      if (c.fixed_divisor_s) os << ", fixed divisor D_" << *c.fixed_divisor_s << ": " << *c.fixed_locus;
      os << ", degree gcd " << c.degree_gcd.get_str() << (c.effective ? "" : " (not effective)");
      if (c.invariant_trdeg) os << ", trdeg A_0 = " << *c.invariant_trdeg;
      os << "\n";
    }
  }
  if (const auto& ss = r.straightening) {
    os << "\nstraightening subtori\n";
    for (const auto& s : *ss) {
      os << "  p_" << s.s << " = " << s.subtorus.to_string() << ", facet " << join(s.facet_rays) << ", fixes "
         << s.fixed_locus << "\n";
    }
  }
  if (const auto& rs = r.roots) {
    os << "\nroots (box " << rs->box << (rs->s ? ", s = " + std::to_string(*rs->s) : std::string()) << "): "
       << rs->roots.size() << "\n";
    std::size_t current = 0;
    for (const auto& e : rs->roots) {
      if (e.s != current) {
        os << (current ? "\n" : "") << "  R_" << e.s << ":";
        current = e.s;
      }
      os << " " << e.e.to_string();
    }
    if (current) os << "\n";
    for (const auto& g : rs->growth) {
      os << "  |R_" << g.s << "| grows " << g.count1 << " -> " << g.count2 << " (box " << g.box1 << " -> "
         << g.box2 << ")\n";
    }
  }
  if (const auto& ds = r.witness_lnd) {
    for (const auto& d : *ds) {
      os << "\nlnd for root " << d.root.to_string() << " (s = " << d.s << ")"
         << (d.subgroup ? ", witness for " + *d.subgroup : std::string()) << "\n";
      for (const auto& g : d.generators) {
        os << "  delta(x" << g.j << ") = " << terms_text(g.image) << "  [nilpotency " << g.nilpotency << "]\n";
      }
      os << "  kernel generators: " << join(d.kernel_generators, "x") << ", rank " << d.kernel_rank << "\n";
    }
  }
  if (const auto& f = r.flow) {
    os << "\nflow of " << f->point << " along root " << f->root.to_string() << " at s = " << f->parameter.get_str()
       << "\n  " << join(f->start) << " -> " << join(f->image) << "\n";
  }
  if (const auto& l = r.limit) {
    os << "\nlimit of " << l->point << " under " << l->subgroup << " = " << l->l.to_string() << "\n  "
       << join(l->start) << " -> " << (l->limit ? join(*l->limit) : std::string("no limit")) << "\n";
  }
  if (const auto& vs = r.verification) {
    os << "\nverification\n";
    for (const auto& v : *vs) {
      os << "  " << v.subgroup << " at " << v.point << " " << join(v.coords) << ": " << v.verdict << "\n";
      if (!v.message.empty()) os << "    " << v.message << "\n";
      if (v.root) os << "    root " << v.root->to_string() << " on ray s = " << *v.s << "\n";
      if (v.limit) os << "    limit " << join(*v.limit) << "\n";
      if (v.flow_parameter) os << "    flow parameter " << v.flow_parameter->get_str() << "\n";
      for (const auto& c : v.checks) {
        os << "    [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
      }
    }
  }
  if (!r.warnings.empty()) {
    os << "\nwarnings\n";
    for (const auto& w : r.warnings) os << "  " << w << "\n";
  }
  if (!r.derived_facts.empty()) {
    os << "\nderived facts\n";
    for (const auto& f : r.derived_facts) os << "  (" << f.label << ", " << f.basis << ") " << f.statement << "\n";
  }
  return os.str();
}

}  // namespace toricflow
