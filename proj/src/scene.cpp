#include "toricflow/scene.hpp"

#include "toricflow/error.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <cctype>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace toricflow {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, "malformed scene: " + what);
}

Integer integer_of(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  malformed(where + " must hold integers");
}

Rational rational_of(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error&) {
      malformed(where + ": \"" + v.get<std::string>() + "\" is not a rational p/q");
    }
  }
  if (v.is_number_integer()) return Rational(integer_of(v, where));
  malformed(where + " must hold rationals written as \"p/q\" strings");
}

LatticeVector vector_of(const json& v, Side side, std::size_t rank, const std::string& where) {
  if (!v.is_array()) malformed(where + " must be an integer array");
  if (v.size() != rank) {
    throw Error(ErrorKind::RankMismatch, "scene: " + where + " has " + std::to_string(v.size()) +
                                             " entries, rank is " + std::to_string(rank));
  }
  IntVector e;
  for (const auto& x : v) e.push_back(integer_of(x, where));
  return LatticeVector(side, std::move(e));
}

std::vector<LatticeVector> vectors_of(const json& v, Side side, std::size_t rank,
                                      const std::string& where) {
  if (!v.is_array() || v.empty()) malformed(where + " must be a nonempty array of vectors");
  std::vector<LatticeVector> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(vector_of(v[k], side, rank, where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::vector<Rational> rationals_of(const json& v, const std::string& where) {
  if (!v.is_array()) malformed(where + " must be an array");
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(rational_of(x, where));
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto integral = [](const std::string& s) {
    std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
  };
  if (!integral(num) || !integral(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::InvalidArgument, "\"" + text + "\" is not a rational p/q");
  }
  const Integer n(num[0] == '+' ? num.substr(1) : num);
  const Integer d(den);
  if (sgn(d) == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in \"" + text + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

LatticeVector parse_vector(const std::string& text, Side side, std::size_t rank) {
  std::string body = text;
  if (body.size() >= 2 && ((body.front() == '(' && body.back() == ')') ||
                           (body.front() == '[' && body.back() == ']'))) {
    body = body.substr(1, body.size() - 2);
  }
  IntVector e;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(' ');
    const auto b = item.find_last_not_of(' ');
    if (a == std::string::npos) throw Error(ErrorKind::InvalidArgument, "empty entry in \"" + text + "\"");
    const Rational r = parse_rational(item.substr(a, b - a + 1));
    if (r.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "\"" + text + "\" is not an integer vector");
    e.push_back(r.get_num());
  }
  if (e.size() != rank) {
    throw Error(ErrorKind::RankMismatch, "\"" + text + "\" has " + std::to_string(e.size()) +
                                             " entries, rank is " + std::to_string(rank));
  }
  return LatticeVector(side, std::move(e));
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::InvalidArgument, "sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[k]);
  }
  return os.str();
}

Scene parse_scene(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  static const std::set<std::string> known = {"rank", "cone_rays", "monoid_generators", "points",
                                              "subgroups"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) malformed("unknown key \"" + key + "\"");
  }
  if (!doc.contains("rank") || !doc["rank"].is_number_unsigned() || doc["rank"].get<std::uint64_t>() == 0) {
    malformed("\"rank\" must be a positive integer");
  }

  Scene s;
  s.rank = doc["rank"].get<std::size_t>();
  const bool rays = doc.contains("cone_rays");
  const bool gens = doc.contains("monoid_generators");
  if (rays == gens) malformed("give exactly one of \"cone_rays\" and \"monoid_generators\"");
  if (rays) s.cone_rays = vectors_of(doc["cone_rays"], Side::N, s.rank, "cone_rays");
  if (gens) s.monoid_generators = vectors_of(doc["monoid_generators"], Side::M, s.rank, "monoid_generators");

  if (doc.contains("points")) {
    if (!doc["points"].is_object()) malformed("\"points\" must be an object");
    for (const auto& [name, p] : doc["points"].items()) {
      const std::string where = "points." + name;
      if (!p.is_object() || p.size() != 1 || !(p.contains("torus") || p.contains("coords"))) {
        malformed(where + " must be {\"torus\": [...]} or {\"coords\": [...]}");
      }
      ScenePoint pt;
      if (p.contains("torus")) {
        pt.torus = rationals_of(p["torus"], where + ".torus");
        if (pt.torus->size() != s.rank) {
          throw Error(ErrorKind::RankMismatch, "scene: " + where + ".torus needs " +
                                                   std::to_string(s.rank) + " entries");
        }
      } else {
        pt.coords = rationals_of(p["coords"], where + ".coords");
      }
      s.points.emplace(name, std::move(pt));
    }
  }
  if (doc.contains("subgroups")) {
    if (!doc["subgroups"].is_object()) malformed("\"subgroups\" must be an object");
    for (const auto& [name, l] : doc["subgroups"].items()) {
      s.subgroups.emplace(name, vector_of(l, Side::N, s.rank, "subgroups." + name));
    }
  }
  s.digest = "sha256:" + sha256_hex(doc.dump());
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read scene file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

Cone input_cone(const Scene& scene) {
  if (scene.cone_rays) return Cone::from_rays(*scene.cone_rays, scene.rank, Side::N);
  return Cone::from_rays(*scene.monoid_generators, scene.rank, Side::M);
}

AffineMonoid scene_monoid(const Scene& scene) {
  if (scene.monoid_generators) return AffineMonoid(*scene.monoid_generators);
  return saturated_monoid(input_cone(scene).dual());
}

ToricPoint scene_point(const Scene& scene, const AffineMonoid& mon, const std::string& name) {
  const auto it = scene.points.find(name);
  if (it == scene.points.end()) throw Error(ErrorKind::InvalidArgument, "no point named \"" + name + "\"");
  if (it->second.torus) return torus_point(mon, *it->second.torus);
  ToricPoint x{*it->second.coords, Provenance::TorusPoint};
  if (x.coords.size() != mon.size()) {
    throw Error(ErrorKind::RankMismatch, "point \"" + name + "\" needs " + std::to_string(mon.size()) +
                                             " coordinates, one per generator");
  }
  if (!satisfies_relations(mon, x)) {
    throw Error(ErrorKind::InvalidArgument, "point \"" + name + "\" violates the monoid relations");
  }
  return x;
}

std::pair<std::string, LatticeVector> resolve_subgroup(const Scene& scene, const std::string& spec) {
  const auto it = scene.subgroups.find(spec);
  if (it != scene.subgroups.end()) return *it;
  return {spec, parse_vector(spec, Side::N, scene.rank)};
}

}  // namespace toricflow
